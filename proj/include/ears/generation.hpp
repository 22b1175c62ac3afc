#pragma once

#include "ears/ears.hpp"
#include "ears/orbit.hpp"
#include "ears/words.hpp"

#include <string>
#include <vector>

namespace ears {

struct SearchOptions {
    int depth = 8;
    std::size_t budget = 1000000;
};

enum class Verdict { Generates, NotGenerates, Inconclusive };
const char* verdict_name(Verdict v);

struct GenerationResult {
    Verdict verdict = Verdict::Inconclusive;
    std::string reason;
    int group = -1;
    // for Generates: one word per orbit of the group, product equal to r_target
    std::vector<RationalVector> targets;
    std::vector<GeneratorWord> certificates;
};

// Do the reflections of R^x minus the saturated orbit group generate W?
GenerationResult generation_check(const EarsDescriptor& r, const OrbitTable& table, int group,
                                  const SearchOptions& opt = {});
GenerationResult generation_check(const EarsDescriptor& r, const OrbitDescriptor& removed,
                                  const SearchOptions& opt = {});

// Searches words over the given roots whose product is r_target. Empty if
// nothing is found within depth and budget. Letters and target must lie in R.
std::optional<GeneratorWord> find_certificate(const EarsDescriptor& r, const std::vector<RationalVector>& letters,
                                              const RationalVector& target, const SearchOptions& opt);

enum class MinimalityKind { Minimal, NotMinimal, Unknown };
const char* minimality_name(MinimalityKind k);

struct MinimalityResult {
    MinimalityKind kind = MinimalityKind::Unknown;
    OrbitTable table;
    std::vector<GenerationResult> checks; // in group order, up to the first Generates
    int removable_group = -1;
    std::vector<int> unresolved;
    const GenerationResult* certificate() const;
};

MinimalityResult minimality(const EarsDescriptor& r, const SearchOptions& opt = {});

struct ExtractionStep {
    TypeSymbol from, to;
    std::vector<RationalVector> removed; // orbit representatives
    GenerationResult check;
};

struct ExtractionResult {
    EarsDescriptor result;
    std::vector<ExtractionStep> chain;
};

ExtractionResult extract_minimal(const EarsDescriptor& r, const SearchOptions& opt = {});

bool allowed_type_change(const TypeSymbol& from, const TypeSymbol& to);

} // namespace ears
