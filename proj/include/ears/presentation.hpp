#pragma once

#include "ears/generation.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace ears {

struct CoxeterOrder {
    enum Kind { Finite, Infinite, Exceeded } kind = Finite;
    std::int64_t order = 0; // Finite: the order; otherwise the cap
    // Infinite: the power m with (r_a r_b)^m - 1 nonzero and nilpotent
    std::int64_t unipotent_power = 0;
    std::string str() const;
};

CoxeterOrder coxeter_order(const AmbientSpace& space, const RationalVector& a, const RationalVector& b,
                           std::int64_t cap = 12);

// r1 r2 r3 r1 r2 r3 r2 r1 r3 r2 r1 r3 over indices 0, 1, 2
const std::vector<int>& twelve_letter_pattern();

struct CoxeterDecision {
    bool coxeter = true;
    std::string reason;
    std::vector<RationalVector> roots; // alpha_1, alpha_2, alpha_3 when coxeter is false
    GeneratorWord witness;
    bool witness_is_identity = false;
    bool witness_reduced = false; // no two equal adjacent letters
};

CoxeterDecision coxeter_presentation_decision(const EarsDescriptor& r);

// Z_2 letter counts per ~-saturated orbit group
struct ParityVector {
    std::map<int, int> bits;
    bool is_zero() const;
    int at(int group) const;
    std::string str() const;
    bool operator==(const ParityVector& o) const { return bits == o.bits; }
};

ParityVector parity(const GeneratorWord& w, const EarsDescriptor& r, const OrbitTable& t);
ParityVector parity(const GeneratorWord& w, const EarsDescriptor& r);

struct ObstructionResult {
    enum Kind { Obstruction, NoneFound, Inconclusive } kind = NoneFound;
    GeneratorWord word; // evaluates to 1 with nonzero parity
    ParityVector parity;
    RationalMatrix evaluated;
    MinimalityResult minimality;
    const char* kind_name() const;
};

ObstructionResult conjugation_obstruction(const EarsDescriptor& r, const SearchOptions& opt = {});

struct RewriteResult {
    GeneratorWord word;
    std::vector<std::string> log;
};

// Removes letters outside `preferred` in dependent pairs: the leftmost such
// letter moves right (conjugating what it passes) until it meets a partner.
// Partner choices are searched (bounded) for the fewest outside letters left.
RewriteResult conjugation_rewrite(const GeneratorWord& w, const EarsDescriptor& r,
                                  const std::function<bool(const RationalVector&)>& preferred);

} // namespace ears
