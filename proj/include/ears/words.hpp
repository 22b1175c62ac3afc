#pragma once

#include "ears/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ears {

// A word r_{d1} r_{d2} ... r_{dk} in root reflections.
struct GeneratorWord {
    std::vector<RationalVector> letters;

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }
    GeneratorWord reversed() const;
    bool operator==(const GeneratorWord& o) const { return letters == o.letters; }
    std::string str() const;
};

GeneratorWord operator+(const GeneratorWord& a, const GeneratorWord& b);

struct GroupElement {
    RationalMatrix matrix;
    std::optional<GeneratorWord> word;
};

// Exact product of the reflection matrices, left to right.
GroupElement evaluate(const GeneratorWord& w, const AmbientSpace& space);

// alpha and beta are linearly dependent
bool dependent(const RationalVector& a, const RationalVector& b);

} // namespace ears
