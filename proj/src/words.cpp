#include "ears/words.hpp"

#include "ears/error.hpp"

#include <algorithm>
#include <sstream>

namespace ears {

GeneratorWord GeneratorWord::reversed() const {
    GeneratorWord w{letters};
    std::reverse(w.letters.begin(), w.letters.end());
    return w;
}

std::string GeneratorWord::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < letters.size(); ++i) os << (i ? ", " : "") << letters[i].str();
    os << "]";
    return os.str();
}

GeneratorWord operator+(const GeneratorWord& a, const GeneratorWord& b) {
    GeneratorWord w{a.letters};
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
}

GroupElement evaluate(const GeneratorWord& w, const AmbientSpace& space) {
    RationalMatrix m = RationalMatrix::identity(space.dim());
    for (const auto& a : w.letters) {
        if (a.dim() != space.dim()) throw DimensionMismatch("word letter " + a.str());
        m = m * reflection_matrix(space, a);
    }
    return GroupElement{m, w};
}

bool dependent(const RationalVector& a, const RationalVector& b) {
    if (a.dim() != b.dim()) return false;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            if (a[i] * b[j] != a[j] * b[i]) return false;
    return true;
}

} // namespace ears
