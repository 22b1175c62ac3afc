#pragma once

// Shared builders and brute-force oracles. The oracles only use plain
// integer arithmetic so they stay independent of the library internals.

#include "ears/ears.hpp"

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace support {

using namespace ears;

inline std::vector<RationalVector> units(std::size_t n, long s = 1) {
    std::vector<RationalVector> out;
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector e(n);
        e[i] = s;
        out.push_back(e);
    }
    return out;
}

inline SemilatticeData lattice(std::size_t n, long s = 1) {
    return SemilatticeData::from_lattice(Lattice::standard(n, Q(s)));
}

// {z in Z^n : z1 ... zn even}
inline SemilatticeData product_even(std::size_t n) {
    std::vector<RationalVector> c;
    for (std::size_t m = 0; m + 1 < (std::size_t{1} << n); ++m) {
        RationalVector v(n);
        for (std::size_t i = 0; i < n; ++i)
            if (m >> i & 1) v[i] = 1;
        c.push_back(v);
    }
    return SemilatticeData::make(n, units(n), c);
}

inline EarsDescriptor make(const char* t, int nu, const SemilatticeData& s,
                           const std::optional<SemilatticeData>& l = std::nullopt,
                           const std::optional<SemilatticeData>& e = std::nullopt) {
    return construct_ears(TypeSymbol::parse(t), nu, s, l, e);
}

struct Named {
    const char* name;
    EarsDescriptor r;
};

// Covers the four construction cases: simply laced, B/C/F/G, BC_1, BC_l.
inline std::vector<Named> test_matrix() {
    auto e1 = SemilatticeData::make(1, {RationalVector{1}}, {RationalVector{1}}, true);
    auto e3 = SemilatticeData::make(3, units(3, 2), {RationalVector{2, 2, 2}}, true);
    return {
        {"A1 nu2 product-even", make("A1", 2, product_even(2))},
        {"A1 nu3 Z^3", make("A1", 3, lattice(3))},
        {"A2 nu1", make("A2", 1, lattice(1))},
        {"D4 nu1", make("D4", 1, lattice(1))},
        {"B2 nu1 (Z, 2Z)", make("B2", 1, lattice(1), lattice(1, 2))},
        {"B2 nu2 (Z^2, product-even)", make("B2", 2, lattice(2), product_even(2))},
        {"C3 nu1 (Z, 2Z)", make("C3", 1, lattice(1), lattice(1, 2))},
        {"G2 nu1 (Z, 3Z)", make("G2", 1, lattice(1), lattice(1, 3))},
        {"F4 nu1", make("F4", 1, lattice(1), lattice(1))},
        {"BC1 nu1 (Z, 1+2Z)", make("BC1", 1, lattice(1), std::nullopt, e1)},
        {"BC2 nu1 (Z, Z, 1+2Z)", make("BC2", 1, lattice(1), lattice(1), e1)},
        {"BC1 nu3 (product-even, (2,2,2)+4Z^3)", make("BC1", 3, product_even(3), std::nullopt, e3)},
    };
}

namespace oracle {

using IV = std::vector<long>;

inline long dot(const IV& a, const std::vector<IV>& g, const IV& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * g[i][j] * b[j];
    return s;
}

// v - 2 (v, a) / (a, a) a, integral inputs assumed to stay integral
inline IV reflect(const std::vector<IV>& g, const IV& a, const IV& v) {
    long num = 2 * dot(v, g, a), den = dot(a, g, a);
    IV out(v);
    for (std::size_t i = 0; i < v.size(); ++i) out[i] -= num * a[i] / den;
    return out;
}

inline std::vector<IV> reflection_matrix(const std::vector<IV>& g, const IV& a) {
    std::size_t n = a.size();
    std::vector<IV> m(n, IV(n));
    for (std::size_t j = 0; j < n; ++j) {
        IV e(n);
        e[j] = 1;
        IV c = reflect(g, a, e);
        for (std::size_t i = 0; i < n; ++i) m[i][j] = c[i];
    }
    return m;
}

inline std::vector<IV> product(const std::vector<IV>& a, const std::vector<IV>& b) {
    std::size_t n = a.size();
    std::vector<IV> m(n, IV(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) m[i][j] += a[i][k] * b[k][j];
    return m;
}

// Points of C + 2 Z-span(B) with max-norm <= bound; integral data only.
inline std::set<IV> semilattice_points(const std::vector<IV>& basis, const std::vector<IV>& cosets, long bound,
                                       long coeff = 6) {
    std::set<IV> out;
    std::size_t k = basis.size(), n = cosets.front().size();
    IV x(k, -coeff);
    for (;;) {
        for (const auto& c : cosets) {
            IV v(c);
            bool in = true;
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < k; ++j) v[i] += 2 * x[j] * basis[j][i];
                if (std::labs(v[i]) > bound) in = false;
            }
            if (in) out.insert(v);
        }
        std::size_t j = 0;
        while (j < k && x[j] == coeff) x[j++] = -coeff;
        if (j == k) break;
        ++x[j];
    }
    return out;
}

} // namespace oracle

inline oracle::IV to_iv(const RationalVector& v) {
    oracle::IV out;
    for (const auto& x : v.coords()) out.push_back(x.get_num().get_si());
    return out;
}

inline std::vector<oracle::IV> to_iv(const RationalMatrix& m) {
    std::vector<oracle::IV> out(m.rows(), oracle::IV(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_num().get_si();
    return out;
}

} // namespace support
