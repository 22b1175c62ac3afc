#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ears/semilattice.hpp"
#include "support.hpp"

#include <random>

using namespace ears;
using support::oracle::IV;

namespace {

std::set<IV> window_set(const SemilatticeData& s, long b) {
    std::set<IV> out;
    for (const auto& v : s.window(Q(b))) out.insert(support::to_iv(v));
    return out;
}

SemilatticeData only_11() { return SemilatticeData::make(2, support::units(2), {RationalVector{1, 1}}); }

} // namespace

TEST_CASE("verify_semilattice on the basic examples") {
    CHECK(verify_semilattice(support::lattice(2)).pass());
    CHECK(verify_semilattice(support::product_even(2)).pass());
    auto bad = verify_semilattice(only_11());
    CHECK_FALSE(bad.pass());
    CHECK_FALSE(bad.zero_ok);
    CHECK(bad.spans);
}

TEST_CASE("a translated set may omit zero") {
    auto e = SemilatticeData::make(1, {RationalVector{1}}, {RationalVector{1}}, true);
    CHECK(verify_semilattice(e).pass());
    CHECK_FALSE(e.contains(RationalVector{0}));
    CHECK(e.contains(RationalVector{-5}));
}

TEST_CASE("closure failures carry a witness") {
    // {0, (1,0)} + 2Z^2 plus (0,1) + 4Z^2 style data: (0,1) + 2(1,0) must be present
    auto s = SemilatticeData::make(2, support::units(2, 2), {RationalVector{0, 0}, RationalVector{1, 0}, RationalVector{0, 1}});
    auto rep = verify_semilattice(s);
    if (!rep.closed) {
        REQUIRE(rep.witness.has_value());
        CHECK_FALSE(s.contains(*rep.witness));
    }
    auto span = verify_semilattice(SemilatticeData::make(2, {RationalVector{1, 0}}, {RationalVector{0, 0}}));
    CHECK_FALSE(span.spans);
}

TEST_CASE("windows") {
    CHECK(window_set(support::lattice(1), 2) == std::set<IV>{{-2}, {-1}, {0}, {1}, {2}});
    CHECK(window_set(support::product_even(2), 1) == std::set<IV>{{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}});
    auto e = SemilatticeData::make(1, {RationalVector{1}}, {RationalVector{1}}, true);
    CHECK(window_set(e, 3) == std::set<IV>{{-3}, {-1}, {1}, {3}});
}

TEST_CASE("sum conditions") {
    auto z2 = support::lattice(2);
    CHECK(sum_condition(z2, z2, 1));
    CHECK(sum_condition(z2, z2, 3));
    auto z3 = support::lattice(3);
    auto e = SemilatticeData::make(3, support::units(3), {RationalVector{1, 1, 1}}, true);
    CHECK(disjoint_from_double(e, z3));
    CHECK(sum_condition(e, z3, 4));
    CHECK(sum_condition(e, z3, 2));
    CHECK_FALSE(sum_condition(e, z3, 1));
    CHECK_FALSE(disjoint_from_double(z3, z3));
}

TEST_CASE("sum conditions against a brute-force oracle") {
    // L = 2Z^2 u ((1,1) + 2Z^2), S = product-even
    auto s = support::product_even(2);
    auto l = SemilatticeData::make(2, support::units(2), {RationalVector{0, 0}, RationalVector{1, 1}});
    auto ls = support::oracle::semilattice_points({{1, 0}, {0, 1}}, {{0, 0}, {1, 1}}, 4);
    auto ss = support::oracle::semilattice_points({{1, 0}, {0, 1}}, {{0, 0}, {1, 0}, {0, 1}}, 4);
    auto brute = [](const std::set<IV>& a, const std::set<IV>& b, long k) {
        for (const auto& x : a)
            for (const auto& y : b) {
                IV z{x[0] + k * y[0], x[1] + k * y[1]};
                if (std::labs(z[0]) > 4 || std::labs(z[1]) > 4) continue;
                if (!a.count(z)) return false;
            }
        return true;
    };
    CHECK(sum_condition(l, s, 2) == brute(ls, ss, 2));
    CHECK(sum_condition(l, s, 1) == brute(ls, ss, 1));
    CHECK(sum_condition(s, l, 1) == brute(ss, ls, 1));
    CHECK(sum_condition(s, s, 2) == brute(ss, ss, 2));
    CHECK(sum_condition(l, s, 2));
    CHECK_FALSE(sum_condition(l, s, 1));
}

TEST_CASE("canonical forms make equality structural") {
    auto a = SemilatticeData::make(2, {RationalVector{1, 1}, RationalVector{0, 1}},
                                   {RationalVector{0, 0}, RationalVector{3, 0}, RationalVector{0, -1}});
    CHECK(a == support::product_even(2));
    CHECK(support::lattice(2) != support::product_even(2));
    CHECK(SemilatticeData::from_lattice(Lattice::standard(2)).is_lattice());
    CHECK_FALSE(support::product_even(2).is_lattice());
}

TEST_CASE("random semilattices: window round trip, closure and index bounds") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> d(-2, 2);
    int built = 0;
    for (int t = 0; t < 60; ++t) {
        std::size_t n = 1 + t % 3;
        std::vector<RationalVector> basis = support::units(n);
        if (t % 2) basis[0][0] = 2;
        std::vector<RationalVector> cosets{RationalVector(n)};
        for (int c = 0; c < 2; ++c) {
            RationalVector v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = d(rng);
            cosets.push_back(v);
        }
        auto s = SemilatticeData::make(n, basis, cosets);
        if (!verify_semilattice(s).pass()) continue;
        ++built;
        CHECK(s.num_cosets() >= 1);
        CHECK(s.num_cosets() <= (std::size_t{1} << n));
        // 2<S> in S and S in <S>
        for (const auto& b : s.lattice().basis()) CHECK(s.contains(b * Q(2)));
        std::vector<IV> ib;
        for (const auto& b : s.set().modulus().basis()) ib.push_back(support::to_iv(b * Q(1, 2)));
        std::vector<IV> ic;
        for (const auto& c : s.cosets()) ic.push_back(support::to_iv(c));
        auto brute = support::oracle::semilattice_points(ib, ic, 3, 8);
        CHECK(window_set(s, 3) == brute);
        for (const auto& v : s.window(Q(3))) {
            CHECK(s.contains(v));
            CHECK(s.lattice().contains(v));
        }
    }
    CHECK(built > 10);
}
