#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ears/error.hpp"
#include "ears/lattice.hpp"
#include "support.hpp"

#include <random>

using namespace ears;
using support::oracle::IV;

TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/6") == Q(1) / Q(2));
    CHECK(parse_rational("-4") == Q(-4));
    CHECK(to_string(Q(6) / Q(4)) == "3/2");
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("vector arithmetic and ordering") {
    RationalVector a{1, 2, 3}, b{0, 2, 5};
    CHECK(a + b == RationalVector{1, 4, 8});
    CHECK(a - b == RationalVector{1, 0, -2});
    CHECK(-a == RationalVector{-1, -2, -3});
    CHECK(b < a);
    CHECK((a * Q(1, 2)).is_integral() == false);
    CHECK(a.slice(1, 2) == RationalVector{2, 3});
    CHECK(concat(a, b).dim() == 6);
}

TEST_CASE("rank and nilpotency") {
    CHECK(rank({RationalVector{1, 2}, RationalVector{2, 4}}) == 1);
    CHECK(rank({RationalVector{1, 2}, RationalVector{0, 1}}) == 2);
    CHECK(rank(std::vector<RationalVector>{}) == 0);
    auto n = RationalMatrix::from_rows(std::vector<std::vector<long>>{{0, 1, 5}, {0, 0, 1}, {0, 0, 0}});
    CHECK(is_nilpotent(n));
    CHECK_FALSE(is_nilpotent(RationalMatrix::identity(3)));
}

TEST_CASE("ambient space layout") {
    AmbientSpace sp(2, RationalMatrix::from_rows(std::vector<std::vector<long>>{{1}}));
    CHECK(sp.dim() == 5);
    auto g = sp.form().gram();
    CHECK(g(0, 3) == 1);
    CHECK(g(1, 4) == 1);
    CHECK(g(2, 2) == 1);
    CHECK(g(0, 0) == 0);
    CHECK(sp.radical_basis().size() == 2);
    RationalVector v{1, 2, 3, 4, 5};
    CHECK(sp.v0_part(v) == RationalVector{1, 2});
    CHECK(sp.dot_part(v) == RationalVector{3});
    CHECK(sp.dual_part(v) == RationalVector{4, 5});
    CHECK(sp.embed(RationalVector{1, 2}, RationalVector{3}) == RationalVector{1, 2, 3, 0, 0});
}

TEST_CASE("reflection matrices agree with the integer oracle") {
    AmbientSpace sp(2, RationalMatrix::from_rows(std::vector<std::vector<long>>{{1}}));
    auto g = support::to_iv(sp.form().gram());
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> d(-3, 3);
    for (int t = 0; t < 50; ++t) {
        RationalVector a{d(rng), d(rng), 1, 0, 0};
        auto m = reflection_matrix(sp, a);
        CHECK(support::to_iv(m) == support::oracle::reflection_matrix(g, support::to_iv(a)));
        CHECK((m * m).is_identity());
        CHECK(m.transpose() * sp.form().gram() * m == sp.form().gram());
        CHECK(m * a == -a);
        CHECK(reflect(sp, a, a) == -a);
    }
}

TEST_CASE("isotropic and mismatched inputs are rejected") {
    AmbientSpace sp(1, RationalMatrix::from_rows(std::vector<std::vector<long>>{{1}}));
    CHECK_THROWS_AS(reflection_matrix(sp, RationalVector{1, 0, 0}), IsotropicRoot);
    CHECK_THROWS_AS(reflection_matrix(sp, RationalVector{1, 0}), DimensionMismatch);
    CHECK(coroot(sp, RationalVector{0, 1, 0}) == RationalVector{0, 2, 0});
}

TEST_CASE("checked arithmetic overflows loudly") {
    CHECK_THROWS_AS(checked::mul(INT64_MAX / 2, 3), Overflow);
    CHECK_THROWS_AS(checked::add(INT64_MAX, 1), Overflow);
    CHECK(checked::lcm(4, 6) == 12);
    CHECK(checked::floordiv(-3, 2) == -2);
}

TEST_CASE("Hermite normal form") {
    auto h = hermite_normal_form({{2, 4}, {3, 6}, {0, 5}}, 2);
    REQUIRE(h.size() == 2);
    CHECK(h[0] == IntVec{1, 2});
    CHECK(h[1] == IntVec{0, 5});
    CHECK(hermite_normal_form({{0, 0}}, 2).empty());
}

TEST_CASE("lattices") {
    auto l = Lattice::generated(2, {RationalVector{2, 0}, RationalVector{1, 1}});
    CHECK(l.contains(RationalVector{3, 1}));
    CHECK_FALSE(l.contains(RationalVector{1, 0}));
    CHECK(l.index_in(Lattice::standard(2)) == 2);
    CHECK(Lattice::standard(2, 2).subset_of(l));
    CHECK(l.scaled(Q(1, 2)).contains(RationalVector(std::vector<Q>{Q(1, 2), Q(1, 2)})));
    CHECK((l + Lattice::standard(2)) == Lattice::standard(2));
    CHECK(l.intersect(Lattice::standard(2, 2)) == Lattice::standard(2, 2));
    CHECK(Lattice::zero(3).rank() == 0);
}

TEST_CASE("coset sets against brute force") {
    auto even = CosetSet::from(Lattice::standard(2, 2), {RationalVector{0, 0}, RationalVector{1, 0}, RationalVector{0, 1}});
    std::set<IV> brute;
    for (long x = -3; x <= 3; ++x)
        for (long y = -3; y <= 3; ++y)
            if ((x * y) % 2 == 0) brute.insert({x, y});
    std::set<IV> got;
    for (const auto& v : even.window(Q(3))) got.insert(support::to_iv(v));
    CHECK(got == brute);
    auto odd = CosetSet::from(Lattice::standard(2, 2), {RationalVector{1, 1}});
    CHECK(even.intersect(odd).is_empty());
    CHECK(even.unite(odd) == CosetSet::of_lattice(Lattice::standard(2)));
    CHECK(CosetSet::of_lattice(Lattice::standard(2)).minus(odd) == even);
    CHECK(odd.subset_of(CosetSet::of_lattice(Lattice::standard(2))));
    CHECK(even.refined(Lattice::standard(2, 4)).num_reps() == 12);
    CHECK(even.generated() == Lattice::standard(2));
    CHECK(odd.negate() == odd);
    CHECK(odd.scaled(Q(2)).contains(RationalVector{2, 6}));
}
