#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ears/error.hpp"
#include "support.hpp"

using namespace ears;
using support::lattice;
using support::make;
using support::product_even;

namespace {

SemilatticeData odd1() { return SemilatticeData::make(1, {RationalVector{1}}, {RationalVector{1}}, true); }

std::set<RationalVector> as_set(const std::vector<RationalVector>& v) { return {v.begin(), v.end()}; }

} // namespace

TEST_CASE("construction arity and constraints") {
    CHECK_THROWS_AS(make("A2", 1, lattice(1), lattice(1)), WrongArity);
    CHECK_THROWS_AS(make("B2", 1, lattice(1)), WrongArity);
    CHECK_THROWS_AS(make("BC1", 1, lattice(1)), WrongArity);
    CHECK_THROWS_AS(make("BC2", 1, lattice(1), std::nullopt, odd1()), WrongArity);
    // S must span
    auto thin = SemilatticeData::make(2, {RationalVector{1, 0}}, {RationalVector{0, 0}});
    CHECK_THROWS_AS(make("A1", 2, thin), ConstraintViolation);
    // L + 2S in L fails for L = 2Z, S = Z with k = 2? no: 2Z + 2Z = 2Z. Use L = 4Z.
    CHECK_THROWS_AS(make("B2", 1, lattice(1), lattice(1, 4)), ConstraintViolation);
    // B3 needs L to be a lattice
    CHECK_THROWS_AS(make("B3", 2, lattice(2), product_even(2)), ConstraintViolation);
    CHECK_NOTHROW(make("B2", 2, lattice(2), product_even(2)));
    // E cap 2S must be empty
    auto e_even = SemilatticeData::make(1, {RationalVector{1}}, {RationalVector{0}}, true);
    CHECK_THROWS_AS(make("BC1", 1, lattice(1), std::nullopt, e_even), ConstraintViolation);
    CHECK_THROWS_AS(make("A1", 1, lattice(2)), RankMismatch);
}

TEST_CASE("constraint messages name the violated inclusion") {
    try {
        make("B2", 1, lattice(1), lattice(1, 4));
        FAIL("no throw");
    } catch (const ConstraintViolation& e) {
        CHECK(std::string(e.what()).find("L") != std::string::npos);
    }
}

TEST_CASE("root membership") {
    auto r = make("A1", 2, product_even(2));
    CHECK(is_root(r, RationalVector(5)) == RootKind::Isotropic);
    CHECK(is_root(r, RationalVector{1, 0, 1, 0, 0}) == RootKind::Anisotropic);
    CHECK(is_root(r, RationalVector{1, 1, 1, 0, 0}) == RootKind::NotRoot);
    CHECK(is_root(r, RationalVector{2, 1, -1, 0, 0}) == RootKind::Anisotropic);
    CHECK(is_root(r, RationalVector{0, 2, 2, 0, 0}) == RootKind::NotRoot);
    // R0 = S + S = Z^2 here
    CHECK(is_root(r, RationalVector{1, 1, 0, 0, 0}) == RootKind::Isotropic);
    CHECK(is_root(r, RationalVector{0, 0, 1, 1, 0}) == RootKind::NotRoot);
    CHECK_THROWS_AS(is_root(r, RationalVector{1, 0}), DimensionMismatch);
    auto z3 = make("A1", 3, lattice(3));
    for (const auto& v : anisotropic_window(z3, Q(2))) {
        CHECK(is_root(z3, v) == RootKind::Anisotropic);
        CHECK(is_root(z3, v * Q(2)) == RootKind::NotRoot);
    }
}

TEST_CASE("every constructed system passes the axioms on small windows") {
    for (const auto& [name, r] : support::test_matrix()) {
        CAPTURE(name);
        for (std::int64_t b : {2, 3}) {
            auto rep = verify_axioms(r, b);
            CHECK(rep.pass());
            CHECK(rep.caveat() == "verified on window " + std::to_string(b));
            for (const auto& a : rep.results) {
                CAPTURE(a.axiom);
                CHECK(a.pass);
            }
        }
    }
}

TEST_CASE("the nullity-2 example on window 4") {
    auto rep = verify_axioms(make("A1", 2, product_even(2)), 4);
    CHECK(rep.pass());
    CHECK(rep.results.size() == 8);
}

TEST_CASE("adding 2 alpha is flagged by R4") {
    auto r = make("A1", 1, lattice(1));
    auto bad = with_extra_roots(r, {RationalVector{0, 2, 0}});
    auto rep = verify_axioms(bad, 2);
    CHECK_FALSE(rep.pass());
    const auto& r4 = rep.at("R4");
    CHECK_FALSE(r4.pass);
    REQUIRE_FALSE(r4.witness.empty());
    CHECK(r4.witness.front() == RationalVector{0, 1, 0});
}

TEST_CASE("isotropic root closure") {
    auto a1 = make("A1", 0, SemilatticeData::from_lattice(Lattice::standard(0)));
    auto ir = irc({RationalVector{1}, RationalVector{-1}}, a1.space());
    CHECK(as_set(ir) == std::set<RationalVector>{RationalVector{0}, RationalVector{1}, RationalVector{-1}});
    for (const auto& [name, r] : support::test_matrix()) {
        CAPTURE(name);
        CHECK(irc_isotropic(r) == r.isotropic());
    }
    auto z3 = make("A1", 3, lattice(3));
    CHECK(irc_isotropic(z3) == CosetSet::of_lattice(Lattice::standard(3)));
}

TEST_CASE("windowed IRC recovers R and is idempotent") {
    auto r = make("A1", 2, product_even(2));
    auto an = anisotropic_window(r, Q(2));
    auto full = irc(an, r.space());
    // differences of window roots cover the isotropic window of half the size
    for (const auto& v : isotropic_window(r, Q(1))) CHECK(std::find(full.begin(), full.end(), v) != full.end());
    for (const auto& v : full) CHECK(is_root(r, v) != RootKind::NotRoot);
    std::vector<RationalVector> an2;
    for (const auto& v : full)
        if (r.space().pair(v, v) != 0) an2.push_back(v);
    CHECK(as_set(irc(an2, r.space())) == as_set(full));
}

TEST_CASE("the reduction map hits exactly the finite roots") {
    for (const auto& [name, r] : support::test_matrix()) {
        CAPTURE(name);
        std::set<IntVec> img, fin(r.finite().roots().begin(), r.finite().roots().end());
        for (const auto& v : anisotropic_window(r, Q(2))) img.insert(scale_to_int(r.space().dot_part(v), 1));
        CHECK(img == fin);
    }
}

TEST_CASE("trimming BC systems") {
    auto bc1 = make("BC1", 1, lattice(1), std::nullopt, odd1());
    auto t = trim_report(bc1);
    CHECK(t.trimmed.type() == TypeSymbol::parse("A1"));
    CHECK(t.trimmed.S() == SemilatticeData::from_lattice(Lattice::standard(1, Q(1, 2))));
    CHECK(t.s_prime_report.pass());
    CHECK(t.s_prime_closed);
    CHECK(trim_same_reflections(bc1, t.trimmed, 2));
    CHECK_THROWS_AS(trim(t.trimmed), NotBCType);
    CHECK_THROWS_AS(trim(make("A1", 1, lattice(1))), NotBCType);

    auto bc2 = make("BC2", 1, lattice(1), lattice(1), odd1());
    auto t2 = trim_report(bc2);
    CHECK(t2.trimmed.type() == TypeSymbol::parse("B2"));
    CHECK(t2.l_plus_2s_prime);
    CHECK(t2.s_prime_plus_l);
    CHECK(trim_same_reflections(bc2, t2.trimmed, 2));
    CHECK(verify_axioms(t2.trimmed, 2).pass());
}

TEST_CASE("trimming the nullity-3 BC1 system") {
    auto e3 = SemilatticeData::make(3, support::units(3, 2), {RationalVector{2, 2, 2}}, true);
    auto bc = make("BC1", 3, product_even(3), std::nullopt, e3);
    auto t = trim(bc);
    CHECK(t.type() == TypeSymbol::parse("A1"));
    CHECK(t.S().contains(RationalVector{1, 1, 1}));
    CHECK(trim_same_reflections(bc, t, 2));
}

TEST_CASE("characterization") {
    auto r = make("A1", 2, product_even(2));
    auto rep = characterize(anisotropic_window(r, Q(2)), r.space());
    CHECK(rep.pass());
    REQUIRE(rep.type.has_value());
    CHECK(*rep.type == TypeSymbol::parse("A1"));

    auto a1 = make("A1", 1, lattice(1));
    auto doubles = characterize({RationalVector{0, 1, 0}, RationalVector{0, -1, 0}, RationalVector{0, 2, 0},
                                 RationalVector{0, -2, 0}, RationalVector{1, 1, 0}, RationalVector{-1, -1, 0}},
                                a1.space());
    CHECK_FALSE(doubles.no_doubles);
    CHECK_FALSE(doubles.pass());

    // two orthogonal short roots of B2
    auto b2 = make("B2", 0, SemilatticeData::from_lattice(Lattice::standard(0)),
                   SemilatticeData::from_lattice(Lattice::standard(0)));
    std::vector<RationalVector> sh;
    for (const auto& v : length_classes(b2.finite()).sh)
        sh.push_back(RationalVector::from_ints(std::vector<std::int64_t>(v.begin(), v.end())));
    auto red = characterize(sh, b2.space());
    CHECK_FALSE(red.finite_root_system);
    CHECK_FALSE(red.pass());

    auto iso = characterize({RationalVector{1, 0, 0}}, a1.space());
    CHECK_FALSE(iso.pass());
}
