#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ears/error.hpp"
#include "ears/fixtures.hpp"
#include "ears/orbit.hpp"
#include "support.hpp"

using namespace ears;
using support::lattice;
using support::make;
using support::product_even;

namespace {

std::vector<RationalVector> closed_form_window(const EarsDescriptor& r, const RationalVector& a, std::int64_t b) {
    auto o = orbit_closed_form(r, a);
    std::vector<RationalVector> out;
    for (const auto& v : anisotropic_window(r, Q(b)))
        if (o.contains(r, v)) out.push_back(v);
    return out;
}

// Number of classes of window points of X_c under v ~ w iff v - w in T.
std::size_t brute_cosets(const std::vector<RationalVector>& pts, const Lattice& t) {
    std::vector<RationalVector> reps;
    for (const auto& p : pts) {
        bool found = false;
        for (const auto& q : reps)
            if (t.contains(p - q)) found = true;
        if (!found) reps.push_back(p);
    }
    return reps.size();
}

} // namespace

TEST_CASE("orbit of a simple root in the nullity-2 example") {
    auto r = make("A1", 2, product_even(2));
    auto o = orbit_closed_form(r, RationalVector{0, 0, 1, 0, 0});
    CHECK(o.translation == Lattice::standard(2, 2));
    CHECK(o.finite_orbit.size() == 2);
    CHECK(o.contains(r, RationalVector{2, -4, -1, 0, 0}));
    CHECK_FALSE(o.contains(r, RationalVector{1, 0, 1, 0, 0}));
}

TEST_CASE("orbit of gamma in the nullity-3 example") {
    auto f = nullity3_example();
    auto o = orbit_closed_form(f.ears, f.gamma);
    CHECK(o.translation == Lattice::standard(3, 2));
    CHECK(o.contains(f.ears, RationalVector{-1, 3, 1, -1, 0, 0, 0}));
    CHECK_FALSE(o.contains(f.ears, RationalVector{0, 1, 1, 1, 0, 0, 0}));
}

TEST_CASE("isotropic vectors are fixed") {
    auto r = make("A1", 2, product_even(2));
    RationalVector z{1, 1, 0, 0, 0};
    auto o = orbit_closed_form(r, z);
    CHECK(o.translation.rank() == 0);
    CHECK(o.contains(r, z));
    CHECK(orbit_bfs(r, z, 4) == std::vector<RationalVector>{z});
    CHECK(orbit_bfs(r, RationalVector(5), 4) == std::vector<RationalVector>{RationalVector(5)});
}

TEST_CASE("finite A1 orbit") {
    auto r = make("A1", 0, SemilatticeData::from_lattice(Lattice::standard(0)));
    CHECK(orbit_bfs(r, RationalVector{1}, 4) == std::vector<RationalVector>{RationalVector{-1}, RationalVector{1}});
}

TEST_CASE("closed form agrees with breadth-first search") {
    for (const auto& [name, r] : support::test_matrix()) {
        CAPTURE(name);
        std::int64_t b = r.nullity() >= 3 ? 2 : 4;
        OrbitBfs bfs(r, b);
        auto roots = anisotropic_window(r, Q(1));
        for (std::size_t i = 0; i < roots.size(); i += 1 + roots.size() / 12) {
            CAPTURE(roots[i].str());
            CHECK(bfs.orbit(roots[i]) == closed_form_window(r, roots[i], b));
        }
    }
}

TEST_CASE("orbits are invariant under every window reflection") {
    for (const auto& [name, r] : support::test_matrix()) {
        CAPTURE(name);
        auto roots = anisotropic_window(r, Q(1));
        auto o = orbit_closed_form(r, roots.front());
        auto members = closed_form_window(r, roots.front(), 2);
        for (const auto& b : roots)
            for (std::size_t i = 0; i < members.size(); i += 1 + members.size() / 8)
                CHECK(o.contains(r, reflect(r.space(), b, members[i])));
    }
}

TEST_CASE("orbit counts equal finite orbits times T-cosets") {
    for (const auto& [name, r] : support::test_matrix()) {
        CAPTURE(name);
        auto table = root_orbits(r);
        for (int c = 0; c < 3; ++c) {
            const SemilatticeData* x = r.class_set(c);
            if (!x) continue;
            std::size_t n = 0;
            for (const auto& o : table.orbits)
                if (o.cls == c) ++n;
            CHECK(n == brute_cosets(x->window(Q(4)), translation_lattice(r, c)));
        }
        // every window root lies in exactly the orbit the table names
        for (const auto& v : anisotropic_window(r, Q(1))) {
            int id = table.orbit_of(r, v);
            REQUIRE(id >= 0);
            CHECK(orbit_closed_form(r, v).contains(r, table.orbits[static_cast<std::size_t>(id)].rep));
        }
    }
}

TEST_CASE("orbit table ordering is deterministic") {
    auto f = nullity3_example();
    auto a = root_orbits(f.ears), b = root_orbits(f.ears);
    REQUIRE(a.orbits.size() == b.orbits.size());
    for (std::size_t i = 0; i < a.orbits.size(); ++i) CHECK(a.orbits[i].rep == b.orbits[i].rep);
    // Z^3 mod 2Z^3: eight orbits, the all-odd one first
    CHECK(a.orbits.size() == 8);
    CHECK(a.orbits.front().min_norm2 == 3);
}

TEST_CASE("class gcds") {
    auto b2 = build_finite(Family::B, 2);
    CHECK(class_gcd(b2, Sh, Sh) == 2);
    CHECK(class_gcd(b2, Lg, Sh) == 2);
    CHECK(class_gcd(b2, Sh, Lg) == 1);
    auto a2 = build_finite(Family::A, 2);
    CHECK(class_gcd(a2, Sh, Sh) == 1);
    auto a1 = build_finite(Family::A, 1);
    CHECK(class_gcd(a1, Sh, Sh) == 2);
}
