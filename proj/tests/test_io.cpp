#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ears/error.hpp"
#include "ears/io.hpp"
#include "support.hpp"

using namespace ears;

namespace {

bool same(const EarsDescriptor& a, const EarsDescriptor& b) {
    return a.type() == b.type() && a.nullity() == b.nullity() && a.S() == b.S() && a.L() == b.L() && a.E() == b.E();
}

} // namespace

TEST_CASE("rationals survive serialization exactly") {
    CHECK(to_json(Q(3)) == Json(3));
    CHECK(to_json(Q(-3) / Q(4)) == Json("-3/4"));
    CHECK(rational_from_json(Json("6/4")) == Q(3) / Q(2));
    CHECK(rational_from_json(Json(-2)) == Q(-2));
    CHECK_THROWS_AS(rational_from_json(Json(1.5)), ParseError);
    CHECK_THROWS_AS(rational_from_json(Json("1/x")), ParseError);
    CHECK(vector_from_json(parse_json("[1, \"1/2\", 0]")) == RationalVector(std::vector<Q>{1, Q(1) / Q(2), 0}));
}

TEST_CASE("descriptor round trip over the test matrix") {
    for (const auto& [name, r] : support::test_matrix()) {
        CAPTURE(name);
        auto j = descriptor_to_json(r);
        auto back = descriptor_from_json(parse_json(dump(j)));
        CHECK(same(r, back));
        CHECK(dump(descriptor_to_json(back)) == dump(j));
    }
}

TEST_CASE("reading a hand-written config") {
    auto j = parse_json(R"({"type": "A1", "rank": 1, "nullity": 2,
        "S": {"lattice": [[1, 0], [0, 1]], "cosets": [[0, 0], [1, 0], [0, 1]]}})");
    auto r = descriptor_from_json(j);
    CHECK(same(r, support::make("A1", 2, support::product_even(2))));
    auto out = descriptor_to_json(r);
    CHECK(out["gram"].size() == 5);
    CHECK(out["S"]["translated"] == false);
    // E defaults to translated
    auto bc = descriptor_from_json(parse_json(R"({"type": "BC1", "nullity": 1,
        "S": {"lattice": [[1]], "cosets": [[0], [1]]}, "E": {"lattice": [[1]], "cosets": [[1]]}})"));
    CHECK(bc.E()->translated());
}

TEST_CASE("malformed configs") {
    CHECK_THROWS_AS(parse_json("{\"type\": "), ParseError);
    CHECK_THROWS_AS(descriptor_from_json(parse_json("[]")), ParseError);
    CHECK_THROWS_AS(descriptor_from_json(parse_json(R"({"type": "A1"})")), ParseError);
    CHECK_THROWS_AS(descriptor_from_json(parse_json(R"({"type": "A1", "nullity": "two", "S": {}})")), ParseError);
    CHECK_THROWS_AS(descriptor_from_json(parse_json(R"({"type": "A1", "nullity": 1, "S": {"cosets": [[0]]}})")),
                    ParseError);
    CHECK_THROWS_AS(
        descriptor_from_json(parse_json(R"({"type": "A1", "nullity": 2, "S": {"lattice": [[1]], "cosets": [[0]]}})")),
        RankMismatch);
    CHECK_THROWS_AS(descriptor_from_json(parse_json(
                        R"({"type": "A2", "rank": 3, "nullity": 1, "S": {"lattice": [[1]], "cosets": [[0]]}})")),
                    RankMismatch);
    CHECK_THROWS_AS(read_json_file("/nonexistent/config.json"), ParseError);
}

TEST_CASE("reports are plain JSON") {
    auto r = support::make("A1", 2, support::product_even(2));
    auto a = to_json(verify_axioms(r, 2));
    CHECK(a["pass"] == true);
    CHECK(a["caveat"] == "verified on window 2");
    CHECK(a["results"].size() == 8);
    auto t = to_json(root_orbits(r));
    CHECK(t["orbits"].size() == root_orbits(r).orbits.size());
    CHECK(dump(t) == dump(to_json(root_orbits(r))));
}
