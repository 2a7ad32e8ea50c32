#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcg/brown.hpp"
#include "mcg/error.hpp"

#include <algorithm>

using namespace mcg;

namespace {

bool has_relator(const Presentation& p, const std::string& w) {
    Word target = free_reduce(parse_word(w));
    return std::any_of(p.relators.begin(), p.relators.end(),
                       [&](const Word& r) { return free_reduce(r) == target; });
}

} // namespace

TEST_CASE("single vertex, no edges") {
    BrownData d;
    d.vertices.push_back({"v", parse_presentation("gens: a\nrel: a^2\n")});
    BrownResult r = brown_assembly(d, false);
    CHECK(r.complete);
    CHECK(r.pres.generators == std::vector<std::string>{"a"});
    REQUIRE(r.pres.relators.size() == 1);
    CHECK(free_reduce(r.pres.relators[0]) == parse_word("a a"));
}

TEST_CASE("two vertices joined by a tree edge") {
    BrownData d;
    d.vertices.push_back({"u", parse_presentation("gens: a\nrel: a^2\n")});
    d.vertices.push_back({"v", parse_presentation("gens: b\nrel: b^3\n")});
    d.edges.push_back({"e", "u", "v", true, {}});

    BrownResult raw = brown_assembly(d, false);
    CHECK(raw.pres.generators == std::vector<std::string>{"a", "b", "g_e"});
    CHECK(raw.pres.relators.size() == 3); // a^2, b^3, g_e
    CHECK(has_relator(raw.pres, "a a"));
    CHECK(has_relator(raw.pres, "b b b"));
    CHECK(has_relator(raw.pres, "g_e"));

    BrownResult red = brown_assembly(d, true);
    CHECK(red.complete);
    CHECK(red.stuck.empty());
    CHECK(red.pres.generators == std::vector<std::string>{"a", "b"});
    CHECK(red.pres.relators.size() == 2);
    CHECK(has_relator(red.pres, "a a"));
    CHECK(has_relator(red.pres, "b b b"));
}

TEST_CASE("edge stabilizer generators conjugate across the edge") {
    BrownData d;
    d.vertices.push_back({"u", parse_presentation("gens: a\n")});
    d.vertices.push_back({"v", parse_presentation("gens: b\n")});
    BrownEdge e{"e", "u", "v", true, {}};
    e.stab.push_back({parse_word("a"), parse_word("b^2")});
    d.edges.push_back(e);

    BrownResult raw = brown_assembly(d, false);
    CHECK(has_relator(raw.pres, "g_e^-1 a g_e b^-2"));
    CHECK(has_relator(raw.pres, "g_e"));

    BrownResult red = brown_assembly(d, true);
    CHECK(red.complete);
    CHECK(has_relator(red.pres, "a b^-2"));
}

TEST_CASE("loop edge off the tree is an hnn letter") {
    BrownData d;
    d.vertices.push_back({"u", parse_presentation("gens: a\n")});
    BrownEdge e{"e", "u", "u", false, {}};
    e.stab.push_back({parse_word("a"), parse_word("a")});
    d.edges.push_back(e);

    BrownResult raw = brown_assembly(d, false);
    CHECK(raw.pres.generators == std::vector<std::string>{"a", "g_e"});
    REQUIRE(raw.pres.relators.size() == 1);
    CHECK(has_relator(raw.pres, "g_e^-1 a g_e a^-1"));

    BrownResult red = brown_assembly(d, true);
    CHECK_FALSE(red.complete);
    CHECK(red.stuck == std::vector<std::string>{"e"});
    CHECK(red.pres.has_generator("g_e"));
}

TEST_CASE("a triangle determines its third edge") {
    BrownData d;
    d.vertices.push_back({"u", parse_presentation("gens: a\n")});
    d.vertices.push_back({"v", parse_presentation("gens: b\n")});
    d.vertices.push_back({"w", parse_presentation("gens: c\n")});
    d.edges.push_back({"e1", "u", "v", true, {}});
    d.edges.push_back({"e2", "v", "w", true, {}});
    d.edges.push_back({"e3", "u", "w", false, {}});
    BrownTriangle t;
    t.a = "e1";
    t.b = "e2";
    t.c = "e3";
    t.ha = parse_word("a");
    d.triangles.push_back(t);

    BrownResult raw = brown_assembly(d, false);
    // relator h_a g_a h_b g_b g_c^-1 (h_c, h empty)
    CHECK(has_relator(raw.pres, "a g_e1 g_e2 g_e3^-1"));

    BrownResult red = brown_assembly(d, true);
    CHECK(red.complete);
    CHECK(red.stuck.empty());
    for (const auto& g : red.pres.generators) CHECK(g.rfind("g_", 0) != 0);
    // the triangle relator collapses once g_e1 = g_e2 = 1 and g_e3 = a
    for (const Word& r : red.pres.relators) CHECK_FALSE(free_reduce(r).empty());
}

TEST_CASE("malformed and incomplete cell data") {
    BrownData dup;
    dup.vertices.push_back({"u", parse_presentation("gens: a\n")});
    dup.vertices.push_back({"u", parse_presentation("gens: b\n")});
    CHECK_THROWS_AS(brown_assembly(dup, false), error);

    BrownData dangling;
    dangling.vertices.push_back({"u", parse_presentation("gens: a\n")});
    dangling.edges.push_back({"e", "u", "zzz", false, {}});
    try {
        brown_assembly(dangling, false);
        FAIL_CHECK("edge to a missing vertex accepted");
    } catch (const error& e) {
        CHECK(e.code() == errc::incomplete_data);
    }

    BrownData badtri;
    badtri.vertices.push_back({"u", parse_presentation("gens: a\n")});
    BrownTriangle t;
    t.a = t.b = t.c = "nope";
    badtri.triangles.push_back(t);
    CHECK_THROWS_AS(brown_assembly(badtri, false), error);
}
