#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcg/coset.hpp"
#include "mcg/error.hpp"
#include "mcg/snf.hpp"

using namespace mcg;

TEST_CASE("cyclic group of order three") {
    Presentation p = parse_presentation("gens: a\nrel: a^3\n");
    CosetResult r = todd_coxeter(p, {}, 100);
    REQUIRE(r.completed);
    CHECK(r.index == 3);
    CHECK(r.defined >= 3);
}

TEST_CASE("klein four group") {
    Presentation p = parse_presentation("gens: a b\nrel: a^2\nrel: b^2\nrel: a b a b\n");
    CosetResult r = todd_coxeter(p, {}, 100);
    REQUIRE(r.completed);
    CHECK(r.index == 4);

    CosetResult h = todd_coxeter(p, {parse_word("a")}, 100);
    REQUIRE(h.completed);
    CHECK(h.index == 2);
}

TEST_CASE("symmetric group on three letters over subgroups") {
    Presentation p = parse_presentation("gens: a b\nrel: a^2\nrel: b^3\nrel: (a b)^2\n");
    CHECK(todd_coxeter(p, {}, 100).index == 6);
    CHECK(todd_coxeter(p, {parse_word("b")}, 100).index == 2);
    CHECK(todd_coxeter(p, {parse_word("a")}, 100).index == 3);
    CHECK(todd_coxeter(p, {parse_word("a"), parse_word("b")}, 100).index == 1);
}

TEST_CASE("infinite index hits the cap instead of throwing") {
    // Z x| Z is infinite over the twist subgroup
    Presentation p = parse_presentation("gens: A1 U\nrel: U A1 U^-1 = A1^-1\n");
    CosetResult r = todd_coxeter(p, {parse_word("A1")}, 10000);
    CHECK_FALSE(r.completed);
    CHECK(r.defined >= 10000);
    CHECK(todd_coxeter(p, {}, 50).completed == false);
}

TEST_CASE("runs are reproducible") {
    Presentation p = parse_presentation("gens: a b\nrel: a^2\nrel: b^3\nrel: (a b)^2\n");
    CosetResult r1 = todd_coxeter(p, {parse_word("a b")}, 200);
    CosetResult r2 = todd_coxeter(p, {parse_word("a b")}, 200);
    CHECK(r1.completed == r2.completed);
    CHECK(r1.index == r2.index);
    CHECK(r1.defined == r2.defined);
}

TEST_CASE("completed index is divisible by the abelianization order") {
    for (const char* text :
         {"gens: a\nrel: a^6\n", "gens: a b\nrel: a^2\nrel: b^3\nrel: (a b)^2\n",
          "gens: a b\nrel: a^2\nrel: b^2\nrel: a b a b\n"}) {
        Presentation p = parse_presentation(text);
        Abelianization ab = abelianization(p);
        REQUIRE(ab.free_rank == 0);
        mpz_class order = 1;
        for (const auto& t : ab.torsion) order *= t;
        CosetResult r = todd_coxeter(p, {}, 1000);
        REQUIRE(r.completed);
        CHECK(r.index % order == 0);
    }
}

TEST_CASE("rejections") {
    Presentation p = parse_presentation("gens: a\nrel: a^3\n");
    try {
        todd_coxeter(p, {parse_word("z")}, 100);
        FAIL_CHECK("accepted a word outside the alphabet");
    } catch (const error& e) {
        CHECK(e.code() == errc::malformed_data);
    }
    CHECK_THROWS_AS(todd_coxeter(p, {}, 0), error);
}
