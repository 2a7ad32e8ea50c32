#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcg/error.hpp"
#include "mcg/word.hpp"

#include <random>

using namespace mcg;

TEST_CASE("parse and format") {
    Word w = parse_word("A1 U^-1 B");
    REQUIRE(w.size() == 3);
    CHECK(w[0] == Letter{"A1", 1});
    CHECK(w[1] == Letter{"U", -1});
    CHECK(w[2] == Letter{"B", 1});
    CHECK(format_word(w) == "A1 U^-1 B");
    CHECK(parse_word("").empty());
    CHECK(parse_word("  \t ").empty());
    CHECK(format_word({}) == "1");
}

TEST_CASE("exponent sugar") {
    CHECK(parse_word("A^3") == parse_word("A A A"));
    CHECK(parse_word("A^-2") == parse_word("A^-1 A^-1"));
    CHECK(parse_word("A^0").empty());
    CHECK(parse_word("a*b^2") == parse_word("a b b"));
}

TEST_CASE("parenthesized powers") {
    CHECK(parse_word("(A2 U)^2") == parse_word("A2 U A2 U"));
    CHECK(parse_word("(A B^-1)^-2") == parse_word("B A^-1 B A^-1"));
    CHECK(parse_word("(A (B C)^2)^2") == parse_word("A B C B C A B C B C"));
    CHECK(parse_word("(A)") == parse_word("A"));
    CHECK(parse_word("(A B)^0").empty());
}

TEST_CASE("parse errors") {
    for (const char* bad : {"^2", "A^", "(A", "A)", "(A B", "2A", "A$", "(A B)^"}) {
        CAPTURE(bad);
        try {
            parse_word(bad);
            FAIL_CHECK((std::string("no exception for ") + bad));
        } catch (const error& e) {
            CHECK(e.code() == errc::malformed_data);
        }
    }
}

TEST_CASE("group operations") {
    Word w = parse_word("A B^-1 C");
    CHECK(inverse(w) == parse_word("C^-1 B A^-1"));
    CHECK(concat(parse_word("A"), parse_word("B")) == parse_word("A B"));
    CHECK(power(parse_word("A B"), 3) == parse_word("A B A B A B"));
    CHECK(power(parse_word("A B"), -1) == parse_word("B^-1 A^-1"));
    CHECK(power(w, 0).empty());
}

TEST_CASE("free reduction") {
    CHECK(free_reduce(parse_word("A B B^-1 A^-1 C")) == parse_word("C"));
    CHECK(free_reduce(parse_word("A A^-1")).empty());
    CHECK(is_identity(parse_word("B A A^-1 B^-1")));
    CHECK_FALSE(is_identity(parse_word("A B A^-1")));
    // nested cancellation collapses in one call
    CHECK(free_reduce(parse_word("A B C C^-1 B^-1 A^-1")).empty());
}

TEST_CASE("free_reduce is idempotent and kills w w^-1 (randomized)") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> len(0, 12), gen(0, 2), sgn(0, 1);
    const char* names[] = {"a", "b", "c"};
    for (int trial = 0; trial < 1000; ++trial) {
        Word w;
        int k = len(rng);
        for (int i = 0; i < k; ++i) w.push_back({names[gen(rng)], sgn(rng) ? 1 : -1});
        Word r = free_reduce(w);
        CHECK(free_reduce(r) == r);
        CHECK(free_reduce(concat(w, inverse(w))).empty());
        CHECK(free_reduce(parse_word(format_word(r))) == r);
    }
}
