#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcg/error.hpp"
#include "mcg/presentation.hpp"

using namespace mcg;

TEST_CASE("text format") {
    Presentation p = parse_presentation(
        "# Klein bottle group\n"
        "gens: A1 U\n"
        "\n"
        "rel: U A1 U^-1 = A1^-1\n"
        "rel: A1 A1^-1   # vacuous\n");
    CHECK(p.generators == std::vector<std::string>{"A1", "U"});
    REQUIRE(p.relators.size() == 2);
    CHECK(p.relators[0] == parse_word("U A1 U^-1 A1"));
    CHECK(p.relators[1] == parse_word("A1 A1^-1"));
    CHECK_FALSE(p.extended);

    Presentation q = parse_presentation(format_presentation(p));
    CHECK(q.generators == p.generators);
    CHECK(q.relators == p.relators);
}

TEST_CASE("text format rejections") {
    CHECK_THROWS_AS(parse_presentation("rel: a\n"), error);         // relator before gens
    CHECK_THROWS_AS(parse_presentation("gens: a\nrel: a = a = a\n"), error);
    CHECK_THROWS_AS(parse_presentation("gens: a a\n"), error);      // duplicate
    CHECK_THROWS_AS(parse_presentation("gens: a\nrel: b\n"), error); // unknown letter
    CHECK_THROWS_AS(parse_presentation("gens: a\nnonsense\n"), error);
}

TEST_CASE("validate") {
    Presentation p{{"a", "b"}, {parse_word("a b")}};
    CHECK_NOTHROW(p.validate());
    CHECK(p.has_generator("a"));
    CHECK_FALSE(p.has_generator("c"));

    Presentation dup{{"a", "a"}, {}};
    CHECK_THROWS_AS(dup.validate(), error);
    Presentation bad{{"a"}, {parse_word("b")}};
    CHECK_THROWS_AS(bad.validate(), error);
}

TEST_CASE("json round trip") {
    Presentation p = parse_presentation("gens: A1 A2 U\nrel: (A1 U)^2 A2^-1\n");
    Presentation q = presentation_from_json(presentation_to_json(p));
    CHECK(q.generators == p.generators);
    CHECK(q.relators == p.relators);
    CHECK(presentation_to_json(q) == presentation_to_json(p));
}

TEST_CASE("json rejections carry malformed_data") {
    for (const char* bad :
         {"not json", "{}", "{\"generators\": [\"a\"], \"relators\": [[[\"a\"]]]}",
          "{\"generators\": [\"a\"], \"relators\": [[[\"b\", 1]]]}"}) {
        CAPTURE(bad);
        try {
            presentation_from_json(bad);
            FAIL_CHECK((std::string("no exception for ") + bad));
        } catch (const error& e) {
            CHECK(e.code() == errc::malformed_data);
        }
    }
}
