#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcg/error.hpp"
#include "mcg/snf.hpp"
#include "mcg/tietze.hpp"

#include <random>
#include <string>

using namespace mcg;

TEST_CASE("add and remove a generator") {
    Presentation p = parse_presentation("gens: a b\nrel: a^2\n");
    Presentation q = tietze(p, AddGen{"d", parse_word("a b")});
    CHECK(q.has_generator("d"));
    CHECK(q.relators.size() == p.relators.size() + 1);
    CHECK_FALSE(q.extended);
    CHECK(abelianization(q) == abelianization(p));

    // the defining relator is the last one added
    Presentation back = tietze(q, RemoveGen{"d", q.relators.size() - 1});
    CHECK_FALSE(back.has_generator("d"));
    CHECK(back.generators == p.generators);
    CHECK(back.relators == p.relators);

    CHECK_THROWS_AS(tietze(p, AddGen{"a", parse_word("b")}), error);
    CHECK_THROWS_AS(tietze(p, AddGen{"e", parse_word("z")}), error);
    CHECK_THROWS_AS(tietze(q, RemoveGen{"d", 0}), error); // not its defining relator
}

TEST_CASE("witnessed relator addition") {
    Presentation p = parse_presentation("gens: a b\nrel: a^2\n");
    Derivation d;
    d.terms.push_back({0, parse_word("b"), 1});
    Presentation q = tietze(p, AddRelator{parse_word("b a a b^-1"), d});
    CHECK(q.relators.size() == 2);
    CHECK_FALSE(q.extended);
    CHECK(abelianization(q) == abelianization(p));

    // a wrong certificate is rejected
    Derivation bad;
    bad.terms.push_back({0, parse_word("a"), 1});
    try {
        tietze(p, AddRelator{parse_word("b a a b^-1"), bad});
        FAIL_CHECK("bad witness accepted");
    } catch (const error& e) {
        CHECK(e.code() == errc::invalid_move);
    }

    // no certificate: accepted, but the presentation is marked extended
    Presentation ext = tietze(p, AddRelator{parse_word("b"), std::nullopt});
    CHECK(ext.extended);
}

TEST_CASE("witnessed relator removal") {
    Presentation p = parse_presentation("gens: a\nrel: a^2\nrel: a^4\n");
    Derivation d;
    d.terms.push_back({0, {}, 1});
    d.terms.push_back({0, {}, 1});
    Presentation q = tietze(p, RemoveRedundantRelator{1, d});
    CHECK(q.relators.size() == 1);
    CHECK_FALSE(q.extended);
    CHECK(abelianization(q) == abelianization(p));
}

TEST_CASE("simplify keeps the group") {
    Presentation p = parse_presentation("gens: a b\nrel: a b b^-1 a\nrel: a a^-1\n");
    Presentation q = tietze(p, Simplify{});
    CHECK(abelianization(q) == abelianization(p));
    for (const Word& r : q.relators) CHECK(free_reduce(r) == r);
}

TEST_CASE("random witnessed move sequences preserve the abelianization") {
    std::mt19937 rng(433494437);
    Presentation base = parse_presentation("gens: a b\nrel: a^2 b^-2\nrel: a^4\n");
    const Abelianization expect = abelianization(base);

    std::uniform_int_distribution<int> move_kind(0, 2), word_len(0, 4), sgn(0, 1);
    auto random_word = [&](const Presentation& p) {
        Word w;
        std::uniform_int_distribution<int> pick(0, static_cast<int>(p.generators.size()) - 1);
        int k = word_len(rng);
        for (int i = 0; i < k; ++i)
            w.push_back({p.generators[pick(rng)], sgn(rng) ? 1 : -1});
        return w;
    };

    int fresh = 0;
    for (int trial = 0; trial < 100; ++trial) {
        Presentation p = base;
        std::uniform_int_distribution<int> seq_len(1, 5);
        int moves = seq_len(rng);
        for (int m = 0; m < moves; ++m) {
            switch (move_kind(rng)) {
            case 0:
                p = tietze(p, AddGen{"x" + std::to_string(fresh++), random_word(p)});
                break;
            case 1: {
                Derivation d;
                std::uniform_int_distribution<int> terms(1, 3),
                    rel(0, static_cast<int>(p.relators.size()) - 1);
                Word w;
                int k = terms(rng);
                for (int i = 0; i < k; ++i) {
                    Derivation::Term t{static_cast<size_t>(rel(rng)), random_word(p),
                                       sgn(rng) ? 1 : -1};
                    Word conj = concat(t.conjugator,
                                       concat(power(p.relators[t.relator], t.exp),
                                              inverse(t.conjugator)));
                    w = concat(w, conj);
                    d.terms.push_back(std::move(t));
                }
                p = tietze(p, AddRelator{free_reduce(w), d});
                break;
            }
            default: p = tietze(p, Simplify{}); break;
            }
            CHECK_FALSE(p.extended);
        }
        CHECK(abelianization(p) == expect);
    }
}
