#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcg/error.hpp"
#include "mcg/schreier.hpp"
#include "mcg/snf.hpp"

#include <map>
#include <string>

using namespace mcg;

namespace {

Word embed(const RSResult& r, const Word& w) {
    std::map<std::string, Word> table;
    for (const auto& [name, image] : r.embedding) table[name] = image;
    Word out;
    for (const Letter& l : w) {
        Word piece = table.at(l.gen);
        if (l.exp < 0) piece = inverse(piece);
        out = concat(out, piece);
    }
    return free_reduce(out);
}

} // namespace

TEST_CASE("free rank 2 gives free rank 3") {
    Presentation p{{"a", "b"}, {}};
    RSResult r = reidemeister_schreier_index2(p, {{"a", -1}});
    CHECK(r.subgroup.generators.size() == 3);
    CHECK(r.subgroup.relators.empty());
    // embedded generators: b, a^2 and the conjugate a b a^-1
    bool saw_square = false, saw_conj = false, saw_plain = false;
    for (const auto& [name, image] : r.embedding) {
        if (image == parse_word("a a")) saw_square = true;
        if (free_reduce(image) == parse_word("a b a^-1")) saw_conj = true;
        if (image == parse_word("b")) saw_plain = true;
    }
    CHECK(saw_square);
    CHECK(saw_conj);
    CHECK(saw_plain);
}

TEST_CASE("nielsen-schreier rank law, n = 1..8") {
    for (int n = 1; n <= 8; ++n) {
        Presentation p;
        for (int i = 1; i <= n; ++i) p.generators.push_back("x" + std::to_string(i));
        RSResult r = reidemeister_schreier_index2(p, {{"x1", -1}});
        CHECK(r.subgroup.generators.size() == static_cast<size_t>(2 * n - 1));
        CHECK(r.subgroup.relators.empty());
        CHECK(r.embedding.size() == r.subgroup.generators.size());
    }
}

TEST_CASE("one relator on three generators gives 5 generators, 2 relators") {
    Presentation p{{"x1", "x2", "u"}, {parse_word("u x1 u^-1 x1")}};
    RSResult r = reidemeister_schreier_index2(p, {{"u", -1}});
    CHECK(r.subgroup.generators.size() == 5);
    CHECK(r.subgroup.relators.size() == 2);
    // euler characteristic law: gens - relators doubles minus one
    CHECK(static_cast<int>(r.subgroup.generators.size()) -
              static_cast<int>(r.subgroup.relators.size()) ==
          2 * (3 - 1) - 1);
    // every subgroup relator maps to a consequence of the original relator;
    // the abelianized necessary condition is decidable
    for (const Word& rel : r.subgroup.relators)
        CHECK(abelian_consequence_check(p, embed(r, rel)));
}

TEST_CASE("subgroup relators embed trivially for the klein bottle group") {
    Presentation p{{"A1", "U"}, {parse_word("U A1 U^-1 A1")}};
    RSResult r = reidemeister_schreier_index2(p, {{"U", -1}, {"A1", 1}});
    CHECK(r.subgroup.generators.size() == 3);
    CHECK(r.subgroup.relators.size() == 2);
    for (const Word& rel : r.subgroup.relators)
        CHECK(abelian_consequence_check(p, embed(r, rel)));
    // index-2 subgroup of Z x| Z here is Z x Z
    CHECK(abelianization(r.subgroup) == Abelianization{2, {}});
}

TEST_CASE("rejections") {
    Presentation p{{"a", "b"}, {}};
    try {
        reidemeister_schreier_index2(p, {});
        FAIL_CHECK("accepted an all-positive sign map");
    } catch (const error& e) {
        CHECK(e.code() == errc::index_one);
    }
    try {
        reidemeister_schreier_index2(p, {{"z", -1}});
        FAIL_CHECK("accepted an unknown generator");
    } catch (const error& e) {
        CHECK(e.code() == errc::malformed_data);
    }
    Presentation q{{"a"}, {parse_word("a^3")}};
    try {
        reidemeister_schreier_index2(q, {{"a", -1}});
        FAIL_CHECK("accepted a relator of odd sign");
    } catch (const error& e) {
        CHECK(e.code() == errc::relator_not_in_subgroup);
    }
}
