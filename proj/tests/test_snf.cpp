#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcg/error.hpp"
#include "mcg/snf.hpp"

#include <algorithm>
#include <random>
#include <vector>

using namespace mcg;

namespace {

IntMatrix make(size_t r, size_t c, std::initializer_list<long> vals) {
    IntMatrix m(r, c);
    size_t k = 0;
    for (long v : vals) m.a[k++] = v;
    return m;
}

std::vector<mpz_class> diag_factors(const SnfResult& s) {
    std::vector<mpz_class> out;
    for (size_t i = 0; i < s.rank; ++i) out.push_back(s.d.at(i, i));
    return out;
}

void check_snf_contract(const IntMatrix& m) {
    SnfResult s = smith_normal_form(m);
    CHECK(mul(mul(s.u, m), s.v) == s.d);
    CHECK(abs(determinant(s.u)) == 1);
    CHECK(abs(determinant(s.v)) == 1);
    for (size_t i = 0; i < s.d.rows; ++i)
        for (size_t j = 0; j < s.d.cols; ++j) {
            if (i != j) CHECK(s.d.at(i, j) == 0);
            if (i == j) CHECK(s.d.at(i, j) >= 0);
        }
    for (size_t i = 0; i + 1 < std::min(s.d.rows, s.d.cols); ++i) {
        if (s.d.at(i, i) == 0)
            CHECK(s.d.at(i + 1, i + 1) == 0);
        else if (s.d.at(i + 1, i + 1) != 0)
            CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
    }
    for (size_t i = 0; i < std::min(s.d.rows, s.d.cols); ++i)
        CHECK((s.d.at(i, i) != 0) == (i < s.rank));
}

} // namespace

TEST_CASE("small known forms") {
    CHECK(diag_factors(smith_normal_form(make(2, 2, {2, 0, 0, 3}))) ==
          std::vector<mpz_class>{1, 6});
    CHECK(diag_factors(smith_normal_form(make(2, 2, {4, 0, 0, 6}))) ==
          std::vector<mpz_class>{2, 12});
    CHECK(diag_factors(smith_normal_form(make(2, 2, {2, 1, 0, 2}))) ==
          std::vector<mpz_class>{1, 4});
    CHECK(diag_factors(smith_normal_form(make(1, 2, {2, -2}))) ==
          std::vector<mpz_class>{2});
    CHECK(smith_normal_form(make(2, 3, {0, 0, 0, 0, 0, 0})).rank == 0);
}

TEST_CASE("snf contract on rectangular shapes") {
    check_snf_contract(make(2, 3, {1, 2, 3, 4, 5, 6}));
    check_snf_contract(make(3, 2, {7, -3, 0, 0, 2, 2}));
    check_snf_contract(make(1, 1, {-5}));
    check_snf_contract(IntMatrix(3, 3));
}

TEST_CASE("randomized snf: exactness, divisibility, permutation stability") {
    std::mt19937 rng(77031);
    std::uniform_int_distribution<int> dim(1, 8), val(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        IntMatrix m(dim(rng), dim(rng));
        for (auto& x : m.a) x = val(rng);
        check_snf_contract(m);

        IntMatrix p(m.rows, m.cols);
        std::vector<size_t> rp(m.rows), cp(m.cols);
        for (size_t i = 0; i < m.rows; ++i) rp[i] = i;
        for (size_t j = 0; j < m.cols; ++j) cp[j] = j;
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        for (size_t i = 0; i < m.rows; ++i)
            for (size_t j = 0; j < m.cols; ++j) p.at(i, j) = m.at(rp[i], cp[j]);
        CHECK(diag_factors(smith_normal_form(p)) == diag_factors(smith_normal_form(m)));
    }
}

TEST_CASE("abelianization") {
    Presentation free1{{"a"}, {}};
    CHECK(abelianization(free1) == Abelianization{1, {}});

    Presentation z2 = parse_presentation("gens: a\nrel: a a\n");
    CHECK(abelianization(z2) == Abelianization{0, {2}});

    Presentation p = parse_presentation("gens: a b\nrel: a^2 b^-2\n");
    CHECK(abelianization(p) == Abelianization{1, {2}});

    Presentation q = parse_presentation("gens: a b\nrel: a^2 b^-2\nrel: a^4\n");
    CHECK(abelianization(q) == Abelianization{0, {2, 4}});
}

TEST_CASE("abelianization display") {
    CHECK(to_string(Abelianization{0, {}}) == "0");
    CHECK(to_string(Abelianization{1, {}}) == "Z");
    CHECK(to_string(Abelianization{3, {}}) == "Z^3");
    CHECK(to_string(Abelianization{1, {2}}) == "Z x Z/2");
    CHECK(to_string(Abelianization{0, {2, 2, 4}}) == "Z/2 x Z/2 x Z/4");
}

TEST_CASE("exponent vectors and the abelian consequence test") {
    Presentation p = parse_presentation("gens: a b\nrel: a^2\n");
    CHECK(exponent_vector(p, parse_word("a b a b^-2")) ==
          std::vector<mpz_class>{2, -1});
    CHECK_THROWS_AS(exponent_vector(p, parse_word("c")), error);

    CHECK(abelian_consequence_check(p, parse_word("a^2")));
    CHECK(abelian_consequence_check(p, parse_word("a^4")));
    CHECK(abelian_consequence_check(p, parse_word("b a^2 b^-1")));
    CHECK_FALSE(abelian_consequence_check(p, parse_word("a^3")));
    CHECK_FALSE(abelian_consequence_check(p, parse_word("b")));
    // relators are always abelian consequences of themselves
    Presentation q = parse_presentation("gens: U A1\nrel: U A1 U^-1 A1\n");
    for (const Word& r : q.relators) CHECK(abelian_consequence_check(q, r));
}
