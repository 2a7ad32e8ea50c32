#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcg/error.hpp"
#include "mcg/extension.hpp"
#include "mcg/snf.hpp"

using namespace mcg;

namespace {

Abelianization direct_sum(const Abelianization& x, const Abelianization& y) {
    std::vector<mpz_class> t;
    t.insert(t.end(), x.torsion.begin(), x.torsion.end());
    t.insert(t.end(), y.torsion.begin(), y.torsion.end());
    IntMatrix m(t.size(), t.size());
    for (size_t i = 0; i < t.size(); ++i) m.at(i, i) = t[i];
    SnfResult s = smith_normal_form(m);
    Abelianization out;
    out.free_rank = x.free_rank + y.free_rank;
    for (size_t i = 0; i < s.rank; ++i)
        if (s.d.at(i, i) > 1) out.torsion.push_back(s.d.at(i, i));
    return out;
}

} // namespace

TEST_CASE("twist action over a free quotient gives the klein bottle group") {
    ExtensionData x;
    x.kernel = Presentation{{"A"}, {}};
    x.quotient = Presentation{{"u"}, {}};
    x.action[{"u", "A"}] = parse_word("A^-1");
    x.lift["u"] = "U";
    Presentation g = extension_presentation(x);
    CHECK(g.generators == std::vector<std::string>{"A", "U"});
    REQUIRE(g.relators.size() == 1);
    CHECK(free_reduce(g.relators[0]) == parse_word("U A U^-1 A"));
}

TEST_CASE("central kernel with trivial data is a direct product") {
    ExtensionData x;
    x.kernel = parse_presentation("gens: C1 C2\n");
    x.quotient = parse_presentation("gens: a b\nrel: a^2\nrel: (a b)^3\n");
    x.kernel_central = true;
    Presentation g = extension_presentation(x);
    CHECK(g.generators == std::vector<std::string>{"C1", "C2", "a", "b"});
    // kernel relators (none), quotient relators, then one commuting relator
    // per (quotient gen, kernel gen) pair
    CHECK(g.relators.size() == 2 + 2 * 2);
    CHECK(abelianization(g) ==
          direct_sum(abelianization(x.kernel), abelianization(x.quotient)));
}

TEST_CASE("corrections twist the lifted relators") {
    ExtensionData x;
    x.kernel = Presentation{{"C"}, {}};
    x.quotient = parse_presentation("gens: u\nrel: u^2\n");
    x.kernel_central = true;
    x.correction[0] = parse_word("C");
    x.lift["u"] = "U";
    Presentation g = extension_presentation(x);
    REQUIRE(g.relators.size() == 2);
    CHECK(free_reduce(g.relators[0]) == free_reduce(parse_word("U^2 C^-1")));
    CHECK(free_reduce(g.relators[1]) == free_reduce(parse_word("U C U^-1 C^-1")));
    // the extension is generated by U alone: ab = Z
    CHECK(abelianization(g) == Abelianization{1, {}});
}

TEST_CASE("abelianization adds for trivial data (property over samples)") {
    const char* kernels[] = {"gens: k\n", "gens: k\nrel: k^4\n", "gens: k1 k2\nrel: k1^2\n"};
    const char* quotients[] = {"gens: q\nrel: q^6\n", "gens: q1 q2\nrel: q1 q2 q1^-1 q2^-1\n"};
    for (const char* kt : kernels)
        for (const char* qt : quotients) {
            ExtensionData x;
            x.kernel = parse_presentation(kt);
            x.quotient = parse_presentation(qt);
            x.kernel_central = true;
            CHECK(abelianization(extension_presentation(x)) ==
                  direct_sum(abelianization(x.kernel), abelianization(x.quotient)));
        }
}

TEST_CASE("name collisions and malformed references are rejected") {
    ExtensionData collide;
    collide.kernel = Presentation{{"A"}, {}};
    collide.quotient = Presentation{{"A"}, {}};
    collide.kernel_central = true;
    CHECK_THROWS_AS(extension_presentation(collide), error);

    ExtensionData bad_action;
    bad_action.kernel = Presentation{{"A"}, {}};
    bad_action.quotient = Presentation{{"u"}, {}};
    bad_action.kernel_central = true;
    bad_action.action[{"v", "A"}] = parse_word("A");
    CHECK_THROWS_AS(extension_presentation(bad_action), error);

    ExtensionData bad_correction;
    bad_correction.kernel = Presentation{{"A"}, {}};
    bad_correction.quotient = Presentation{{"u"}, {}};
    bad_correction.kernel_central = true;
    bad_correction.correction[3] = parse_word("A");
    CHECK_THROWS_AS(extension_presentation(bad_correction), error);

    // non-central kernel requires a full action table
    ExtensionData missing;
    missing.kernel = Presentation{{"A"}, {}};
    missing.quotient = Presentation{{"u"}, {}};
    CHECK_THROWS_AS(extension_presentation(missing), error);
}
