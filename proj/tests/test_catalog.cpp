#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcg/catalog.hpp"
#include "mcg/error.hpp"
#include "mcg/snf.hpp"
#include "mcg/word.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

using namespace mcg;

namespace {

// Every letter of w must name a generator of p.
bool word_in_alphabet(const Presentation& p, const Word& w) {
    return std::all_of(w.begin(), w.end(),
                       [&](const Letter& l) { return p.has_generator(l.gen); });
}

} // namespace

TEST_CASE("catalog roster is fixed") {
    const auto& entries = catalog_entries();
    const std::vector<std::string> expected = {
        "m10", "m11", "m12",     "pm13", "m13", "pm14",    "m14", "m20",
        "m21", "p22", "m22",     "m22_ext",     "p23",     "m23", "m23_ext",
        "m30", "p31", "m31",     "m31_ext",     "p32",     "m32", "m32_ext",
        "t2",  "t3"};
    REQUIRE(entries.size() == expected.size());
    for (size_t i = 0; i < entries.size(); ++i) CHECK(entries[i].id == expected[i]);

    std::set<std::string> ids;
    for (const auto& e : entries) ids.insert(e.id);
    CHECK(ids.size() == entries.size());
}

TEST_CASE("entry lookup") {
    const auto& m21 = catalog_entry("m21");
    CHECK(m21.surface == "F_2^1");
    CHECK(m21.genus == 2);
    CHECK(m21.boundary == 1);
    CHECK(m21.pres.generators == std::vector<std::string>{"A1", "U"});
    CHECK(m21.pres.relators.size() == 1);

    const auto& pm14 = catalog_entry("pm14");
    CHECK(pm14.genus == 1);
    CHECK(pm14.boundary == 4);
    CHECK(pm14.pres.generators.size() == 9);
    CHECK(pm14.pres.relators.size() == 16);

    const auto& m32 = catalog_entry("m32");
    CHECK(m32.genus == 3);
    CHECK(m32.boundary == 2);
    CHECK(m32.pres.generators.size() == 10);

    CHECK_THROWS_WITH_AS(catalog_entry("zzz"), "no catalog entry 'zzz'", error);
    try {
        catalog_entry("zzz");
    } catch (const error& e) {
        CHECK(e.code() == errc::malformed_data);
    }
}

TEST_CASE("entries are internally consistent") {
    for (const auto& e : catalog_entries()) {
        INFO(e.id);
        CHECK(!e.surface.empty());
        CHECK(!e.theorem.empty());
        CHECK(!e.quote.empty());
        CHECK(e.genus >= 1);
        CHECK(e.boundary >= 0);
        CHECK(e.relation_labels.size() == e.pres.relators.size());
        CHECK_NOTHROW(e.pres.validate());
        for (const auto& claim : e.claims) {
            if (const auto* r = std::get_if<RelationHoldsAb>(&claim)) {
                CHECK(word_in_alphabet(e.pres, r->lhs));
                CHECK(word_in_alphabet(e.pres, r->rhs));
            } else if (const auto* f = std::get_if<FiniteIndexEquals>(&claim)) {
                for (const auto& w : f->subgroup) CHECK(word_in_alphabet(e.pres, w));
            }
        }
    }
}

TEST_CASE("abelianizations of key entries") {
    auto ab = [](const std::string& id) { return abelianization(catalog_entry(id).pres); };

    CHECK(ab("m10") == Abelianization{});
    CHECK(ab("m11") == Abelianization{});
    CHECK(ab("m12") == Abelianization{2, {}});
    CHECK(ab("m13") == Abelianization{6, {}});
    CHECK(ab("m20") == Abelianization{0, {2, 2}});
    CHECK(ab("m21") == Abelianization{1, {2}});
    CHECK(ab("t2") == Abelianization{2, {}});
    CHECK(ab("t3") == Abelianization{3, {}});

    // The assembled presentations must match the ones quoted directly.
    CHECK(ab("m22") == ab("m22_ext"));
    CHECK(ab("m23") == ab("m23_ext"));
    CHECK(ab("m31") == ab("m31_ext"));
    CHECK(ab("m32") == ab("m32_ext"));
}

TEST_CASE("relator bank contexts resolve and words fit their alphabets") {
    const auto& bank = lantern_star_relator_bank();
    CHECK(bank.size() == 17);

    std::set<std::string> names;
    for (const auto& b : bank) {
        INFO(b.name);
        CHECK(names.insert(b.name).second);
        CHECK(!b.display.empty());
        for (const auto& ctx : b.contexts) {
            const auto& e = catalog_entry(ctx);
            CHECK(word_in_alphabet(e.pres, b.lhs));
            CHECK(word_in_alphabet(e.pres, b.rhs));
        }
        if (b.free_abelian) {
            // Such an item must hold with no relations at all, i.e. each letter
            // occurs with total exponent zero in lhs * rhs^-1.
            std::map<std::string, long> net;
            for (const auto& l : b.lhs) net[l.gen] += l.exp;
            for (const auto& l : b.rhs) net[l.gen] -= l.exp;
            for (const auto& [gen, exp] : net) {
                INFO(gen);
                CHECK(exp == 0);
            }
        }
    }
}

TEST_CASE("derived relation bank has the expected shape") {
    const auto& bank = derived_relation_bank();
    CHECK(bank.size() == 70);

    std::map<std::string, int> by_family;
    for (const auto& d : bank) {
        INFO(d.family << " " << d.label);
        ++by_family[d.family];
        const auto& e = catalog_entry(d.context);
        CHECK(word_in_alphabet(e.pres, d.lhs));
        CHECK(word_in_alphabet(e.pres, d.rhs));
    }
    CHECK(by_family.size() == 5);
    CHECK(by_family["t14"] == 3);
    CHECK(by_family["p22"] == 6);
    CHECK(by_family["p23"] == 20);
    CHECK(by_family["p31"] == 18);
    CHECK(by_family["p32"] == 23);

    // Labels are unique within a family.
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& d : bank) CHECK(seen.insert({d.family, d.label}).second);
}

TEST_CASE("full verification run is clean") {
    CatalogReport report = verify_catalog();
    CHECK(report.all_ok());

    int pass = 0, fail = 0, unknown = 0;
    for (const auto& c : report.checks) {
        if (c.status == CheckStatus::fail) {
            FAIL_CHECK((c.entry + " / " + c.claim + ": " + c.detail));
            ++fail;
        } else if (c.status == CheckStatus::pass) {
            ++pass;
        } else {
            ++unknown;
        }
    }
    CHECK(fail == 0);
    CHECK(unknown == 0);
    // One structure check per entry, at least one claim each, plus both banks.
    CHECK(pass >= static_cast<int>(catalog_entries().size() + derived_relation_bank().size()));
}

TEST_CASE("check status names") {
    CHECK(to_string(CheckStatus::pass) == "pass");
    CHECK(to_string(CheckStatus::fail) == "fail");
    CHECK(to_string(CheckStatus::unknown) == "unknown");
}

TEST_CASE("index json lists every entry") {
    nlohmann::json arr = nlohmann::json::parse(catalog_index_json());
    REQUIRE(arr.is_array());
    const auto& entries = catalog_entries();
    REQUIRE(arr.size() == entries.size());
    for (size_t i = 0; i < entries.size(); ++i) {
        const auto& j = arr[i];
        CHECK(j.at("id").get<std::string>() == entries[i].id);
        CHECK(j.at("surface").get<std::string>() == entries[i].surface);
        CHECK(j.at("g").get<int>() == entries[i].genus);
        CHECK(j.at("n").get<int>() == entries[i].boundary);
        CHECK(j.at("theorem").get<std::string>() == entries[i].theorem);
        CHECK(!j.at("quote").get<std::string>().empty());
    }
}
