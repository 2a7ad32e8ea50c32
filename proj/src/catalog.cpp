#include "mcg/catalog.hpp"

#include "mcg/coset.hpp"
#include "mcg/error.hpp"
#include "mcg/extension.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

namespace mcg {

namespace {

using Subst = std::map<std::string, Word>;

// Expands @name atoms into parenthesized words, then defers to parse_word,
// so "@d23^-1" and "(A3 U D2)^2" both work.
Word jword(const std::string& text, const Subst& subst) {
    std::string expanded;
    for (size_t i = 0; i < text.size();) {
        if (text[i] != '@') {
            expanded += text[i++];
            continue;
        }
        size_t j = ++i;
        while (j < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
            ++j;
        std::string name = text.substr(i, j - i);
        auto it = subst.find(name);
        if (it == subst.end())
            throw error(errc::malformed_data, "unknown substitution @" + name);
        expanded += "(" + format_word(it->second) + ")";
        i = j;
    }
    return parse_word(expanded);
}

Word W(const std::string& text) { return parse_word(text); }

Abelianization ab_group(int free_rank, const std::vector<int>& torsion = {}) {
    Abelianization a;
    a.free_rank = free_rank;
    for (int t : torsion) a.torsion.emplace_back(t);
    return a;
}

// Accumulates a presentation in the text format together with one label per
// relator, so the two cannot drift apart.
struct PresText {
    std::string text;
    std::vector<std::string> labels;

    void gens(const std::string& names) { text += "gens: " + names + "\n"; }
    void rel(const std::string& label, const std::string& body) {
        text += "rel: " + body + "\n";
        labels.push_back(label);
    }
    // g h = h g for every pair (g, h)
    void commuting(const std::vector<std::string>& gs, const std::vector<std::string>& hs,
                   const std::string& label = "central") {
        for (const auto& g : gs)
            for (const auto& h : hs) rel(label, g + " " + h + " = " + h + " " + g);
    }
    // pairwise commutators within one list
    void commuting_pairs(const std::vector<std::string>& gs, const std::string& label) {
        for (size_t i = 0; i < gs.size(); ++i)
            for (size_t j = i + 1; j < gs.size(); ++j)
                rel(label, gs[i] + " " + gs[j] + " = " + gs[j] + " " + gs[i]);
    }
};

SporadicEntry entry(std::string id, std::string surface, int g, int n, std::string theorem,
                    std::string quote, const PresText& pt, std::vector<Claim> claims) {
    SporadicEntry e;
    e.id = std::move(id);
    e.surface = std::move(surface);
    e.genus = g;
    e.boundary = n;
    e.theorem = std::move(theorem);
    e.quote = std::move(quote);
    e.pres = parse_presentation(pt.text);
    e.relation_labels = pt.labels;
    e.claims = std::move(claims);
    if (e.relation_labels.size() != e.pres.relators.size())
        throw error(errc::malformed_data, "catalog entry " + e.id + ": label/relator mismatch");
    return e;
}

// Central extension of a catalog entry by a free abelian kernel. Kernel and
// conjugation relators are labeled "central"; a corrected quotient relator
// keeps its label with a prime.
SporadicEntry ext_entry(std::string id, std::string surface, int g, int n, std::string theorem,
                        std::string quote, const Presentation& kernel,
                        const SporadicEntry& quotient,
                        const std::map<std::size_t, Word>& corrections,
                        std::vector<Claim> claims) {
    ExtensionData data;
    data.kernel = kernel;
    data.quotient = quotient.pres;
    data.kernel_central = true;
    data.correction = corrections;

    SporadicEntry e;
    e.id = std::move(id);
    e.surface = std::move(surface);
    e.genus = g;
    e.boundary = n;
    e.theorem = std::move(theorem);
    e.quote = std::move(quote);
    e.pres = extension_presentation(data);
    e.claims = std::move(claims);

    for (size_t i = 0; i < kernel.relators.size(); ++i) e.relation_labels.push_back("central");
    for (size_t i = 0; i < quotient.pres.relators.size(); ++i) {
        std::string label = quotient.relation_labels[i];
        if (corrections.count(i)) label += "'";
        e.relation_labels.push_back(label);
    }
    for (size_t i = 0; i < quotient.pres.generators.size() * kernel.generators.size(); ++i)
        e.relation_labels.push_back("central");
    if (e.relation_labels.size() != e.pres.relators.size())
        throw error(errc::malformed_data, "catalog entry " + e.id + ": label/relator mismatch");
    return e;
}

Presentation free_abelian_kernel(const std::vector<std::string>& gens) {
    PresText pt;
    std::string names;
    for (const auto& g : gens) names += (names.empty() ? "" : " ") + g;
    pt.gens(names);
    pt.commuting_pairs(gens, "central");
    return parse_presentation(pt.text);
}

std::vector<SporadicEntry> build_entries() {
    std::vector<SporadicEntry> out;

    Presentation trivial_pres; // no generators, no relators

    out.push_back({"m10", "F_1^0", 1, 0, "folklore (cf. [E])",
                   "The groups M(F_1^0) and M(F_1^1) are well known to be trivial",
                   trivial_pres,
                   {},
                   {AbelianizationEquals{ab_group(0)}, FreeOfRank{0},
                    FiniteIndexEquals{{}, 1, 100}}});

    out.push_back({"m11", "F_1^1", 1, 1, "folklore (cf. [E])",
                   "The groups M(F_1^0) and M(F_1^1) are well known to be trivial",
                   trivial_pres,
                   {},
                   {AbelianizationEquals{ab_group(0)}, FiniteIndexEquals{{}, 1, 100}}});

    {
        PresText pt;
        pt.gens("C1 C2");
        pt.rel("comm", "C1 C2 = C2 C1");
        out.push_back(entry("m12", "F_1^2", 1, 2, "folklore",
                            "generated by Dehn twists along the boundary curves and is "
                            "isomorphic to Z^2",
                            pt, {AbelianizationEquals{ab_group(2)}}));
    }

    {
        PresText pt;
        pt.gens("A3 A23 B23");
        out.push_back(entry("pm13", "PM+(F_1^0, 3 punctures)", 1, 3, "Theorem 13",
                            "The group PM+(F,{p_1,p_2,p_3}) is free, generated by A_3, "
                            "A_23, B_23",
                            pt, {FreeOfRank{3}, AbelianizationEquals{ab_group(3)}}));
    }

    const SporadicEntry& pm13 = out.back();
    out.push_back(ext_entry("m13", "F_1^3", 1, 3, "Theorem 13",
                            "generated by A_3, A_23, B_23, C_1, C_2, C_3 and isomorphic "
                            "to Z^3 x PM+(F,{p_1,p_2,p_3})",
                            free_abelian_kernel({"C1", "C2", "C3"}), pm13, {},
                            {AbelianizationEquals{ab_group(6)},
                             IsomorphicToProductAb{"Z^3", "pm13"}}));

    {
        PresText pt;
        pt.gens("A3 A4 A23 A24 A34 B23 B24 B34 D");
        pt.rel("1a", "A23 A4 = A4 A23");
        pt.rel("1b", "A24 A3 = A3 A24");
        pt.rel("2", "A3^-1 A4 A34 B34 = B34 A3^-1 A4 A34");
        pt.rel("3", "A4 A34 A24 B23 = B23 A4 A34 A24");
        pt.rel("4", "A34 A3^-1 A23 B24 = B24 A34 A3^-1 A23");
        pt.rel("5a", "A34 A24 A23 = A24 A23 A34");
        pt.rel("5b", "A24 A23 A34 = A23 A34 A24");
        pt.rel("6a", "B34 A23 B24 = A23 B24 B34");
        pt.rel("6b", "A23 B24 B34 = B24 B34 A23");
        pt.rel("7a", "A4 A34 A3^-1 = A34 A3^-1 A4");
        pt.rel("7b", "A34 A3^-1 A4 = A3^-1 A4 A34");
        pt.rel("8a", "A34^-1 B24 B23 = B24 B23 A34^-1");
        pt.rel("8b", "B24 B23 A34^-1 = B23 A34^-1 B24");
        pt.rel("9a", "A24 B23 D^-1 = B23 D^-1 A24");
        pt.rel("9b", "B23 D^-1 A24 = D^-1 A24 B23");
        pt.rel("10", "D = A34^-1 A4^-1 B34 A4 A34");
        out.push_back(entry("pm14", "PM+(F_1^0, 4 punctures)", 1, 4, "Theorem 14",
                            "admits a presentation with generators {A_3, A_4, A_23, "
                            "A_24, A_34, B_23, B_24, B_34, D}",
                            pt, {AbelianizationEquals{ab_group(8)}}));
    }

    const SporadicEntry& pm14 = out.back();
    out.push_back(ext_entry("m14", "F_1^4", 1, 4, "Theorem 14",
                            "The group M(F_1^4) is isomorphic to Z^4 x "
                            "PM+(F,{p_1,p_2,p_3,p_4})",
                            free_abelian_kernel({"C1", "C2", "C3", "C4"}), pm14, {},
                            {AbelianizationEquals{ab_group(12)},
                             IsomorphicToProductAb{"Z^4", "pm14"}}));

    {
        PresText pt;
        pt.gens("a b");
        pt.rel("1", "a^2");
        pt.rel("2", "b^2");
        pt.rel("3", "a b a b");
        out.push_back(entry("m20", "F_2^0", 2, 0, "[L1]", "M(F_2^0) = Z_2 x Z_2", pt,
                            {AbelianizationEquals{ab_group(0, {2, 2})},
                             FiniteIndexEquals{{}, 4, 100}}));
    }

    {
        PresText pt;
        pt.gens("A1 U");
        pt.rel("1", "U A1 U^-1 = A1^-1");
        out.push_back(entry("m21", "F_2^1", 2, 1, "Theorem 21",
                            "The mapping class group M(K) is generated by A_1 and U and "
                            "admits the presentation <A_1, U | U A_1 U^-1 = A_1^-1>",
                            pt, {AbelianizationEquals{ab_group(1, {2})}}));
    }

    {
        PresText pt;
        pt.gens("A1 A2 D2 U");
        pt.rel("1", "A1 A2 = A2 A1");
        pt.rel("2", "U A1 U^-1 = A1^-1");
        pt.rel("3", "A2 U D2 = D2^-1 A2 U");
        pt.rel("4a", "(A2 U)^2 = (D2 U)^2");
        pt.rel("4b", "(D2 U)^2");
        out.push_back(entry("p22", "PM+(F_2^0, 2 punctures)", 2, 2, "Theorem P22",
                            "admits a presentation with generators {A_1, A_2, D_2, U}",
                            pt, {AbelianizationEquals{ab_group(0, {2, 2, 2, 2})}}));
    }

    const SporadicEntry& p22 = out.back();

    {
        PresText pt;
        pt.gens("C1 A1 A2 D2 U");
        pt.commuting({"C1"}, {"A1", "A2", "D2", "U"});
        pt.rel("1", "A1 A2 = A2 A1");
        pt.rel("2", "U A1 U^-1 = A1^-1");
        pt.rel("3", "A2 U D2 = D2^-1 A2 U");
        pt.rel("4a", "(A2 U)^2 = (D2 U)^2");
        out.push_back(entry("m22", "F_2^2", 2, 2, "Theorem 22",
                            "The group M(F_2^2) admits a presentation with generators "
                            "{C_1, A_1, A_2, D_2, U}",
                            pt,
                            {AbelianizationEquals{ab_group(2, {2, 2, 2})},
                             IsomorphicToProductAb{"", "m22_ext"},
                             RelationHoldsAb{"A1 commutes with (A2 U)^2",
                                             W("(A2 U)^2 A1"), W("A1 (A2 U)^2")}}));
    }

    out.push_back(ext_entry("m22_ext", "F_2^2", 2, 2, "Theorem 22 proof",
                            "From sequence (Mgn), Theorem P22 and Lemma K2rel we obtain "
                            "a presentation for M(F_2^2)",
                            free_abelian_kernel({"C1", "C2"}), p22,
                            {{4, W("C1 C2")}},
                            {AbelianizationEquals{ab_group(2, {2, 2, 2})}}));

    {
        PresText pt;
        pt.gens("A1 A2 A3 D2 D3 U");
        pt.rel("1a", "A1 A2 = A2 A1");
        pt.rel("1b", "A1 A3 = A3 A1");
        pt.rel("1c", "A2 A3 = A3 A2");
        pt.rel("2", "U A1 U^-1 = A1^-1");
        pt.rel("3", "A2 U D2 = D2^-1 A2 U");
        pt.rel("4a", "(A2 U)^2 = (D2 U)^2");
        pt.rel("4b", "(D2 U)^2 = (U D2)^2");
        pt.rel("5", "(U D3)^2 = (D3 U)^2");
        pt.rel("6", "D3 U D2 U^-1 = U D2 U^-1 D3");
        pt.rel("7", "A3 U D2 D3 = U D2 D3 A3^-1");
        pt.rel("8", "(U A3)^2 = (U D2 D3)^-2");
        pt.rel("9", "A2 (A3 U D2)^2 = (A3 U D2)^2 A2");
        pt.rel("10", "A2 A1^-1 D3 A1 A2^-1 = A3 U D2 D3^-1 (A3 U D2)^-1");
        pt.rel("11", "A1 (A3 U D2)^2 A1^-1 = (U D2)^-1 (A3 U D2)^2 U D2");
        out.push_back(entry("p23", "PM+(F_2^0, 3 punctures)", 2, 3, "Theorem P23",
                            "admits a presentation with generators {A_1, A_2, A_3, D_2, "
                            "D_3, U}",
                            pt,
                            {AbelianizationEquals{ab_group(0, {2, 2, 2, 2, 2, 4})}}));
    }

    const SporadicEntry& p23 = out.back();

    {
        PresText pt;
        pt.gens("A1 A2 A3 D2 D3 U C1 C2 C3");
        pt.rel("1a", "A1 A2 = A2 A1");
        pt.rel("1b", "A1 A3 = A3 A1");
        pt.rel("1c", "A2 A3 = A3 A2");
        pt.rel("2", "U A1 U^-1 = A1^-1");
        pt.rel("3", "A2 U D2 = D2^-1 A2 U");
        pt.rel("4a", "(A2 U)^2 = (D2 U)^2");
        pt.rel("4b", "(D2 U)^2 = (U D2)^2");
        pt.rel("5", "(U D3)^2 = (D3 U)^2");
        pt.rel("6", "D3 U D2 U^-1 = U D2 U^-1 D3");
        pt.rel("7", "A3 U D2 D3 = U D2 D3 A3^-1");
        pt.rel("9", "A2 (A3 U D2)^2 = (A3 U D2)^2 A2");
        pt.rel("10", "A2 A1^-1 D3 A1 A2^-1 = A3 U D2 D3^-1 (A3 U D2)^-1");
        pt.rel("11", "A1 (A3 U D2)^2 A1^-1 = (U D2)^-1 (A3 U D2)^2 U D2");
        pt.rel("8'", "(U A3)^2 (U D2 D3)^2 = (C1 C2 C3)^2");
        pt.commuting_pairs({"C1", "C2", "C3"}, "central");
        pt.commuting({"C1", "C2", "C3"}, {"A1", "A2", "A3", "D2", "D3", "U"});
        out.push_back(entry("m23", "F_2^3", 2, 3, "Theorem 23",
                            "The group M(F_2^3) admits a presentation with generators "
                            "{A_1, A_2, A_3, D_2, D_3, U, C_1, C_2, C_3}",
                            pt,
                            {AbelianizationEquals{ab_group(3, {2, 2, 2, 2, 2, 2})},
                             IsomorphicToProductAb{"", "m23_ext"}}));
    }

    out.push_back(ext_entry("m23_ext", "F_2^3", 2, 3, "Theorem 23 proof",
                            "relations (1-7), (9-11) from Theorem P23 and (8') "
                            "(UA_3)^2(UD_2D_3)^2 = (C_1C_2C_3)^2",
                            free_abelian_kernel({"C1", "C2", "C3"}), p23,
                            {{10, W("(C1 C2 C3)^2")}},
                            {AbelianizationEquals{ab_group(3, {2, 2, 2, 2, 2, 2})}}));

    {
        PresText pt;
        pt.gens("A1 B U");
        pt.rel("1", "A1 B A1 = B A1 B");
        pt.rel("2", "U A1 U^-1 = A1^-1");
        pt.rel("3", "U B U^-1 = A1^-1 B^-1 A1");
        pt.rel("4", "U^2");
        pt.rel("5", "(A1^3 B)^3");
        out.push_back(entry("m30", "F_3^0", 3, 0, "Theorem 2 of [BC]",
                            "admits a presentation with generators {A_1, B, U}", pt,
                            {AbelianizationEquals{ab_group(0, {2, 2})}}));
    }

    {
        PresText pt;
        pt.gens("A1 A2 B U");
        pt.rel("1", "A1 A2 = A2 A1");
        pt.rel("2a", "A1 B A1 = B A1 B");
        pt.rel("2b", "A2 B A2 = B A2 B");
        pt.rel("3", "U A1 U^-1 = A1^-1");
        pt.rel("4", "U B U^-1 = A2^-1 B^-1 A2");
        pt.rel("5", "(U A2)^2");
        pt.rel("6", "(A1 A2^2 B)^3");
        out.push_back(entry("p31", "PM+(F_3^0, 1 puncture)", 3, 1, "Theorem P31",
                            "admits a presentation with generators {A_1, A_2, B, U}", pt,
                            {AbelianizationEquals{ab_group(0, {2, 2})}}));
    }

    const SporadicEntry& p31 = out.back();

    {
        PresText pt;
        pt.gens("A1 A2 B U");
        pt.rel("1", "A1 A2 = A2 A1");
        pt.rel("2a", "A1 B A1 = B A1 B");
        pt.rel("2b", "A2 B A2 = B A2 B");
        pt.rel("3", "U A1 U^-1 = A1^-1");
        pt.rel("4", "U B U^-1 = A2^-1 B^-1 A2");
        pt.rel("+a", "(A2 U)^2 = (U A2)^2");
        pt.rel("+b", "(U A2)^2 = (A1^2 A2 B)^3");
        out.push_back(entry("m31", "F_3^1", 3, 1, "Theorem M31",
                            "relations (1-4) from Theorem P31 and (A_2U)^2 = (UA_2)^2 = "
                            "(A_1^2A_2B)^3",
                            pt,
                            {AbelianizationEquals{ab_group(0, {2, 2})},
                             IsomorphicToProductAb{"", "m31_ext"}}));
    }

    out.push_back(ext_entry("m31_ext", "F_3^1", 3, 1, "Theorem M31 proof",
                            "(A_1^2A_2B)^3 = C_1 (star) and (A_2U)^2 = C_1 (Lemma K2rel)",
                            free_abelian_kernel({"C1"}), p31,
                            {{5, W("C1")}, {6, W("C1")}},
                            {AbelianizationEquals{ab_group(0, {2, 2})}}));

    {
        PresText pt;
        pt.gens("A1 A2 A3 B D1 D2 D3 U");
        pt.rel("1a", "A1 A2 = A2 A1");
        pt.rel("1b", "A1 A3 = A3 A1");
        pt.rel("1c", "A2 A3 = A3 A2");
        pt.rel("2a", "A1 B A1 = B A1 B");
        pt.rel("2b", "A2 B A2 = B A2 B");
        pt.rel("2c", "A3 B A3 = B A3 B");
        pt.rel("3", "U A1 U^-1 = A1^-1");
        pt.rel("4", "U B U^-1 = A3^-1 B^-1 A3");
        pt.rel("5", "U D1 = D1 U");
        pt.rel("6", "U D3 = D3 U");
        pt.rel("7", "B D2 = D2 B");
        pt.rel("8", "(U A2)^2 = D1");
        pt.rel("9a", "(A1^2 A3 B)^3 = (U A3)^2");
        pt.rel("9b", "(U A3)^2 = D3");
        pt.rel("10", "A2^-1 U D2 U^-1 A2 = U B^-1 D1^-1 B U^-1");
        pt.rel("11", "(U D2)^2 D1 D3 = U^2");
        pt.rel("12", "(A1 A2 A3 B)^3");
        out.push_back(entry("p32", "PM+(F_3^0, 2 punctures)", 3, 2, "Theorem P32",
                            "admits a presentation with generators {A_1, A_2, A_3, B, "
                            "D_1, D_2, D_3, U}",
                            pt, {AbelianizationEquals{ab_group(0, {2, 2})}}));
    }

    const SporadicEntry& p32 = out.back();

    {
        PresText pt;
        pt.gens("A1 A2 A3 B D1 D2 D3 U C1 C2");
        pt.rel("1a", "A1 A2 = A2 A1");
        pt.rel("1b", "A1 A3 = A3 A1");
        pt.rel("1c", "A2 A3 = A3 A2");
        pt.rel("2a", "A1 B A1 = B A1 B");
        pt.rel("2b", "A2 B A2 = B A2 B");
        pt.rel("2c", "A3 B A3 = B A3 B");
        pt.rel("3", "U A1 U^-1 = A1^-1");
        pt.rel("4", "U B U^-1 = A3^-1 B^-1 A3");
        pt.rel("5", "U D1 = D1 U");
        pt.rel("6", "U D3 = D3 U");
        pt.rel("7", "B D2 = D2 B");
        pt.rel("9a", "(A1^2 A3 B)^3 = (U A3)^2");
        pt.rel("9b", "(U A3)^2 = D3");
        pt.rel("10", "A2^-1 U D2 U^-1 A2 = U B^-1 D1^-1 B U^-1");
        pt.rel("8'", "(U A2)^2 = D1 C1");
        pt.rel("11'", "(U D2)^2 D1 D3 = U^2 C1 C2^2");
        pt.rel("12'a", "(A1 A2 A3 B)^3 = C1 C2");
        pt.rel("12'b", "C1 C2 = C2 C1");
        pt.commuting({"C1", "C2"}, {"A1", "A2", "A3"});
        pt.commuting({"C1", "C2"}, {"D1", "D2", "D3"});
        pt.commuting({"C1", "C2"}, {"B"});
        pt.commuting({"C1", "C2"}, {"U"});
        out.push_back(entry("m32", "F_3^2", 3, 2, "Theorem M32",
                            "The group M(F_3^2) admits a presentation with generators "
                            "{A_1, A_2, A_3, B, D_1, D_2, D_3, U, C_1, C_2}",
                            pt,
                            {AbelianizationEquals{ab_group(0, {2, 2, 2})},
                             IsomorphicToProductAb{"", "m32_ext"}}));
    }

    out.push_back(ext_entry("m32_ext", "F_3^2", 3, 2, "Theorem M32 proof",
                            "(11') follows from Lemma K2rel and lantern relation "
                            "C_1C_2U^2 = ((UD_2)^2C_2^-1)D_1D_3",
                            free_abelian_kernel({"C1", "C2"}), p32,
                            {{11, W("C1")}, {15, W("C1 C2^2")}, {16, W("C1 C2")}},
                            {AbelianizationEquals{ab_group(0, {2, 2, 2})}}));

    for (int holes : {2, 3}) {
        PresText pt;
        pt.gens("C1 C2 C3 A1 A2 A3 B");
        pt.commuting_pairs({"C1", "C2", "C3"}, "C");
        pt.commuting({"C1", "C2", "C3"}, {"A1", "A2", "A3"}, "C");
        pt.commuting({"C1", "C2", "C3"}, {"B"}, "C");
        pt.commuting_pairs({"A1", "A2", "A3"}, "B");
        pt.rel("B", "A1 B A1 = B A1 B");
        pt.rel("B", "A2 B A2 = B A2 B");
        pt.rel("B", "A3 B A3 = B A3 B");
        pt.rel("S", "(A1 A2 A3 B)^3 = C1 C2 C3");
        if (holes == 2) {
            pt.rel("T2a", "C2");
            pt.rel("T2b", "A2 = A3");
            out.push_back(entry("t2", "T_2", 1, 2, "Theorem Tpres",
                                "A presentation for M(T_2) may be obtained by adding to "
                                "the above presentation relations C_2 = 1 and A_2 = A_3",
                                pt, {AbelianizationEquals{ab_group(2)}}));
        } else {
            out.push_back(entry("t3", "T_3", 1, 3, "Theorem Tpres",
                                "The group M(T_3) admits presentation with generators "
                                "{C_i, A_i, B | i = 1, 2, 3}",
                                pt, {AbelianizationEquals{ab_group(3)}}));
        }
    }

    return out;
}

} // namespace

const std::vector<SporadicEntry>& catalog_entries() {
    static const std::vector<SporadicEntry> entries = build_entries();
    return entries;
}

const SporadicEntry& catalog_entry(const std::string& id) {
    for (const auto& e : catalog_entries())
        if (e.id == id) return e;
    throw error(errc::malformed_data, "no catalog entry '" + id + "'");
}

const std::vector<BankRelator>& lantern_star_relator_bank() {
    static const std::vector<BankRelator> bank = [] {
        std::vector<BankRelator> b;
        auto add = [&b](std::string name, std::string display, const std::string& lhs,
                        const std::string& rhs, std::vector<std::string> contexts,
                        bool free_abelian = false) {
            b.push_back({std::move(name), std::move(display), W(lhs), W(rhs),
                         std::move(contexts), free_abelian});
        };
        add("lantern", "A_0 A_1 A_2 A_3 = A_12 A_13 A_23", "A0 A1 A2 A3", "A12 A13 A23",
            {});
        add("lantern-cyclic", "A_12 A_13 A_23 = A_13 A_23 A_12", "A12 A13 A23",
            "A13 A23 A12", {}, true);
        add("lantern-n3", "C_1 C_2 U^2 = (U D_2)^2 C_2^-1 D_1 D_3", "C1 C2 U^2",
            "(U D2)^2 C2^-1 D1 D3", {"m32", "m32_ext"});
        add("star", "(A_1 A_2 A_3 B)^3 = C_1 C_2 C_3", "(A1 A2 A3 B)^3", "C1 C2 C3",
            {"t3", "t2"});
        add("star-two-holes", "(A_1 A_2^2 B)^3 = C_1 C_3", "(A1 A2^2 B)^3", "C1 C3",
            {"t2"});
        add("star-exponent-shift", "(A_1 A_2^2 B)^3 = (A_1^2 A_2 B)^3", "(A1 A2^2 B)^3",
            "(A1^2 A2 B)^3", {"t2", "p31", "m31"});
        add("star-one-hole", "(A_1^2 A_2 B)^3 = C_1", "(A1^2 A2 B)^3", "C1",
            {"m31_ext"});
        add("star-closed", "(A_1^3 B)^3 = 1", "(A1^3 B)^3", "", {"m30"});
        add("star-punctured-2", "(A_1 A_2^2 B)^3 = 1", "(A1 A2^2 B)^3", "", {"p31"});
        add("star-punctured-3", "(A_1 A_2 A_3 B)^3 = 1", "(A1 A2 A3 B)^3", "", {"p32"});
        add("star-m32", "(A_1 A_2 A_3 B)^3 = C_1 C_2", "(A1 A2 A3 B)^3", "C1 C2",
            {"m32", "m32_ext"});
        add("k2rel-twist-pair", "(A_2 U)^2 = (D_2 U)^2", "(A2 U)^2", "(D2 U)^2",
            {"p22", "m22", "m22_ext", "p23", "m23"});
        add("k2rel-boundary", "(D_2 U)^2 = C_1 C_2", "(D2 U)^2", "C1 C2", {"m22_ext"});
        add("k2rel-boundary-a", "(A_2 U)^2 = C_1 C_2", "(A2 U)^2", "C1 C2", {"m22_ext"});
        add("k2rel-one-hole", "(A_2 U)^2 = (U A_2)^2", "(A2 U)^2", "(U A2)^2",
            {"p31", "m31", "m31_ext"});
        add("k2rel-p32", "(U A_2)^2 = D_1", "(U A2)^2", "D1", {"p32"});
        add("k2rel-m32", "(U A_2)^2 = D_1 C_1", "(U A2)^2", "D1 C1", {"m32", "m32_ext"});
        return b;
    }();
    return bank;
}

namespace {

struct DItem {
    const char* label;
    const char* lhs;
    const char* rhs;
};

void add_family(std::vector<DerivedRelation>& out, const std::string& family,
                const std::string& context, const Subst& subst,
                std::initializer_list<DItem> items) {
    for (const auto& it : items)
        out.push_back({family, it.label, context, jword(it.lhs, subst), jword(it.rhs, subst)});
}

} // namespace

const std::vector<DerivedRelation>& derived_relation_bank() {
    static const std::vector<DerivedRelation> bank = [] {
        std::vector<DerivedRelation> b;

        add_family(b, "t14", "pm14", {},
                   {{"(a)", "A23 A34 A23^-1", "A24^-1 A34 A24"},
                    {"(b)", "A23 A34 A24 A23^-1", "A34 A24"},
                    {"(c)", "A3 A34^-1 B24 A34 A3^-1", "A23 B24 A23^-1"}});

        Subst s22;
        s22["g"] = W("U^-2");
        s22["a2"] = W("A2 A1^-1");
        s22["d2"] = W("D2");
        add_family(b, "p22", "p22", s22,
                   {{"(a)", "U @g U^-1", "@g"},
                    {"(b)", "U @a2 U^-1", "@a2^-1 @g"},
                    {"(c)", "U @d2 U^-1", "@d2^-1 @g"},
                    {"(d)", "A1 @g A1^-1", "@g"},
                    {"(e)", "A1 @a2 A1^-1", "@a2"},
                    {"(f)", "A1 @d2 A1^-1", "@g @a2^-1 @d2 @a2"}});

        Subst s23;
        s23["a3"] = W("A3 A2^-1");
        s23["d3"] = W("D3");
        s23["d23"] = W("(U A3)^2");
        s23["d12"] = W("(U D2)^-2 (U A3)^-2");
        s23["e"] = W("(A3 U D2)^2");
        add_family(
            b, "p23", "p23", s23,
            {{"(i)", "U @a3 U^-1", "@d23 @a3^-1 @d12 @d23"},
             {"(ii)", "U @d3 U^-1", "@d3^-1 @d12"},
             {"(iii)", "U @d23 U^-1", "@d23"},
             {"(iv)", "U @d12 U^-1", "@d12"},
             {"(v)", "U @e U^-1", "@d3^-1 @d12 @d23 @a3^-1 @e @a3 @d23^-1 @d12^-1 @d3"},
             {"(vi)", "D2 @a3 D2^-1", "@d23^-1 @d3^-1 @e @d3 @a3"},
             {"(vii)", "D2 @d3 D2^-1", "@d23^-1 @d3 @d23"},
             {"(viii)", "D2 @d23 D2^-1", "D2 @d3^-1 D2^-1 @d3 @d23"},
             {"(ix)", "D2 @d12 D2^-1", "@d12 @d23 D2 @d23^-1 D2^-1"},
             {"(x)", "D2 @e D2^-1", "D2 @a3 D2^-1 @a3^-1 @d23"},
             {"(xi)", "A2 @a3 A2^-1", "@a3"},
             {"(xii)", "A2 @d3 A2^-1", "@d12 @d23 @a3^-1 @e @d3 @a3"},
             {"(xiii)", "A2 @d23 A2^-1", "@a3^-1 @d23 @a3"},
             {"(xiv)", "A2 @d12 A2^-1", "@d12 @d23 A2 @d23^-1 A2^-1"},
             {"(xv)", "A2 @e A2^-1", "@e"},
             {"(xvi)", "A1 @a3 A1^-1", "@a3"},
             {"(xvii)", "A1 @d3 A1^-1", "@d12 @d23 @a3^-1 @d3 @a3 @d23^-1"},
             {"(xviii)", "A1 @d23 A1^-1", "@d23"},
             {"(xix)", "A1 @d12 A1^-1", "@d12"},
             {"(xx)", "A1 @e A1^-1", "D2^-1 U^-1 @e U D2"}});

        Subst s31;
        s31["g"] = W("U^2");
        s31["a1"] = W("A2 A1^-1");
        s31["b1"] = W("A1 A2^-1 B A2 A1^-1 B^-1");
        s31["d"] = W("U^-1 B A2 A1^-1 B^-1 U B A1 A2^-1 B^-1 A2 A1^-1");
        add_family(b, "p31", "p31", s31,
                   {{"(i)", "A1 B A1", "B A1 B"},
                    {"(ii)", "U A1 U^-1", "A1^-1"},
                    {"(iii)", "U B U^-1 A1^-1 B A1", "@b1^-1 @a1^-1"},
                    {"(iv)", "U^2", "@g"},
                    {"(v)", "(A1^3 B)^3", "@b1^-1 @a1 @b1 @a1^-1"},
                    {"(vi)", "@b1^-1 @d^-1 @g^-1 @a1^-1 @d @a1 @b1 @g", ""},
                    {"(vii)", "A1 @a1 A1^-1", "@a1"},
                    {"(viii)", "A1 @b1 A1^-1", "@a1^-1 @b1"},
                    {"(ix)", "A1 @g A1^-1", "@g"},
                    {"(x)", "A1 @d A1^-1", "@g^-1 @a1^-1 @d @a1"},
                    {"(xi)", "B @a1 B^-1", "@a1 @b1"},
                    {"(xii)", "B @b1 B^-1", "@b1"},
                    {"(xiii)", "B @g B^-1", "@b1^-1 @g @d @b1"},
                    {"(xiv)", "B @d B^-1", "@d"},
                    {"(xv)", "U @a1 U^-1", "@a1^-1 @g^-1"},
                    {"(xvi)", "U @b1 U^-1", "@g @d @a1 @b1"},
                    {"(xvii)", "U @g U^-1", "@g"},
                    {"(xviii)", "U @d U^-1", "@d^-1 @g^-1"}});

        Subst s32;
        s32["a2"] = W("A3 A2^-1");
        s32["b2"] = W("A3^-1 A2 B A2^-1 A3 B^-1");
        s32["d1"] = W("D1");
        s32["d2"] = W("D2");
        s32["d3"] = W("D3");
        add_family(
            b, "p32", "p32", s32,
            {{"(i)", "U B U^-1 A2^-1 B A2", "@b2^-1 @a2^-1"},
             {"(ii)", "(U A2)^2", "@d1"},
             {"(iii)", "(A1 A2^2 B)^3", "@b2^-1 @d3^-1 @a2 @b2 @a2^-1"},
             {"(iv)a", "A1 @a2 A1^-1", "A2 @a2 A2^-1"},
             {"(iv)b", "A2 @a2 A2^-1", "@a2"},
             {"(v)", "A1 @b2 A1^-1", "@a2^-1 @d3 @b2"},
             {"(vi)a", "A1 @d1 A1^-1", "A2 @d1 A2^-1"},
             {"(vi)b", "A2 @d1 A2^-1", "U @d1 U^-1"},
             {"(vi)c", "U @d1 U^-1", "@d1"},
             {"(vii)a", "A1 @d3 A1^-1", "B @d3 B^-1"},
             {"(vii)b", "B @d3 B^-1", "U @d3 U^-1"},
             {"(vii)c", "U @d3 U^-1", "@d3"},
             {"(viii)", "A1 @d2 A1^-1", "@d3^-1 @d1^-1 @a2^-1 @d3 @d2 @d3^-1 @a2"},
             {"(ix)", "A2 @b2 A2^-1", "@a2^-1 @b2"},
             {"(x)", "A2 @d3 A2^-1", "@a2^-1 @d3 @a2"},
             {"(xi)", "A2 @d2 A2^-1",
              "@a2^-1 @d3^-1 @a2 @d3 @d2 @b2 @d1^-1 @b2^-1 @a2^-1 @d3 @a2"},
             {"(xii)", "B @a2 B^-1", "@a2 @b2"},
             {"(xiii)", "B @b2 B^-1", "@b2"},
             {"(xiv)", "B @d1 B^-1", "@b2^-1 @d1 @d3 @d2 @b2"},
             {"(xv)", "B @d2 B^-1", "@d2"},
             {"(xvi)", "U @a2 U^-1", "@d3 @a2^-1 @d1^-1"},
             {"(xvii)", "U @b2 U^-1", "@d1 @d3 @d2 @d3^-1 @a2 @b2"},
             {"(xviii)", "U @d2 U^-1", "@d2^-1 @d3^-1 @d1^-1"}});

        return b;
    }();
    return bank;
}

bool CatalogReport::all_ok() const {
    for (const auto& c : checks)
        if (c.status == CheckStatus::fail) return false;
    return true;
}

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "unknown";
    }
}

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};

// Invariant factors of the direct sum, recomputed through SNF so that
// non-coprime inputs like Z_2 + Z_2 stay as they are and coprime ones merge.
Abelianization direct_sum(const Abelianization& x, const Abelianization& y) {
    Abelianization out;
    out.free_rank = x.free_rank + y.free_rank;
    std::vector<mpz_class> t = x.torsion;
    t.insert(t.end(), y.torsion.begin(), y.torsion.end());
    if (!t.empty()) {
        IntMatrix m(t.size(), t.size());
        for (size_t i = 0; i < t.size(); ++i) m.at(i, i) = t[i];
        SnfResult s = smith_normal_form(m);
        for (size_t i = 0; i < t.size(); ++i)
            if (s.d.at(i, i) > 1) out.torsion.push_back(s.d.at(i, i));
    }
    return out;
}

// "" = trivial group, "Z^k" = free abelian of rank k, anything else an entry
Abelianization side_ab(const std::string& ref) {
    if (ref.empty()) return {};
    if (ref.rfind("Z^", 0) == 0) {
        Abelianization a;
        a.free_rank = std::atoi(ref.c_str() + 2);
        return a;
    }
    return abelianization(catalog_entry(ref).pres);
}

bool holds_ab(const Presentation& p, const Word& lhs, const Word& rhs) {
    return abelian_consequence_check(p, free_reduce(concat(lhs, inverse(rhs))));
}

CheckResult run_claim(const SporadicEntry& e, const Claim& claim) {
    CheckResult c;
    c.entry = e.id;
    std::visit(
        overloaded{
            [&](const AbelianizationEquals& a) {
                c.claim = "abelianization";
                Abelianization got = abelianization(e.pres);
                c.status = got == a.value ? CheckStatus::pass : CheckStatus::fail;
                c.detail = "expected " + to_string(a.value) + ", computed " + to_string(got);
            },
            [&](const IsomorphicToProductAb& a) {
                c.claim = "product abelianization";
                Abelianization want = direct_sum(side_ab(a.left), side_ab(a.right));
                Abelianization got = abelianization(e.pres);
                c.status = got == want ? CheckStatus::pass : CheckStatus::fail;
                c.detail = "ab(" + (a.left.empty() ? std::string("1") : a.left) + " x " +
                           (a.right.empty() ? std::string("1") : a.right) + ") = " +
                           to_string(want) + ", computed " + to_string(got);
            },
            [&](const RelationHoldsAb& a) {
                c.claim = "relation: " + a.name;
                c.status = holds_ab(e.pres, a.lhs, a.rhs) ? CheckStatus::pass
                                                          : CheckStatus::fail;
                c.detail = format_word(a.lhs) + " = " + format_word(a.rhs);
            },
            [&](const FiniteIndexEquals& a) {
                c.claim = "finite index";
                CosetResult r = todd_coxeter(e.pres, a.subgroup, a.max_cosets);
                if (!r.completed) {
                    c.status = CheckStatus::unknown;
                    c.detail = "coset cap " + std::to_string(a.max_cosets) + " reached";
                } else {
                    c.status = r.index == a.index ? CheckStatus::pass : CheckStatus::fail;
                    c.detail = "expected index " + std::to_string(a.index) + ", computed " +
                               std::to_string(r.index);
                }
            },
            [&](const FreeOfRank& a) {
                c.claim = "free of rank " + std::to_string(a.rank);
                bool ok = e.pres.relators.empty() &&
                          e.pres.generators.size() == static_cast<size_t>(a.rank);
                c.status = ok ? CheckStatus::pass : CheckStatus::fail;
                c.detail = std::to_string(e.pres.generators.size()) + " generators, " +
                           std::to_string(e.pres.relators.size()) + " relators";
            }},
        claim);
    return c;
}

CheckResult run_in_context(const std::string& kind, const std::string& name,
                           const std::string& display, const std::string& ctx,
                           const Word& lhs, const Word& rhs) {
    CheckResult c;
    c.entry = ctx;
    c.claim = kind + " " + name;
    c.detail = display;
    try {
        c.status = holds_ab(catalog_entry(ctx).pres, lhs, rhs) ? CheckStatus::pass
                                                               : CheckStatus::fail;
        if (c.status == CheckStatus::fail) c.detail += ": not an abelian consequence";
    } catch (const error& ex) {
        c.status = CheckStatus::fail;
        c.detail += std::string(": ") + ex.what();
    }
    return c;
}

} // namespace

CatalogReport verify_catalog() {
    CatalogReport report;
    for (const auto& e : catalog_entries()) {
        CheckResult structure;
        structure.entry = e.id;
        structure.claim = "structure";
        bool labels_ok = e.relation_labels.size() == e.pres.relators.size();
        structure.status = labels_ok ? CheckStatus::pass : CheckStatus::fail;
        structure.detail = std::to_string(e.pres.generators.size()) + " generators, " +
                           std::to_string(e.pres.relators.size()) + " relators";
        report.checks.push_back(structure);
        for (const auto& claim : e.claims) report.checks.push_back(run_claim(e, claim));
    }
    for (const auto& b : lantern_star_relator_bank()) {
        if (b.free_abelian) {
            // must already hold in the free abelian group on its own letters
            std::set<std::string> letters;
            for (const auto& l : b.lhs) letters.insert(l.gen);
            for (const auto& l : b.rhs) letters.insert(l.gen);
            Presentation p;
            p.generators.assign(letters.begin(), letters.end());
            CheckResult c;
            c.entry = "(free abelian)";
            c.claim = "bank " + b.name;
            c.detail = b.display;
            c.status = holds_ab(p, b.lhs, b.rhs) ? CheckStatus::pass : CheckStatus::fail;
            report.checks.push_back(c);
        }
        for (const auto& ctx : b.contexts)
            report.checks.push_back(run_in_context("bank", b.name, b.display, ctx, b.lhs, b.rhs));
    }
    for (const auto& d : derived_relation_bank())
        report.checks.push_back(run_in_context("derived", d.family + " " + d.label,
                                               format_word(d.lhs) + " = " + format_word(d.rhs),
                                               d.context, d.lhs, d.rhs));
    return report;
}

std::string catalog_index_json() {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : catalog_entries()) {
        nlohmann::ordered_json j;
        j["id"] = e.id;
        j["surface"] = e.surface;
        j["g"] = e.genus;
        j["n"] = e.boundary;
        j["theorem"] = e.theorem;
        j["quote"] = e.quote;
        arr.push_back(j);
    }
    return arr.dump(2);
}

} // namespace mcg
