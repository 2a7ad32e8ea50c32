#pragma once

#include "mcg/presentation.hpp"
#include "mcg/snf.hpp"

#include <string>
#include <variant>
#include <vector>

namespace mcg {

// Machine-checkable claims attached to a catalog entry. Full isomorphism
// statements stay in the quoted source text; claims are limited to decidable
// checks (abelian invariants, bounded coset enumeration, free rank).

struct AbelianizationEquals {
    Abelianization value;
};

// ab(entry) == ab(left) + ab(right). A side is an entry id, "Z^k" for the
// free abelian group of rank k, or "" for the trivial group.
struct IsomorphicToProductAb {
    std::string left, right;
};

struct RelationHoldsAb {
    std::string name;
    Word lhs, rhs;
};

struct FiniteIndexEquals {
    std::vector<Word> subgroup;
    long index = 0;
    long max_cosets = 0;
};

struct FreeOfRank {
    int rank = 0;
};

using Claim = std::variant<AbelianizationEquals, IsomorphicToProductAb, RelationHoldsAb,
                           FiniteIndexEquals, FreeOfRank>;

// One presented group: the mapping class group of a small non-orientable
// surface, a pure subgroup or holed-torus group feeding one, or a group
// assembled here as a central extension. relation_labels mirrors the cited
// theorem's relation numbering, one label per relator.
struct SporadicEntry {
    std::string id;
    std::string surface; // "F_2^1", "PM+(F_2^0, 2 punctures)", "T_3", ...
    int genus = 0;
    int boundary = 0;
    std::string theorem;
    std::string quote; // short anchor phrase from the cited statement
    Presentation pres;
    std::vector<std::string> relation_labels;
    std::vector<Claim> claims;
};

// Static catalog, identical on every run. Entries are listed by surface,
// with the auxiliary groups next to the entry they support.
const std::vector<SporadicEntry>& catalog_entries();

// Throws errc::malformed_data when the id is unknown.
const SporadicEntry& catalog_entry(const std::string& id);

// Named lantern, star and Klein-bottle relators, each tagged with the
// entries over whose alphabet it is expressible and in whose group it holds.
// free_abelian marks identities that already hold in the free abelian group
// on their own letters; items with no context and no free_abelian flag are
// recorded for reference only and generate no check.
struct BankRelator {
    std::string name;
    std::string display; // the equation as printed
    Word lhs, rhs;
    std::vector<std::string> contexts;
    bool free_abelian = false;
};

const std::vector<BankRelator>& lantern_star_relator_bank();

// Relations appearing in the derivations of the catalog presentations, with
// the twist words substituted for the point-pushed loops. Every item must be
// an abelian consequence of its context entry's relators.
struct DerivedRelation {
    std::string family;  // "t14", "p22", "p23", "p31", "p32"
    std::string label;   // "(i)", "(iv)b", ...
    std::string context; // entry id
    Word lhs, rhs;
};

const std::vector<DerivedRelation>& derived_relation_bank();

enum class CheckStatus { pass, fail, unknown };

struct CheckResult {
    std::string entry;
    std::string claim;
    CheckStatus status = CheckStatus::fail;
    std::string detail;
};

struct CatalogReport {
    std::vector<CheckResult> checks;
    bool all_ok() const; // no failures; unknown is allowed
};

// Runs every claim of every entry, then both relator banks.
CatalogReport verify_catalog();

// JSON index of the catalog: [{id, surface, g, n, theorem, quote}, ...].
std::string catalog_index_json();

std::string to_string(CheckStatus s);

} // namespace mcg
