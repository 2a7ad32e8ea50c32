#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mcg/diagram.hpp"

namespace mcg {

// Counts of rank-1 orbit classes (isotopy classes of single generic curves up
// to homeomorphism), broken down by the three structural families.
struct VertexCensus {
    long long nonsep_orientable_complement = 0;
    long long nonsep_nonorientable_complement = 0;
    long long separating = 0;

    long long total() const {
        return nonsep_orientable_complement + nonsep_nonorientable_complement +
               separating;
    }

    bool operator==(const VertexCensus&) const = default;
};

// Closed-form census for target N_g with n boundary components, chi < 0.
// Counts agree with enumerate_orbit_simplices(g, n, 1).size() for every
// admissible (g, n); the dual computation is exercised by tests and by
// `census --method both`.
VertexCensus vertex_orbit_census(int genus, int boundary);

inline constexpr std::uint64_t default_diagram_cap = 1'000'000;

// All orbit classes of ordered generic r-curve systems on N_g^n, one
// representative CutDiagram per class, sorted by ordered_signature.
// r = 0 yields the single empty family. Throws errc::not_applicable when
// chi(N_g^n) >= 0, errc::malformed_data for r outside 0..3, and
// errc::resource_limit when the search exceeds `cap` candidate diagrams.
std::vector<CutDiagram> enumerate_orbit_simplices(
    int genus, int boundary, int rank,
    std::uint64_t cap = default_diagram_cap);

// Vertex of the genus-1 combinatorial model, valid for n >= 2 boundary
// labels. A separating vertex stores the ordered pair (I, J) with
// #I <= #J (min-element tiebreak); a nonseparating vertex stores I alone,
// normalized so that #I <= n - #I with 1 in I on ties. J is empty and
// unused in the nonseparating case.
struct VertexG1 {
    bool separating = false;
    std::vector<int> I;
    std::vector<int> J;

    bool operator==(const VertexG1&) const = default;
    auto operator<=>(const VertexG1&) const = default;
};

std::string g1_vertex_name(const VertexG1& v);

// Quotient of the curve-system complex by the mapping class group action.
// Vertices, edges and triangles are orbit classes; edges are ordered (both
// directions present), and every pairwise-adjacent ordered triple
// contributes a triangle. Cells carry either an explicit representative
// diagram or symbolic genus-1 data, never both.
struct QuotientComplex {
    struct Vertex {
        std::optional<CutDiagram> rep;
        std::optional<VertexG1> symbolic;
    };
    struct Edge {
        int id = 0;
        int src = 0;
        int dst = 0;
        std::optional<CutDiagram> rep;
        std::optional<std::pair<VertexG1, VertexG1>> symbolic;
    };
    struct Triangle {
        int a = 0;  // edge (1,2): src vertex -> middle vertex
        int b = 0;  // edge (2,3): middle vertex -> dst vertex
        int c = 0;  // edge (1,3): src vertex -> dst vertex
    };

    Surface target;
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<Triangle> triangles;

    bool symbolic() const {
        return !vertices.empty() && vertices.front().symbolic.has_value();
    }
};

// Builds the quotient complex by exhaustive enumeration of rank 1..3 orbit
// classes. Face maps are computed by cutting along subfamilies and matching
// signatures. Same errors as enumerate_orbit_simplices.
QuotientComplex build_quotient_complex(int genus, int boundary,
                                       std::uint64_t cap = default_diagram_cap);

// Genus-1 model built directly from the set-system description; requires
// n >= 2 (the complex is empty below that). Scales to boundary counts the
// exhaustive builder cannot reach.
QuotientComplex g1_symbolic_complex(int boundary);

// Edge ids of a maximal tree in the quotient complex, selected by the
// per-genus base-vertex constructions. Throws errc::not_a_tree if the
// selection fails structurally and errc::not_applicable for sporadic or
// empty targets.
std::set<int> build_maximal_tree(const QuotientComplex& x);

struct ClosureResult {
    // Edge ids (both orderings of every covered edge) proved determinable.
    std::set<int> determinable;
    // Loop edges whose reversal is a different orbit class: the unordered
    // pairing used by the closure is not faithful for these.
    std::vector<int> flagged_edges;

    bool covers_all(const QuotientComplex& x) const {
        return determinable.size() == x.edges.size();
    }
};

// Fixpoint of the rule "a triangle with two determinable edges determines
// the third", seeded with the tree edges. Works on unordered edge classes:
// an edge and its reversal are marked together.
ClosureResult determinability_closure(const QuotientComplex& x,
                                      const std::set<int>& tree);

std::string complex_to_json(const QuotientComplex& x, const std::set<int>& tree,
                            const std::set<int>& determinable);
QuotientComplex complex_from_json(const std::string& text);

}  // namespace mcg
