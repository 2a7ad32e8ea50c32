#pragma once

#include "mcg/surface.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace mcg {

enum class CurveKind { two_sided, one_sided };

// One component of the surface cut along the whole curve family. Slot ids
// are boundary circles created by the cut or assigned to exterior boundary
// curves; they are unique across the diagram. orientation_class assigns +-1
// to every slot of an orientable component (meaningful up to a global flip of
// the component); non-orientable components carry no orientation data.
struct ComponentSpec {
    int id = 0;
    bool orientable = false;
    int genus = 0;
    std::vector<int> slots;
    std::map<int, int> orientation_class;
};

// two_sided: slots a and b are identified. one_sided: slot_a is glued to
// itself by the antipodal map, producing the one-sided curve as the core of
// the resulting crosscap; slot_b is unused.
struct CurveGluing {
    int index = 0; // 1-based position of the curve in the ordered family
    CurveKind kind = CurveKind::two_sided;
    int slot_a = 0;
    int slot_b = 0;
};

// Combinatorial model of a surface together with an ordered curve family:
// the components of the cut surface plus the regluing instructions.
struct CutDiagram {
    Surface target;
    std::vector<ComponentSpec> components;
    std::map<int, int> exterior; // boundary index (1..n) -> slot
    std::vector<CurveGluing> curves;
};

struct SurfaceInvariants {
    bool connected = false;
    bool orientable = false;
    int genus = 0; // -1 when disconnected (no single classification)
    std::vector<int> boundary_labels;

    friend bool operator==(const SurfaceInvariants&, const SurfaceInvariants&) = default;
};

struct Violation {
    std::string rule; // R1..R5
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<std::string> warnings;
    bool ok() const { return violations.empty(); }
};

// Structural well-formedness (slot usage, index ranges, orientation data).
// Throws errc::malformed_diagram; all higher-level operations call it.
void validate_structure(const CutDiagram& d);

// Genericity rules:
//  R1 disk component;
//  R2 a curve bounds a Moebius strip: Moebius component on a two_sided
//     endpoint, Moebius component with an exterior slot in a multi-component
//     diagram, or an annulus joining a one_sided gluing to a two_sided
//     endpoint;
//  R3 isotopic or boundary-parallel curves: annulus joining two distinct
//     two_sided curves, or a two_sided curve to an exterior slot;
//  R4 glued surface disconnected;
//  R5 glued surface does not match the target (which must be non-orientable
//     with chi < 0).
// Warning: a one_sided gluing on a non-orientable genus-1 component (possible
// Klein-bottle-summand isotopy not visible to local rules).
ValidationReport validate_generic(const CutDiagram& d);

SurfaceInvariants glue_invariants(const CutDiagram& d);

// Diagram of the subfamily: discarded curves are reglued, merging their
// components. Kept curves keep their indices, slots keep their ids.
CutDiagram cut_subfamily(const CutDiagram& d, const std::set<int>& keep);

// Renumber curves 1..k preserving order (after cut_subfamily).
CutDiagram reindex_curves(const CutDiagram& d);

// Encoding invariant under component permutation, slot renaming and global
// orientation flips per component; curve indices and exterior labels are
// fixed. Equal encodings imply equal ordered orbits, not conversely.
std::string canonical_form(const CutDiagram& d);

// Complete invariant for ordered orbit equivalence: the component signatures
// of every subfamily cut. Two diagrams are in the same ordered orbit iff
// their signatures are equal strings.
std::string ordered_signature(const CutDiagram& d);

struct OrbitWitness {
    bool equal = false;
    std::vector<int> sigma; // sigma[i-1] = matching index in the second family
};

// Same M(F)-orbit of (ordered or unordered) curve families. Throws
// errc::mismatched_target when the targets differ.
OrbitWitness orbit_equal(const CutDiagram& a, const CutDiagram& b, bool ordered);

CutDiagram diagram_from_json(const std::string& json_text);
std::string diagram_to_json(const CutDiagram& d);

} // namespace mcg
