#pragma once

#include <stdexcept>
#include <string>

namespace mcg {

enum class errc {
    parity,               // boundary/chi parity impossible for an orientable surface
    negative_genus,       // chi too large for the requested type
    not_applicable,       // census/complex requested outside its domain (chi >= 0)
    malformed_diagram,    // structural invariant of a cut diagram broken
    mismatched_target,    // comparing diagrams over different target surfaces
    resource_limit,       // enumeration exceeded its candidate cap
    not_a_tree,           // tree construction could not select a unique spanning set
    relator_not_in_subgroup, // relator has sign -1, not contained in the index-2 kernel
    index_one,            // sign map is trivial, subgroup is the whole group
    invalid_move,         // Tietze move preconditions not met
    malformed_data,       // extension/Brown input inconsistent
    incomplete_data,      // Brown data missing stabilizer/triangle entries
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

} // namespace mcg
