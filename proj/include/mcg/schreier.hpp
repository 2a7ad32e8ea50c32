#pragma once

#include "mcg/presentation.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mcg {

// Presentation of the index-2 subgroup ker(G -> Z/2) determined by a sign
// assignment on the generators (missing entries default to +1).
//
// Uses the Schreier transversal {1, t} with t the first generator of sign -1.
// Schreier generators are named after the originals: for a generator x,
// coset-1 rewrites produce "x" (sign +1, the element x) or "x_t" (the element
// x t^-1); coset-t rewrites produce "t_x" (t x t^-1 resp. t x). The trivial
// generator t t^-1 is dropped, so a free group of rank n maps to a free
// subgroup of rank 2n - 1.
struct RSResult {
    Presentation subgroup;
    // new generator -> word in the original generators
    std::vector<std::pair<std::string, Word>> embedding;
};

RSResult reidemeister_schreier_index2(const Presentation& p,
                                      const std::map<std::string, int>& sign);

} // namespace mcg
