#pragma once

#include "mcg/presentation.hpp"

#include <vector>

namespace mcg {

struct CosetResult {
    bool completed = false; // false: the coset cap was hit (index unknown)
    long index = 0;         // [subgroup : G] when completed
    long defined = 0;       // total cosets ever defined, dead ones included
};

// Coset enumeration over the subgroup generated by the given words, HLT
// strategy with coincidence handling. Cosets are numbered in definition
// order, which makes runs reproducible. Throws errc::malformed_data on words
// outside the generator alphabet; a hit cap is reported, not thrown.
CosetResult todd_coxeter(const Presentation& p, const std::vector<Word>& subgroup_gens,
                         long max_cosets);

} // namespace mcg
