#pragma once

#include "mcg/presentation.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace mcg {

// Certificate that a word lies in the normal closure of the relators: a
// product of conjugates  prod conj_i . r_{id_i}^{exp_i} . conj_i^-1  that
// freely reduces to the word in question.
struct Derivation {
    struct Term {
        std::size_t relator = 0;
        Word conjugator;
        int exp = 1; // +1 or -1
    };
    std::vector<Term> terms;
};

struct AddGen {
    std::string name;
    Word definition; // word in the existing generators
};
struct RemoveGen {
    std::string name;
    std::size_t relator = 0; // defining relator: sole occurrence of name
};
struct AddRelator {
    Word w;
    std::optional<Derivation> witness;
};
struct RemoveRedundantRelator {
    std::size_t relator = 0;
    std::optional<Derivation> witness; // derived from the remaining relators
};
struct Simplify {};

using TietzeMove = std::variant<AddGen, RemoveGen, AddRelator, RemoveRedundantRelator, Simplify>;

// Applies one move. Witnessed moves are checked (errc::invalid_move on a bad
// certificate); unwitnessed relator moves succeed but set .extended.
Presentation tietze(const Presentation& p, const TietzeMove& move);

} // namespace mcg
