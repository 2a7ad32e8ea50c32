#pragma once

#include "mcg/presentation.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace mcg {

// Dense integer matrix over GMP integers, row-major.
struct IntMatrix {
    size_t rows = 0, cols = 0;
    std::vector<mpz_class> a;

    IntMatrix() = default;
    IntMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}
    static IntMatrix identity(size_t n);

    mpz_class& at(size_t i, size_t j) { return a[i * cols + j]; }
    const mpz_class& at(size_t i, size_t j) const { return a[i * cols + j]; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

IntMatrix mul(const IntMatrix& x, const IntMatrix& y);
mpz_class determinant(IntMatrix m); // fraction-free elimination, exact

// u * input * v = d with u, v unimodular; d diagonal, nonnegative,
// d[i] | d[i+1].
struct SnfResult {
    IntMatrix d, u, v;
    size_t rank = 0; // number of nonzero diagonal entries
};

SnfResult smith_normal_form(IntMatrix m);

// Invariant-factor decomposition of the abelianized group.
struct Abelianization {
    int free_rank = 0;
    std::vector<mpz_class> torsion; // factors > 1, each dividing the next

    friend bool operator==(const Abelianization&, const Abelianization&) = default;
};

Abelianization abelianization(const Presentation& p);
std::string to_string(const Abelianization& ab);

// Exponent vector of w against p.generators (throws on unknown letters).
std::vector<mpz_class> exponent_vector(const Presentation& p, const Word& w);

// True iff the exponent vector of w lies in the integer row lattice of the
// relator matrix, i.e. w = 1 is forced in the abelianization. A necessary
// condition for w = 1 in the group itself.
bool abelian_consequence_check(const Presentation& p, const Word& w);

} // namespace mcg
