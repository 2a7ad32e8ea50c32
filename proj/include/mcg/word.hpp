#pragma once

#include <string>
#include <vector>

namespace mcg {

// One letter of a group word: a generator name with exponent +1 or -1.
struct Letter {
    std::string gen;
    int exp = 1;

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

// Token syntax: NAME, NAME^-1, NAME^k as sugar for |k| repetitions, and
// (WORD)^k for grouped powers. Names match [A-Za-z][A-Za-z0-9_]*.
Word parse_word(const std::string& text);
std::string format_word(const Word& w);

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, int k);

// Cancel adjacent x x^-1 pairs until none remain.
Word free_reduce(Word w);

bool is_identity(const Word& w); // after free reduction

} // namespace mcg
