#include "mcg/word.hpp"

#include "mcg/error.hpp"

#include <cctype>
#include <cstdlib>

namespace mcg {

static bool name_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

static void skip_separators(const std::string& text, size_t& i) {
    while (i < text.size() &&
           (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '*'))
        ++i;
}

// Reads an optional '^' INT suffix; 1 when absent.
static int exponent_suffix(const std::string& text, size_t& i) {
    if (i >= text.size() || text[i] != '^') return 1;
    ++i;
    size_t k = i;
    if (k < text.size() && (text[k] == '-' || text[k] == '+')) ++k;
    size_t d = k;
    while (d < text.size() && std::isdigit(static_cast<unsigned char>(text[d]))) ++d;
    if (d == k)
        throw error(errc::malformed_data, "missing exponent after '^' in word");
    int exp = std::atoi(text.substr(i, d - i).c_str());
    i = d;
    return exp;
}

// item := (NAME | '(' items ')') ('^' INT)?
static Word parse_items(const std::string& text, size_t& i, bool nested) {
    Word out;
    while (true) {
        skip_separators(text, i);
        if (i >= text.size()) {
            if (nested) throw error(errc::malformed_data, "unmatched '(' in word");
            return out;
        }
        char c = text[i];
        if (c == ')') {
            if (!nested) throw error(errc::malformed_data, "unmatched ')' in word");
            return out;
        }
        if (c == '(') {
            ++i;
            Word group = parse_items(text, i, true);
            ++i; // the ')'
            int exp = exponent_suffix(text, i);
            Word p = power(group, exp);
            out.insert(out.end(), p.begin(), p.end());
            continue;
        }
        if (c == '1') {
            // identity symbol, as emitted by format_word for the empty word
            ++i;
            exponent_suffix(text, i);
            continue;
        }
        if (!name_start(c))
            throw error(errc::malformed_data,
                        "bad word token near '" + text.substr(i, 8) + "'");
        size_t j = i + 1;
        while (j < text.size() && name_char(text[j])) ++j;
        std::string name = text.substr(i, j - i);
        i = j;
        int exp = exponent_suffix(text, i);
        int sign = exp < 0 ? -1 : 1;
        for (int r = 0; r < std::abs(exp); ++r) out.push_back({name, sign});
    }
}

Word parse_word(const std::string& text) {
    size_t i = 0;
    return parse_items(text, i, false);
}

std::string format_word(const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += w[i].gen;
        if (w[i].exp < 0) out += "^-1";
    }
    return out;
}

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->gen, -it->exp});
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Word power(const Word& w, int k) {
    Word base = k < 0 ? inverse(w) : w;
    Word out;
    for (int i = 0; i < std::abs(k); ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
}

Word free_reduce(Word w) {
    Word out;
    out.reserve(w.size());
    for (const auto& l : w) {
        if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

bool is_identity(const Word& w) { return free_reduce(w).empty(); }

} // namespace mcg
