#include "mcg/tietze.hpp"

#include "mcg/error.hpp"

#include <algorithm>
#include <map>

namespace mcg {

namespace {

// substitute every occurrence of `name` in w by `value` (name^-1 by value^-1)
Word substitute(const Word& w, const std::string& name, const Word& value) {
    Word out;
    Word inv = inverse(value);
    for (const auto& l : w) {
        if (l.gen != name) {
            out.push_back(l);
        } else {
            const Word& rep = l.exp == 1 ? value : inv;
            out.insert(out.end(), rep.begin(), rep.end());
        }
    }
    return free_reduce(out);
}

Word cyclic_reduce(Word w) {
    w = free_reduce(std::move(w));
    while (w.size() >= 2 && w.front().gen == w.back().gen && w.front().exp == -w.back().exp) {
        w.erase(w.begin());
        w.pop_back();
        w = free_reduce(std::move(w));
    }
    return w;
}

void check_derivation(const Presentation& p, const Derivation& d, const Word& target,
                      std::optional<std::size_t> skip) {
    Word prod;
    for (const auto& t : d.terms) {
        if (t.relator >= p.relators.size())
            throw error(errc::invalid_move, "derivation references missing relator");
        if (skip && t.relator == *skip)
            throw error(errc::invalid_move,
                        "derivation may not use the relator being removed");
        if (t.exp != 1 && t.exp != -1)
            throw error(errc::invalid_move, "derivation exponent must be +-1");
        Word r = t.exp == 1 ? p.relators[t.relator] : inverse(p.relators[t.relator]);
        prod = concat(prod, concat(t.conjugator, concat(r, inverse(t.conjugator))));
    }
    if (free_reduce(concat(prod, inverse(target))) != Word{})
        throw error(errc::invalid_move, "derivation does not reduce to the target word");
}

Presentation simplify(Presentation p) {
    for (auto& r : p.relators) r = cyclic_reduce(std::move(r));
    for (;;) {
        // drop empty and duplicate relators (duplicates up to inversion)
        std::vector<Word> kept;
        for (const auto& r : p.relators) {
            if (r.empty()) continue;
            bool dup = false;
            for (const auto& k : kept)
                if (k == r || k == inverse(r)) {
                    dup = true;
                    break;
                }
            if (!dup) kept.push_back(r);
        }
        p.relators = std::move(kept);

        // a generator occurring exactly once in exactly one relator is
        // defined by it; both can go
        std::map<std::string, int> count;
        for (const auto& r : p.relators)
            for (const auto& l : r) ++count[l.gen];
        bool changed = false;
        for (const auto& g : p.generators) {
            if (count.count(g) == 0 || count[g] != 1) continue;
            std::size_t hit = 0;
            for (std::size_t i = 0; i < p.relators.size(); ++i)
                for (const auto& l : p.relators[i])
                    if (l.gen == g) hit = i;
            p.relators.erase(p.relators.begin() + static_cast<long>(hit));
            p.generators.erase(std::find(p.generators.begin(), p.generators.end(), g));
            changed = true;
            break;
        }
        if (!changed) return p;
    }
}

} // namespace

Presentation tietze(const Presentation& p, const TietzeMove& move) {
    p.validate();
    Presentation out = p;

    if (const auto* m = std::get_if<AddGen>(&move)) {
        if (out.has_generator(m->name))
            throw error(errc::invalid_move, "generator '" + m->name + "' already present");
        for (const auto& l : m->definition)
            if (!out.has_generator(l.gen))
                throw error(errc::invalid_move, "definition uses unknown generator");
        out.generators.push_back(m->name);
        out.relators.push_back(
            free_reduce(concat(Word{{m->name, 1}}, inverse(m->definition))));
    } else if (const auto* m = std::get_if<RemoveGen>(&move)) {
        if (!out.has_generator(m->name))
            throw error(errc::invalid_move, "no generator '" + m->name + "'");
        if (m->relator >= out.relators.size())
            throw error(errc::invalid_move, "relator index out of range");
        Word r = cyclic_reduce(out.relators[m->relator]);
        std::size_t occurrences = 0, pos = 0;
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i].gen == m->name) {
                ++occurrences;
                pos = i;
            }
        if (occurrences != 1)
            throw error(errc::invalid_move,
                        "relator must contain exactly one occurrence of '" + m->name + "'");
        // rotate so the occurrence leads, then solve name = value
        std::rotate(r.begin(), r.begin() + static_cast<long>(pos), r.end());
        Word value = inverse(Word(r.begin() + 1, r.end()));
        if (r[0].exp == -1) value = inverse(value);
        out.relators.erase(out.relators.begin() + static_cast<long>(m->relator));
        for (auto& rel : out.relators) rel = substitute(rel, m->name, value);
        out.generators.erase(
            std::find(out.generators.begin(), out.generators.end(), m->name));
    } else if (const auto* m = std::get_if<AddRelator>(&move)) {
        for (const auto& l : m->w)
            if (!out.has_generator(l.gen))
                throw error(errc::invalid_move, "relator uses unknown generator");
        if (m->witness)
            check_derivation(out, *m->witness, m->w, std::nullopt);
        else
            out.extended = true;
        out.relators.push_back(free_reduce(m->w));
    } else if (const auto* m = std::get_if<RemoveRedundantRelator>(&move)) {
        if (m->relator >= out.relators.size())
            throw error(errc::invalid_move, "relator index out of range");
        if (m->witness)
            check_derivation(out, *m->witness, out.relators[m->relator], m->relator);
        else
            out.extended = true;
        out.relators.erase(out.relators.begin() + static_cast<long>(m->relator));
    } else {
        out = simplify(std::move(out));
    }
    out.validate();
    return out;
}

} // namespace mcg
