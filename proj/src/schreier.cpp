#include "mcg/schreier.hpp"

#include "mcg/error.hpp"

#include <set>

namespace mcg {

RSResult reidemeister_schreier_index2(const Presentation& p,
                                      const std::map<std::string, int>& sign) {
    p.validate();
    auto sgn = [&](const std::string& g) {
        auto it = sign.find(g);
        return it == sign.end() ? 1 : it->second;
    };
    for (const auto& [g, s] : sign) {
        if (!p.has_generator(g))
            throw error(errc::malformed_data, "sign map names unknown generator '" + g + "'");
        if (s != 1 && s != -1)
            throw error(errc::malformed_data, "sign must be +1 or -1");
    }
    std::string t;
    for (const auto& g : p.generators)
        if (sgn(g) == -1) {
            t = g;
            break;
        }
    if (t.empty())
        throw error(errc::index_one, "all generators have sign +1; subgroup is everything");

    // Schreier generator bookkeeping: key (coset, generator) -> name, word.
    RSResult out;
    std::map<std::pair<int, std::string>, std::string> name_of;
    std::set<std::string> taken(p.generators.begin(), p.generators.end());
    auto fresh = [&](std::string n) {
        while (taken.count(n)) n += "_";
        taken.insert(n);
        return n;
    };
    for (const auto& g : p.generators) {
        if (g != t) {
            std::string n0 = fresh(sgn(g) == 1 ? g : g + "_t");
            name_of[{0, g}] = n0;
            out.subgroup.generators.push_back(n0);
            out.embedding.push_back(
                {n0, sgn(g) == 1 ? Word{{g, 1}} : Word{{g, 1}, {t, -1}}});
        }
        std::string n1 = fresh("t_" + g);
        name_of[{1, g}] = n1;
        out.subgroup.generators.push_back(n1);
        out.embedding.push_back(
            {n1, sgn(g) == 1 ? Word{{t, 1}, {g, 1}, {t, -1}} : Word{{t, 1}, {g, 1}}});
    }

    // rewrite each relator at both transversal elements
    auto rewrite = [&](const Word& w, int start) {
        Word out_w;
        int c = start;
        for (const auto& l : w) {
            if (l.exp == 1) {
                if (!(c == 0 && l.gen == t)) out_w.push_back({name_of[{c, l.gen}], 1});
                if (sgn(l.gen) == -1) c ^= 1;
            } else {
                if (sgn(l.gen) == -1) c ^= 1;
                if (!(c == 0 && l.gen == t)) out_w.push_back({name_of[{c, l.gen}], -1});
            }
        }
        return free_reduce(out_w);
    };
    for (const auto& r : p.relators) {
        int s = 1;
        for (const auto& l : r)
            if (sgn(l.gen) == -1) s = -s;
        if (s == -1)
            throw error(errc::relator_not_in_subgroup,
                        "relator has sign -1, subgroup map is not well defined");
        for (int c : {0, 1}) {
            Word w = rewrite(r, c);
            if (!w.empty()) out.subgroup.relators.push_back(std::move(w));
        }
    }
    out.subgroup.validate();
    return out;
}

} // namespace mcg
