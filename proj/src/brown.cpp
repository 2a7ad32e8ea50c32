#include "mcg/brown.hpp"

#include "mcg/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace mcg {

namespace {

struct Checked {
    std::map<std::string, const BrownVertex*> vertex;
    std::map<std::string, const BrownEdge*> edge;
    std::map<std::string, std::string> edge_gen; // edge id -> generator name
};

void check_alphabet(const Presentation& p, const Word& w, const std::string& what) {
    for (const auto& l : w)
        if (!p.has_generator(l.gen))
            throw error(errc::malformed_data,
                        what + " uses '" + l.gen + "' outside its vertex group");
}

Checked validate(const BrownData& d) {
    Checked c;
    std::set<std::string> gens;
    for (const auto& v : d.vertices) {
        v.pres.validate();
        if (!c.vertex.emplace(v.id, &v).second)
            throw error(errc::malformed_data, "duplicate vertex id '" + v.id + "'");
        for (const auto& g : v.pres.generators)
            if (!gens.insert(g).second)
                throw error(errc::malformed_data,
                            "generator '" + g + "' appears in two vertex groups");
    }
    for (const auto& e : d.edges) {
        if (!c.edge.emplace(e.id, &e).second)
            throw error(errc::malformed_data, "duplicate edge id '" + e.id + "'");
        auto s = c.vertex.find(e.src), t = c.vertex.find(e.dst);
        if (s == c.vertex.end() || t == c.vertex.end())
            throw error(errc::incomplete_data, "edge '" + e.id + "' references a missing vertex");
        for (const auto& g : e.stab) {
            check_alphabet(s->second->pres, g.i, "edge '" + e.id + "' initial image");
            check_alphabet(t->second->pres, g.c, "edge '" + e.id + "' terminal image");
        }
        std::string name = "g_" + e.id;
        while (gens.count(name)) name += "_";
        gens.insert(name);
        c.edge_gen[e.id] = name;
    }
    for (const auto& t : d.triangles) {
        auto a = c.edge.find(t.a), b = c.edge.find(t.b), cc = c.edge.find(t.c);
        if (a == c.edge.end() || b == c.edge.end() || cc == c.edge.end())
            throw error(errc::incomplete_data, "triangle references a missing edge");
        const std::string& u = a->second->src;
        const std::string& v = a->second->dst;
        const std::string& w = b->second->dst;
        if (b->second->src != v || cc->second->src != u || cc->second->dst != w)
            throw error(errc::malformed_data,
                        "triangle edges are not head-to-tail (u->v, v->w, u->w)");
        check_alphabet(c.vertex.at(u)->pres, t.ha, "triangle word ha");
        check_alphabet(c.vertex.at(v)->pres, t.hb, "triangle word hb");
        check_alphabet(c.vertex.at(w)->pres, t.hc, "triangle word hc");
        check_alphabet(c.vertex.at(u)->pres, t.h, "triangle word h");
    }
    return c;
}

} // namespace

BrownResult brown_assembly(const BrownData& data, bool reduce) {
    Checked c = validate(data);
    BrownResult out;

    if (!reduce) {
        for (const auto& v : data.vertices) {
            out.pres.generators.insert(out.pres.generators.end(),
                                       v.pres.generators.begin(), v.pres.generators.end());
            out.pres.relators.insert(out.pres.relators.end(), v.pres.relators.begin(),
                                     v.pres.relators.end());
        }
        for (const auto& e : data.edges) out.pres.generators.push_back(c.edge_gen[e.id]);
        for (const auto& e : data.edges)
            if (e.in_tree) out.pres.relators.push_back(Word{{c.edge_gen[e.id], 1}});
        for (const auto& e : data.edges) {
            const std::string& g = c.edge_gen[e.id];
            for (const auto& s : e.stab)
                out.pres.relators.push_back(free_reduce(concat(
                    concat(Word{{g, -1}}, concat(s.i, Word{{g, 1}})), inverse(s.c))));
        }
        for (const auto& t : data.triangles) {
            Word w = t.ha;
            w.push_back({c.edge_gen[t.a], 1});
            w = concat(w, t.hb);
            w.push_back({c.edge_gen[t.b], 1});
            w = concat(w, t.hc);
            w.push_back({c.edge_gen[t.c], -1});
            w = concat(w, inverse(t.h));
            out.pres.relators.push_back(free_reduce(w));
        }
        out.pres.validate();
        return out;
    }

    // expressions for determined edge generators, in vertex generators only
    std::map<std::string, Word> expr;
    for (const auto& e : data.edges)
        if (e.in_tree) expr[e.id] = Word{};
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto& t : data.triangles) {
            int known = expr.count(t.a) + expr.count(t.b) + expr.count(t.c);
            if (known != 2) continue;
            // ha ga hb gb hc gc^-1 = h, solve for the unknown one
            if (!expr.count(t.a)) {
                expr[t.a] = free_reduce(concat(
                    inverse(t.ha),
                    concat(t.h, concat(expr[t.c], concat(inverse(t.hc),
                                                          concat(inverse(expr[t.b]),
                                                                 inverse(t.hb)))))));
            } else if (!expr.count(t.b)) {
                expr[t.b] = free_reduce(concat(
                    inverse(t.hb),
                    concat(inverse(expr[t.a]),
                           concat(inverse(t.ha),
                                  concat(t.h, concat(expr[t.c], inverse(t.hc)))))));
            } else {
                expr[t.c] = free_reduce(concat(
                    inverse(t.h),
                    concat(t.ha, concat(expr[t.a], concat(t.hb, concat(expr[t.b], t.hc))))));
            }
            changed = true;
        }
    }

    for (const auto& v : data.vertices) {
        out.pres.generators.insert(out.pres.generators.end(), v.pres.generators.begin(),
                                   v.pres.generators.end());
        out.pres.relators.insert(out.pres.relators.end(), v.pres.relators.begin(),
                                 v.pres.relators.end());
    }
    for (const auto& e : data.edges)
        if (!expr.count(e.id)) {
            out.complete = false;
            out.stuck.push_back(e.id);
            out.pres.generators.push_back(c.edge_gen[e.id]);
        }
    auto edge_word = [&](const std::string& id, int exp) {
        if (auto it = expr.find(id); it != expr.end())
            return exp == 1 ? it->second : inverse(it->second);
        return Word{{c.edge_gen.at(id), exp}};
    };
    for (const auto& e : data.edges) {
        for (const auto& s : e.stab) {
            Word w = concat(edge_word(e.id, -1),
                            concat(s.i, concat(edge_word(e.id, 1), inverse(s.c))));
            w = free_reduce(w);
            if (!w.empty()) out.pres.relators.push_back(std::move(w));
        }
    }
    for (const auto& t : data.triangles) {
        Word w = concat(t.ha, edge_word(t.a, 1));
        w = concat(w, concat(t.hb, edge_word(t.b, 1)));
        w = concat(w, concat(t.hc, edge_word(t.c, -1)));
        w = concat(w, inverse(t.h));
        w = free_reduce(w);
        if (!w.empty()) out.pres.relators.push_back(std::move(w));
    }
    out.pres.validate();
    return out;
}

} // namespace mcg
