#include "mcg/orbit.hpp"

#include <json.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mcg/error.hpp"

namespace mcg {

namespace {

using nlohmann::ordered_json;

long long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void require_admissible_target(int genus, int boundary) {
    if (genus < 1)
        throw error(errc::negative_genus, "target genus must be at least 1");
    if (boundary < 0)
        throw error(errc::malformed_data, "negative boundary count");
    if (2 - genus - boundary >= 0)
        throw error(errc::not_applicable,
                    "no generic curves on a target with chi >= 0");
}

}  // namespace

VertexCensus vertex_orbit_census(int genus, int boundary) {
    require_admissible_target(genus, boundary);
    const int g = genus, n = boundary;
    VertexCensus c;
    c.nonsep_orientable_complement = n == 0 ? 1 : (1LL << (n - 1));
    c.nonsep_nonorientable_complement = g >= 3 ? 2 : (g == 2 ? 1 : 0);
    // Orientable piece of genus k carrying m of the boundary labels in one
    // of the 2^{m-1} orientation splittings. Both complementary pieces must
    // have chi <= -1, which pins 2k + m into [2, g + n - 2].
    for (int k = 0; 2 * k <= g - 1; ++k)
        for (int m = 0; m <= n; ++m) {
            if (2 * k + m < 2 || 2 * k + m > g + n - 2) continue;
            c.separating += binom(n, m) * (m >= 1 ? (1LL << (m - 1)) : 1);
        }
    // Two non-orientable pieces of genus l and g - l. Each piece needs
    // chi <= -1. When the genera agree, the unordered splitting is counted
    // twice by the (l, label-set) description, except for the
    // self-complementary empty assignment on closed targets.
    for (int l = 1; 2 * l <= g; ++l) {
        long long d = 0;
        for (int i = 0; i <= n; ++i) {
            if (l + i < 2) continue;
            if ((g - l) + (n - i) < 2) continue;
            d += binom(n, i);
        }
        if (2 * l < g)
            c.separating += d;
        else
            c.separating += (d + (n == 0 ? 1 : 0)) / 2;
    }
    return c;
}

namespace {

// Admissible component shape: chi <= -1 pieces only, since any disk,
// annulus or Moebius piece in a valid diagram is excluded by the local
// rules or forces a disconnected / mismatched target.
struct CompType {
    int chi;
    bool orientable;
    int genus;
    int slots;
    bool operator==(const CompType&) const = default;
};

std::vector<CompType> component_types(int chi_total) {
    std::vector<CompType> out;
    for (int c = -1; c >= chi_total; --c) {
        for (int gamma = 0;; ++gamma) {
            int b = 2 - 2 * gamma - c;
            if (b < 1) break;
            out.push_back({c, true, gamma, b});
        }
        for (int gamma = 1;; ++gamma) {
            int b = 2 - gamma - c;
            if (b < 1) break;
            out.push_back({c, false, gamma, b});
        }
    }
    return out;
}

// One boundary slot of the cut surface, in canonical order: both endpoints
// of every two-sided curve, then the one-sided curves, then the exterior
// labels. The slot id of a token is its position + 1.
struct Token {
    char kind;  // 'a'/'b' two-sided endpoints, 'o' one-sided, 'e' exterior
    int ref;    // curve index or boundary label
};

struct EnumState {
    int g = 0, n = 0, r = 0;
    std::uint64_t cap = 0;
    std::uint64_t used = 0;

    std::vector<Token> tokens;
    std::vector<int> pos_a, pos_b, pos_o;  // curve index -> token position
    std::vector<CompType> comp;
    std::vector<int> fill;   // occupied slots per component
    std::vector<int> where;  // token position -> component

    std::map<std::string, CutDiagram> classes;

    void charge() {
        if (++used > cap)
            throw error(errc::resource_limit,
                        "candidate diagram budget exhausted");
    }
};

void emit_candidate(EnumState& st, const std::vector<int>& sign) {
    st.charge();
    CutDiagram d;
    d.target = Surface{false, st.g, st.n};
    const int k = static_cast<int>(st.comp.size());
    d.components.resize(k);
    for (int j = 0; j < k; ++j) {
        d.components[j].id = j + 1;
        d.components[j].orientable = st.comp[j].orientable;
        d.components[j].genus = st.comp[j].genus;
    }
    for (std::size_t t = 0; t < st.tokens.size(); ++t) {
        ComponentSpec& c = d.components[st.where[t]];
        const int slot = static_cast<int>(t) + 1;
        c.slots.push_back(slot);
        if (c.orientable) c.orientation_class[slot] = sign[t];
        if (st.tokens[t].kind == 'e') d.exterior[st.tokens[t].ref] = slot;
    }
    for (int i = 1; i <= st.r; ++i) {
        if (st.pos_o[i] >= 0)
            d.curves.push_back(
                {i, CurveKind::one_sided, st.pos_o[i] + 1, 0});
        else
            d.curves.push_back(
                {i, CurveKind::two_sided, st.pos_a[i] + 1, st.pos_b[i] + 1});
    }
    std::string sig = ordered_signature(d);
    st.classes.emplace(std::move(sig), std::move(d));
}

void finish_placement(EnumState& st) {
    st.charge();
    const int k = static_cast<int>(st.comp.size());

    // The glued surface must be connected; only two-sided gluings join
    // distinct components.
    std::vector<int> parent(k);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    int pieces = k;
    bool any_one_sided = false;
    for (int i = 1; i <= st.r; ++i) {
        if (st.pos_o[i] >= 0) {
            any_one_sided = true;
            continue;
        }
        int ra = find(st.where[st.pos_a[i]]);
        int rb = find(st.where[st.pos_b[i]]);
        if (ra != rb) {
            parent[ra] = rb;
            --pieces;
        }
    }
    if (pieces != 1) return;

    bool any_nonorientable = false;
    for (const CompType& c : st.comp)
        if (!c.orientable) any_nonorientable = true;

    // Per-component orientation signs. One-sided slots carry no usable
    // orientation data, and the first relevant slot of each orientable
    // component is pinned to +1 (a component flip is an isomorphism).
    std::vector<int> sign(st.tokens.size(), 1);
    std::vector<std::size_t> free_pos;
    std::vector<char> seen(k, 0);
    for (std::size_t t = 0; t < st.tokens.size(); ++t) {
        if (st.tokens[t].kind == 'o') continue;
        int j = st.where[t];
        if (!st.comp[j].orientable) continue;
        if (!seen[j])
            seen[j] = 1;
        else
            free_pos.push_back(t);
    }

    const std::uint64_t combos = 1ULL << free_pos.size();
    for (std::uint64_t m = 0; m < combos; ++m) {
        for (std::size_t b = 0; b < free_pos.size(); ++b)
            sign[free_pos[b]] = (m >> b) & 1 ? -1 : 1;
        if (!any_nonorientable && !any_one_sided) {
            // Every piece is orientable and every gluing is two-sided, so
            // the target is non-orientable only if the sign relations admit
            // no consistent choice of component flips.
            bool contradiction = false;
            std::vector<int> pr(k), fl(k, 0);
            std::iota(pr.begin(), pr.end(), 0);
            auto rootof = [&](int a, int& acc) {
                acc = 0;
                while (pr[a] != a) {
                    acc ^= fl[a];
                    a = pr[a];
                }
                return a;
            };
            for (int i = 1; i <= st.r && !contradiction; ++i) {
                if (st.pos_a[i] < 0) continue;
                int pa = st.where[st.pos_a[i]], pb = st.where[st.pos_b[i]];
                int rel = sign[st.pos_a[i]] == sign[st.pos_b[i]] ? 1 : 0;
                int xa, xb;
                int ra = rootof(pa, xa), rb = rootof(pb, xb);
                if (ra == rb) {
                    if ((xa ^ xb) != rel) contradiction = true;
                } else {
                    pr[ra] = rb;
                    fl[ra] = xa ^ xb ^ rel;
                }
            }
            if (!contradiction) continue;
        }
        emit_candidate(st, sign);
    }
}

void place_token(EnumState& st, std::size_t ti) {
    if (ti == st.tokens.size()) {
        finish_placement(st);
        return;
    }
    const Token& tk = st.tokens[ti];
    const int k = static_cast<int>(st.comp.size());
    int lo = 0;
    if (tk.kind == 'b') lo = st.where[st.pos_a[tk.ref]];
    for (int j = lo; j < k; ++j) {
        if (st.fill[j] == st.comp[j].slots) continue;
        // Identically shaped components are interchangeable while empty:
        // only the first empty one of a run may receive its first token.
        if (j > 0 && st.comp[j] == st.comp[j - 1] && st.fill[j - 1] == 0)
            continue;
        st.where[ti] = j;
        ++st.fill[j];
        place_token(st, ti + 1);
        --st.fill[j];
        st.where[ti] = -1;
    }
}

void component_shapes(EnumState& st, const std::vector<CompType>& types,
                      std::size_t start, int chi_left, int slots_left,
                      int max_k) {
    if (chi_left == 0) {
        if (slots_left == 0 && !st.comp.empty()) {
            st.fill.assign(st.comp.size(), 0);
            st.where.assign(st.tokens.size(), -1);
            place_token(st, 0);
        }
        return;
    }
    if (static_cast<int>(st.comp.size()) == max_k) return;
    for (std::size_t t = start; t < types.size(); ++t) {
        if (types[t].chi < chi_left) continue;
        const int cl = chi_left - types[t].chi;
        const int sl = slots_left - types[t].slots;
        if (sl < 0) continue;
        const int future = max_k - static_cast<int>(st.comp.size()) - 1;
        if (cl < 0 && future == 0) continue;
        // A component of Euler characteristic c carries at most 2 - c
        // slots, so the remaining budget bounds the remaining slots.
        if (sl > 2 * future - cl) continue;
        if (cl == 0 && sl != 0) continue;
        st.comp.push_back(types[t]);
        component_shapes(st, types, t, cl, sl, max_k);
        st.comp.pop_back();
    }
}

CutDiagram empty_family_diagram(int genus, int boundary) {
    CutDiagram d;
    d.target = Surface{false, genus, boundary};
    ComponentSpec c;
    c.id = 1;
    c.orientable = false;
    c.genus = genus;
    for (int j = 1; j <= boundary; ++j) {
        c.slots.push_back(j);
        d.exterior[j] = j;
    }
    d.components.push_back(std::move(c));
    return d;
}

}  // namespace

std::vector<CutDiagram> enumerate_orbit_simplices(int genus, int boundary,
                                                  int rank,
                                                  std::uint64_t cap) {
    require_admissible_target(genus, boundary);
    if (rank < 0 || rank > 3)
        throw error(errc::malformed_data, "rank must be between 0 and 3");
    if (rank == 0) return {empty_family_diagram(genus, boundary)};

    EnumState st;
    st.g = genus;
    st.n = boundary;
    st.r = rank;
    st.cap = cap;
    const int chi = 2 - genus - boundary;
    const std::vector<CompType> types = component_types(chi);

    for (int mask = 0; mask < (1 << rank); ++mask) {
        const int q = std::popcount(static_cast<unsigned>(mask));
        const int p = rank - q;
        st.tokens.clear();
        st.pos_a.assign(rank + 1, -1);
        st.pos_b.assign(rank + 1, -1);
        st.pos_o.assign(rank + 1, -1);
        for (int i = 1; i <= rank; ++i) {
            if (mask & (1 << (i - 1))) continue;
            st.pos_a[i] = static_cast<int>(st.tokens.size());
            st.tokens.push_back({'a', i});
            st.pos_b[i] = static_cast<int>(st.tokens.size());
            st.tokens.push_back({'b', i});
        }
        for (int i = 1; i <= rank; ++i) {
            if (!(mask & (1 << (i - 1)))) continue;
            st.pos_o[i] = static_cast<int>(st.tokens.size());
            st.tokens.push_back({'o', i});
        }
        for (int j = 1; j <= boundary; ++j) st.tokens.push_back({'e', j});

        st.comp.clear();
        component_shapes(st, types, 0, chi,
                         static_cast<int>(st.tokens.size()), p + 1);
    }

    std::vector<CutDiagram> out;
    out.reserve(st.classes.size());
    for (auto& [sig, d] : st.classes) {
        if (!validate_generic(d).ok())
            throw error(errc::malformed_data,
                        "internal: enumerated diagram failed validation");
        out.push_back(std::move(d));
    }
    return out;
}

QuotientComplex build_quotient_complex(int genus, int boundary,
                                       std::uint64_t cap) {
    QuotientComplex x;
    x.target = Surface{false, genus, boundary};

    std::vector<CutDiagram> verts = enumerate_orbit_simplices(genus, boundary, 1, cap);
    std::vector<CutDiagram> edges = enumerate_orbit_simplices(genus, boundary, 2, cap);
    std::vector<CutDiagram> tris = enumerate_orbit_simplices(genus, boundary, 3, cap);

    std::map<std::string, int> vsig;
    for (std::size_t i = 0; i < verts.size(); ++i) {
        vsig[ordered_signature(verts[i])] = static_cast<int>(i);
        x.vertices.push_back({std::move(verts[i]), std::nullopt});
    }

    auto face_vertex = [&](const CutDiagram& e, int keep) {
        CutDiagram f = reindex_curves(cut_subfamily(e, {keep}));
        auto it = vsig.find(ordered_signature(f));
        if (it == vsig.end())
            throw error(errc::malformed_data,
                        "internal: edge face is not an enumerated vertex class");
        return it->second;
    };

    std::map<std::string, int> esig;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        QuotientComplex::Edge ed;
        ed.id = static_cast<int>(i);
        ed.src = face_vertex(edges[i], 1);
        ed.dst = face_vertex(edges[i], 2);
        esig[ordered_signature(edges[i])] = ed.id;
        ed.rep = std::move(edges[i]);
        x.edges.push_back(std::move(ed));
    }

    auto face_edge = [&](const CutDiagram& t, int keep1, int keep2) {
        CutDiagram f = reindex_curves(cut_subfamily(t, {keep1, keep2}));
        auto it = esig.find(ordered_signature(f));
        if (it == esig.end())
            throw error(errc::malformed_data,
                        "internal: triangle face is not an enumerated edge class");
        return it->second;
    };

    for (const CutDiagram& t : tris) {
        QuotientComplex::Triangle tr;
        tr.a = face_edge(t, 1, 2);
        tr.b = face_edge(t, 2, 3);
        tr.c = face_edge(t, 1, 3);
        x.triangles.push_back(tr);
    }
    return x;
}

std::string g1_vertex_name(const VertexG1& v) {
    auto set_str = [](const std::vector<int>& s) {
        std::string out = "{";
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(s[i]);
        }
        return out + "}";
    };
    if (v.separating) return "v_{" + set_str(v.I) + "," + set_str(v.J) + "}";
    return "v_" + set_str(v.I);
}

namespace {

std::vector<int> mask_to_labels(unsigned mask) {
    std::vector<int> out;
    for (int i = 0; mask >> i; ++i)
        if (mask & (1u << i)) out.push_back(i + 1);
    return out;
}

unsigned labels_to_mask(const std::vector<int>& labels) {
    unsigned m = 0;
    for (int l : labels) m |= 1u << (l - 1);
    return m;
}

struct G1Name {
    bool separating;
    unsigned mi, mj;  // label masks; mj unused for nonseparating classes
};

VertexG1 g1_normalize_nonsep(unsigned mask, int n) {
    const unsigned full = (n == 32 ? ~0u : (1u << n) - 1);
    const unsigned comp = full & ~mask;
    const int si = std::popcount(mask), sc = n - si;
    unsigned pick = mask;
    if (si > sc || (si == sc && !(mask & 1u))) pick = comp;
    return {false, mask_to_labels(pick), {}};
}

VertexG1 g1_normalize_sep(unsigned mi, unsigned mj) {
    const int si = std::popcount(mi), sj = std::popcount(mj);
    if (si > sj ||
        (si == sj && std::countr_zero(mi) > std::countr_zero(mj)))
        std::swap(mi, mj);
    return {true, mask_to_labels(mi), mask_to_labels(mj)};
}

}  // namespace

QuotientComplex g1_symbolic_complex(int boundary) {
    const int n = boundary;
    if (n < 2)
        throw error(errc::not_applicable,
                    "the genus-1 complex is empty below two boundary labels");
    if (n > 20)
        throw error(errc::resource_limit,
                    "symbolic genus-1 model limited to 20 boundary labels");

    QuotientComplex x;
    x.target = Surface{false, 1, n};
    const unsigned full = (1u << n) - 1;

    std::vector<G1Name> names;
    for (unsigned mask = 0; mask <= full; ++mask) {
        const int si = std::popcount(mask), sc = n - si;
        if (si > sc || (si == sc && !(mask & 1u))) continue;
        names.push_back({false, mask, 0});
    }
    for (unsigned mi = 0; mi <= full; ++mi)
        for (unsigned mj = 0; mj <= full; ++mj) {
            if (mi & mj) continue;
            const int si = std::popcount(mi), sj = std::popcount(mj);
            const int m = si + sj;
            if (m < 2 || m > n - 1) continue;
            if (si > sj) continue;
            if (si == sj && std::countr_zero(mi) > std::countr_zero(mj))
                continue;
            names.push_back({true, mi, mj});
        }

    for (const G1Name& nm : names) {
        VertexG1 v;
        v.separating = nm.separating;
        v.I = mask_to_labels(nm.mi);
        if (nm.separating) v.J = mask_to_labels(nm.mj);
        x.vertices.push_back({std::nullopt, std::move(v)});
    }

    auto subset = [](unsigned a, unsigned b) { return (a & ~b) == 0; };
    auto adjacent = [&](const G1Name& u, const G1Name& v) {
        if (!u.separating && !v.separating) return false;
        if (u.separating != v.separating) {
            const G1Name& ns = u.separating ? v : u;
            const G1Name& sp = u.separating ? u : v;
            const unsigned i = ns.mi, ic = full & ~ns.mi;
            return (subset(sp.mi, i) && subset(sp.mj, ic)) ||
                   (subset(sp.mj, i) && subset(sp.mi, ic));
        }
        const int mu = std::popcount(u.mi) + std::popcount(u.mj);
        const int mv = std::popcount(v.mi) + std::popcount(v.mj);
        auto nested = [&](const G1Name& a, const G1Name& b) {
            return (subset(a.mi, b.mi) && subset(a.mj, b.mj)) ||
                   (subset(a.mi, b.mj) && subset(a.mj, b.mi));
        };
        if (mu < mv && nested(u, v)) return true;
        if (mv < mu && nested(v, u)) return true;
        return ((u.mi | u.mj) & (v.mi | v.mj)) == 0;
    };

    const int V = static_cast<int>(names.size());
    std::vector<std::vector<char>> adj(V, std::vector<char>(V, 0));
    for (int u = 0; u < V; ++u)
        for (int v = u + 1; v < V; ++v)
            adj[u][v] = adj[v][u] = adjacent(names[u], names[v]) ? 1 : 0;

    std::map<std::pair<int, int>, int> eid;
    for (int u = 0; u < V; ++u)
        for (int v = 0; v < V; ++v) {
            if (u == v || !adj[u][v]) continue;
            QuotientComplex::Edge ed;
            ed.id = static_cast<int>(x.edges.size());
            ed.src = u;
            ed.dst = v;
            ed.symbolic = std::make_pair(*x.vertices[u].symbolic,
                                         *x.vertices[v].symbolic);
            eid[{u, v}] = ed.id;
            x.edges.push_back(std::move(ed));
        }

    for (int u = 0; u < V; ++u)
        for (int v = u + 1; v < V; ++v) {
            if (!adj[u][v]) continue;
            for (int w = v + 1; w < V; ++w) {
                if (!adj[u][w] || !adj[v][w]) continue;
                const std::array<std::array<int, 3>, 6> orders = {
                    {{u, v, w}, {u, w, v}, {v, u, w},
                     {v, w, u}, {w, u, v}, {w, v, u}}};
                for (const auto& o : orders)
                    x.triangles.push_back({eid.at({o[0], o[1]}),
                                           eid.at({o[1], o[2]}),
                                           eid.at({o[0], o[2]})});
            }
        }
    return x;
}

namespace {

const ComponentSpec* comp_by_id(const CutDiagram& d, int id) {
    for (const ComponentSpec& c : d.components)
        if (c.id == id) return &c;
    return nullptr;
}

int comp_id_of_slot(const CutDiagram& d, int slot) {
    for (const ComponentSpec& c : d.components)
        for (int s : c.slots)
            if (s == slot) return c.id;
    return -1;
}

std::vector<int> labels_on(const CutDiagram& d, const ComponentSpec& c) {
    std::vector<int> out;
    for (const auto& [label, slot] : d.exterior)
        if (std::find(c.slots.begin(), c.slots.end(), slot) != c.slots.end())
            out.push_back(label);
    return out;
}

// True when the orientation classes of the given boundary labels agree on
// the (orientable) component of `d` holding them.
bool labels_same_class(const CutDiagram& d, const ComponentSpec& host,
                       const std::vector<int>& labels) {
    int seen = 0;
    for (int l : labels) {
        const int sign = host.orientation_class.at(d.exterior.at(l));
        if (seen == 0)
            seen = sign;
        else if (sign != seen)
            return false;
    }
    return true;
}

// Position of the dropped curve of a rank-2 diagram inside the surface cut
// along the kept curve alone.
struct HostView {
    CutDiagram cut;   // cut along `keep` only
    int host_id;      // component of `cut` the dropped curve lies in
    bool nonsep;      // dropped curve has connected complement in its host
    int piece_id;     // full-cut component carrying the dropped curve
};

HostView view_keeping(const CutDiagram& e, int keep) {
    const int drop = keep == 1 ? 2 : 1;
    const CurveGluing* dc = nullptr;
    for (const CurveGluing& c : e.curves)
        if (c.index == drop) dc = &c;
    if (!dc) throw error(errc::malformed_data, "rank-2 diagram expected");
    HostView v{cut_subfamily(e, {keep}), 0, true, 0};
    const int pa = comp_id_of_slot(e, dc->slot_a);
    if (dc->kind == CurveKind::one_sided) {
        v.host_id = pa;
        v.piece_id = pa;
    } else {
        const int pb = comp_id_of_slot(e, dc->slot_b);
        v.host_id = std::min(pa, pb);
        v.piece_id = pa;
        v.nonsep = pa == pb;
    }
    return v;
}

bool has_label(const CutDiagram& d, const ComponentSpec& c, int label) {
    auto it = d.exterior.find(label);
    if (it == d.exterior.end()) return false;
    return std::find(c.slots.begin(), c.slots.end(), it->second) !=
           c.slots.end();
}

// Selection rule for the edge joining the reference nonseparating vertex to
// `R`'s class, for targets of genus >= 3.
bool tree_edge_matches_g3plus(const CutDiagram& E, const CutDiagram& R,
                              int g) {
    const bool separating = R.components.size() == 2;
    if (!separating) {
        bool complement_orientable = true;
        for (const ComponentSpec& c : R.components)
            if (!c.orientable) complement_orientable = false;
        if (complement_orientable)
            return E.components.size() == 1 && E.components[0].orientable;
        if (g >= 4)
            return E.components.size() == 1 && !E.components[0].orientable;
        if (E.components.size() != 1 || !E.components[0].orientable)
            return false;
        return labels_same_class(E, E.components[0],
                                 labels_on(E, E.components[0]));
    }

    HostView vw = view_keeping(E, 2);
    if (vw.cut.components.size() != 2) return false;
    const ComponentSpec* host = comp_by_id(vw.cut, vw.host_id);
    const ComponentSpec* other = nullptr;
    for (const ComponentSpec& c : vw.cut.components)
        if (c.id != vw.host_id) other = &c;
    const ComponentSpec* piece = comp_by_id(E, vw.piece_id);
    if (!host || !other || !piece) return false;

    const ComponentSpec* r_orientable = nullptr;
    for (const ComponentSpec& c : R.components)
        if (c.orientable) r_orientable = &c;

    if (r_orientable) {
        if (!vw.nonsep) return false;
        if (r_orientable->genus >= 1) return host->orientable;
        return !host->orientable && !piece->orientable;
    }

    // Both pieces non-orientable: the edge lives in the larger-genus piece,
    // with the first boundary label breaking genus ties on bounded targets.
    if (host->orientable || other->orientable) return false;
    if (host->genus < other->genus) return false;
    if (host->genus == other->genus && E.target.boundary >= 1 &&
        !has_label(vw.cut, *host, 1))
        return false;
    if (!vw.nonsep) return false;
    if (host->genus >= 3) return !piece->orientable;
    if (host->genus == 2)
        return piece->orientable &&
               labels_same_class(E, *piece, labels_on(vw.cut, *host));
    return false;
}

std::set<int> g3plus_tree(const QuotientComplex& x) {
    const int V = static_cast<int>(x.vertices.size());
    int base = -1;
    for (int v = 0; v < V; ++v) {
        const CutDiagram& R = *x.vertices[v].rep;
        if (R.components.size() == 1 &&
            R.curves[0].kind == CurveKind::two_sided &&
            !R.components[0].orientable) {
            if (base != -1)
                throw error(errc::not_a_tree, "reference vertex not unique");
            base = v;
        }
    }
    if (base < 0)
        throw error(errc::not_a_tree, "reference vertex not found");

    std::set<int> tree;
    for (int v = 0; v < V; ++v) {
        if (v == base) continue;
        const CutDiagram& R = *x.vertices[v].rep;
        std::vector<int> picks;
        for (const QuotientComplex::Edge& ed : x.edges) {
            if (ed.src != base || ed.dst != v) continue;
            if (tree_edge_matches_g3plus(*ed.rep, R, x.target.genus))
                picks.push_back(ed.id);
        }
        if (picks.size() != 1)
            throw error(errc::not_a_tree,
                        "tree edge selection at vertex " + std::to_string(v) +
                            " matched " + std::to_string(picks.size()) +
                            " classes");
        tree.insert(picks[0]);
    }
    return tree;
}

std::set<int> g2_tree(const QuotientComplex& x) {
    const int V = static_cast<int>(x.vertices.size());
    int base = -1;
    for (int v = 0; v < V; ++v) {
        const CutDiagram& R = *x.vertices[v].rep;
        if (R.curves[0].kind == CurveKind::one_sided) {
            if (base != -1)
                throw error(errc::not_a_tree, "reference vertex not unique");
            base = v;
        }
    }
    if (base < 0)
        throw error(errc::not_a_tree, "reference vertex not found");

    std::set<int> tree;
    for (int v = 0; v < V; ++v) {
        if (v == base) continue;
        const CutDiagram& R = *x.vertices[v].rep;
        std::vector<int> picks;
        if (R.components.size() == 2) {
            const ComponentSpec* r_orientable = nullptr;
            for (const ComponentSpec& c : R.components)
                if (c.orientable) r_orientable = &c;
            for (const QuotientComplex::Edge& ed : x.edges) {
                if (ed.src != base || ed.dst != v) continue;
                const CutDiagram& E = *ed.rep;
                HostView vw = view_keeping(E, 2);
                if (vw.cut.components.size() != 2) continue;
                const ComponentSpec* host = comp_by_id(vw.cut, vw.host_id);
                const ComponentSpec* piece = comp_by_id(E, vw.piece_id);
                if (!host || !piece) continue;
                bool ok;
                if (r_orientable) {
                    ok = !host->orientable;
                } else {
                    ok = has_label(vw.cut, *host, 1) && piece->orientable &&
                         labels_same_class(E, *piece,
                                           labels_on(vw.cut, *host));
                }
                if (ok) picks.push_back(ed.id);
            }
        } else {
            // Two-sided curve with orientable complement: reached from the
            // separating class whose orientable piece is a pair of pants
            // holding the first two boundary labels.  Which of the two pants
            // classes appears is forced by the relative orientation of those
            // labels at v, so no class condition is imposed here.
            for (const QuotientComplex::Edge& ed : x.edges) {
                if (ed.dst != v) continue;
                const CutDiagram& srcR = *x.vertices[ed.src].rep;
                if (srcR.components.size() != 2) continue;
                const CutDiagram& E = *ed.rep;
                const CurveGluing* c1 = nullptr;
                for (const CurveGluing& c : E.curves)
                    if (c.index == 1) c1 = &c;
                if (!c1 || c1->kind != CurveKind::two_sided) continue;
                CutDiagram fa = cut_subfamily(E, {1});
                if (fa.components.size() != 2) continue;
                const ComponentSpec* pants = nullptr;
                for (const ComponentSpec& c : fa.components) {
                    std::vector<int> ls = labels_on(fa, c);
                    std::sort(ls.begin(), ls.end());
                    if (ls == std::vector<int>{1, 2}) pants = &c;
                }
                if (!pants || !pants->orientable || pants->genus != 0 ||
                    pants->slots.size() != 3)
                    continue;
                picks.push_back(ed.id);
            }
        }
        if (picks.size() != 1)
            throw error(errc::not_a_tree,
                        "tree edge selection at vertex " + std::to_string(v) +
                            " matched " + std::to_string(picks.size()) +
                            " classes");
        tree.insert(picks[0]);
    }
    return tree;
}

VertexG1 classify_g1_vertex(const CutDiagram& R, int n) {
    const ComponentSpec* orient = nullptr;
    for (const ComponentSpec& c : R.components)
        if (c.orientable) orient = &c;
    if (!orient)
        throw error(errc::not_a_tree,
                    "genus-1 class without an orientable piece");
    unsigned plus = 0, minus = 0;
    for (int l : labels_on(R, *orient)) {
        if (orient->orientation_class.at(R.exterior.at(l)) > 0)
            plus |= 1u << (l - 1);
        else
            minus |= 1u << (l - 1);
    }
    if (R.components.size() == 1) return g1_normalize_nonsep(plus, n);
    return g1_normalize_sep(plus, minus);
}

std::set<int> g1_tree(const QuotientComplex& x,
                      const std::vector<VertexG1>& name) {
    const int V = static_cast<int>(x.vertices.size());
    const int n = x.target.boundary;
    std::map<VertexG1, int> vid;
    for (int v = 0; v < V; ++v) {
        if (!vid.emplace(name[v], v).second)
            throw error(errc::not_a_tree, "duplicate genus-1 class name");
    }
    std::map<std::pair<int, int>, std::vector<int>> by_ends;
    for (const QuotientComplex::Edge& ed : x.edges)
        by_ends[{ed.src, ed.dst}].push_back(ed.id);

    auto lookup = [&](const VertexG1& v) {
        auto it = vid.find(v);
        if (it == vid.end())
            throw error(errc::not_a_tree,
                        "expected genus-1 class missing: " + g1_vertex_name(v));
        return it->second;
    };
    auto unique_edge = [&](int u, int v) {
        auto it = by_ends.find({u, v});
        if (it == by_ends.end() || it->second.size() != 1)
            throw error(errc::not_a_tree,
                        "edge class between genus-1 vertices not unique");
        return it->second.front();
    };

    const VertexG1 origin{false, {}, {}};
    const int base = lookup(origin);
    std::set<int> tree;
    for (int v = 0; v < V; ++v) {
        if (v == base) continue;
        const VertexG1& nm = name[v];
        if (nm.separating) {
            const int from = lookup(g1_normalize_nonsep(labels_to_mask(nm.I), n));
            tree.insert(unique_edge(from, v));
        } else {
            const unsigned full = (1u << n) - 1;
            const unsigned comp = full & ~labels_to_mask(nm.I);
            const int to = lookup(g1_normalize_sep(0, comp));
            tree.insert(unique_edge(v, to));
        }
    }
    return tree;
}

void verify_spanning_tree(const QuotientComplex& x, const std::set<int>& tree) {
    const int V = static_cast<int>(x.vertices.size());
    if (static_cast<int>(tree.size()) != V - 1)
        throw error(errc::not_a_tree, "selected edge set has wrong size");
    std::vector<int> parent(V);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    int pieces = V;
    for (int id : tree) {
        const QuotientComplex::Edge& ed = x.edges.at(id);
        int ra = find(ed.src), rb = find(ed.dst);
        if (ra == rb)
            throw error(errc::not_a_tree, "selected edges close a cycle");
        parent[ra] = rb;
        --pieces;
    }
    if (pieces != 1)
        throw error(errc::not_a_tree, "selected edges do not span");
}

}  // namespace

std::set<int> build_maximal_tree(const QuotientComplex& x) {
    if (x.vertices.empty())
        throw error(errc::not_applicable, "empty complex has no tree");
    const int g = x.target.genus, n = x.target.boundary;
    if (is_sporadic(g, n))
        throw error(errc::not_applicable,
                    "no tree construction for sporadic targets");
    std::set<int> tree;
    if (x.symbolic()) {
        if (g != 1)
            throw error(errc::malformed_data,
                        "symbolic complexes describe genus-1 targets");
        std::vector<VertexG1> names;
        for (const auto& v : x.vertices) names.push_back(*v.symbolic);
        tree = g1_tree(x, names);
    } else if (g == 1) {
        std::vector<VertexG1> names;
        for (const auto& v : x.vertices)
            names.push_back(classify_g1_vertex(*v.rep, n));
        tree = g1_tree(x, names);
    } else if (g == 2) {
        tree = g2_tree(x);
    } else {
        tree = g3plus_tree(x);
    }
    verify_spanning_tree(x, tree);
    return tree;
}

ClosureResult determinability_closure(const QuotientComplex& x,
                                      const std::set<int>& tree) {
    const int E = static_cast<int>(x.edges.size());
    std::vector<int> partner(E, -1);
    if (x.symbolic() || x.edges.empty() || !x.edges.front().rep) {
        std::map<std::pair<int, int>, int> by_ends;
        for (const QuotientComplex::Edge& ed : x.edges)
            by_ends[{ed.src, ed.dst}] = ed.id;
        for (const QuotientComplex::Edge& ed : x.edges) {
            auto it = by_ends.find({ed.dst, ed.src});
            if (it == by_ends.end())
                throw error(errc::malformed_data,
                            "edge reversal class missing");
            partner[ed.id] = it->second;
        }
    } else {
        std::map<std::string, int> by_sig;
        for (const QuotientComplex::Edge& ed : x.edges)
            by_sig[ordered_signature(*ed.rep)] = ed.id;
        for (const QuotientComplex::Edge& ed : x.edges) {
            CutDiagram swapped = *ed.rep;
            for (CurveGluing& c : swapped.curves) c.index = 3 - c.index;
            auto it = by_sig.find(ordered_signature(swapped));
            if (it == by_sig.end())
                throw error(errc::malformed_data,
                            "edge reversal class missing");
            partner[ed.id] = it->second;
        }
    }

    auto cls = [&](int e) { return std::min(e, partner[e]); };
    std::vector<char> determined(E, 0);
    for (int id : tree) determined[cls(id)] = 1;

    bool changed = true;
    while (changed) {
        changed = false;
        for (const QuotientComplex::Triangle& t : x.triangles) {
            const int ca = cls(t.a), cb = cls(t.b), cc = cls(t.c);
            const int have = determined[ca] + determined[cb] + determined[cc];
            if (have == 2) {
                determined[ca] = determined[cb] = determined[cc] = 1;
                changed = true;
            }
        }
    }

    ClosureResult out;
    for (const QuotientComplex::Edge& ed : x.edges)
        if (determined[cls(ed.id)]) out.determinable.insert(ed.id);
    for (const QuotientComplex::Edge& ed : x.edges)
        if (ed.src == ed.dst && partner[ed.id] != ed.id)
            out.flagged_edges.push_back(ed.id);
    return out;
}

std::string complex_to_json(const QuotientComplex& x, const std::set<int>& tree,
                            const std::set<int>& determinable) {
    ordered_json j;
    j["target"] = {{"orientable", x.target.orientable},
                   {"genus", x.target.genus},
                   {"boundary", x.target.boundary}};
    j["vertices"] = ordered_json::array();
    for (std::size_t i = 0; i < x.vertices.size(); ++i) {
        ordered_json v;
        v["id"] = i;
        if (x.vertices[i].rep)
            v["rep"] = ordered_json::parse(diagram_to_json(*x.vertices[i].rep));
        if (x.vertices[i].symbolic) {
            const VertexG1& s = *x.vertices[i].symbolic;
            v["symbolic"] = {{"separating", s.separating},
                             {"I", s.I},
                             {"J", s.J}};
        }
        j["vertices"].push_back(std::move(v));
    }
    j["edges"] = ordered_json::array();
    for (const QuotientComplex::Edge& ed : x.edges) {
        ordered_json e;
        e["id"] = ed.id;
        e["src"] = ed.src;
        e["dst"] = ed.dst;
        if (ed.rep) e["rep"] = ordered_json::parse(diagram_to_json(*ed.rep));
        j["edges"].push_back(std::move(e));
    }
    j["triangles"] = ordered_json::array();
    for (const QuotientComplex::Triangle& t : x.triangles)
        j["triangles"].push_back({t.a, t.b, t.c});
    j["tree"] = tree;
    j["determinable"] = determinable;
    return j.dump(2) + "\n";
}

QuotientComplex complex_from_json(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::malformed_data,
                    std::string("complex JSON: ") + e.what());
    }
    try {
        QuotientComplex x;
        const auto& t = j.at("target");
        x.target = Surface{t.at("orientable").get<bool>(),
                           t.at("genus").get<int>(),
                           t.at("boundary").get<int>()};
        int idx = 0;
        for (const auto& v : j.at("vertices")) {
            if (v.at("id").get<int>() != idx++)
                throw error(errc::malformed_data,
                            "vertex ids must be consecutive from 0");
            QuotientComplex::Vertex vv;
            if (v.contains("rep"))
                vv.rep = diagram_from_json(v.at("rep").dump());
            if (v.contains("symbolic")) {
                const auto& s = v.at("symbolic");
                vv.symbolic =
                    VertexG1{s.at("separating").get<bool>(),
                             s.at("I").get<std::vector<int>>(),
                             s.at("J").get<std::vector<int>>()};
            }
            if (!vv.rep && !vv.symbolic)
                throw error(errc::malformed_data,
                            "vertex carries neither a diagram nor symbolic data");
            x.vertices.push_back(std::move(vv));
        }
        idx = 0;
        for (const auto& e : j.at("edges")) {
            QuotientComplex::Edge ed;
            ed.id = e.at("id").get<int>();
            if (ed.id != idx++)
                throw error(errc::malformed_data,
                            "edge ids must be consecutive from 0");
            ed.src = e.at("src").get<int>();
            ed.dst = e.at("dst").get<int>();
            if (ed.src < 0 || ed.dst < 0 ||
                ed.src >= static_cast<int>(x.vertices.size()) ||
                ed.dst >= static_cast<int>(x.vertices.size()))
                throw error(errc::malformed_data, "edge endpoint out of range");
            if (e.contains("rep"))
                ed.rep = diagram_from_json(e.at("rep").dump());
            else if (x.vertices[ed.src].symbolic && x.vertices[ed.dst].symbolic)
                ed.symbolic = std::make_pair(*x.vertices[ed.src].symbolic,
                                             *x.vertices[ed.dst].symbolic);
            x.edges.push_back(std::move(ed));
        }
        for (const auto& t3 : j.at("triangles")) {
            if (!t3.is_array() || t3.size() != 3)
                throw error(errc::malformed_data,
                            "triangles must be triples of edge ids");
            QuotientComplex::Triangle tr{t3[0].get<int>(), t3[1].get<int>(),
                                         t3[2].get<int>()};
            for (int e : {tr.a, tr.b, tr.c})
                if (e < 0 || e >= static_cast<int>(x.edges.size()))
                    throw error(errc::malformed_data,
                                "triangle edge id out of range");
            x.triangles.push_back(tr);
        }
        return x;
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::malformed_data,
                    std::string("complex JSON: ") + e.what());
    }
}

}  // namespace mcg
