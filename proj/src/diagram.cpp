#include "mcg/diagram.hpp"
#include "mcg/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace mcg {

namespace {

struct SlotRole {
    char role = '?'; // 'e' exterior, 'c' two_sided endpoint, 'o' one_sided
    int ref = 0;     // boundary index or curve index
};

std::map<int, SlotRole> slot_roles(const CutDiagram& d) {
    std::map<int, SlotRole> out;
    for (const auto& [label, slot] : d.exterior)
        out[slot] = {'e', label};
    for (const auto& c : d.curves) {
        if (c.kind == CurveKind::two_sided) {
            out[c.slot_a] = {'c', c.index};
            out[c.slot_b] = {'c', c.index};
        } else {
            out[c.slot_a] = {'o', c.index};
        }
    }
    return out;
}

std::map<int, size_t> component_of_slot(const CutDiagram& d) {
    std::map<int, size_t> out;
    for (size_t k = 0; k < d.components.size(); ++k)
        for (int s : d.components[k].slots)
            out[s] = k;
    return out;
}

Surface component_surface(const ComponentSpec& c) {
    return Surface{c.orientable, c.genus, static_cast<int>(c.slots.size())};
}

// Union-find with an orientation-flip parity relative to the parent. A
// contradiction while merging records a genuinely non-orientable gluing.
struct ParityDSU {
    std::vector<size_t> parent;
    std::vector<int> par; // 0/1 flip relative to parent
    bool contradiction = false;

    explicit ParityDSU(size_t n) : parent(n), par(n, 0) {
        std::iota(parent.begin(), parent.end(), size_t{0});
    }

    std::pair<size_t, int> find(size_t x) {
        int p = 0;
        while (parent[x] != x) {
            p ^= par[x];
            x = parent[x];
        }
        return {x, p};
    }

    // Requires flip(a) xor flip(b) == rel.
    void merge(size_t a, size_t b, int rel) {
        auto [ra, pa] = find(a);
        auto [rb, pb] = find(b);
        if (ra == rb) {
            if ((pa ^ pb) != rel) contradiction = true;
            return;
        }
        parent[rb] = ra;
        par[rb] = pa ^ pb ^ rel;
    }
};

int slot_sign(const ComponentSpec& c, int slot) {
    auto it = c.orientation_class.find(slot);
    return it == c.orientation_class.end() ? 0 : it->second;
}

} // namespace

void validate_structure(const CutDiagram& d) {
    auto fail = [](const std::string& msg) { throw error(errc::malformed_diagram, msg); };

    if (d.target.boundary < 0 || d.target.genus < 0) fail("target surface has negative data");
    if (d.components.empty()) fail("diagram has no components");

    std::set<int> comp_ids;
    std::set<int> all_slots;
    for (const auto& c : d.components) {
        if (!comp_ids.insert(c.id).second) fail("duplicate component id " + std::to_string(c.id));
        if (c.genus < 0) fail("component has negative genus");
        if (!c.orientable && c.genus < 1) fail("non-orientable component needs genus >= 1");
        for (int s : c.slots)
            if (!all_slots.insert(s).second) fail("slot " + std::to_string(s) + " appears twice");
        if (c.orientable) {
            if (c.orientation_class.size() != c.slots.size())
                fail("orientation_class must cover every slot of an orientable component");
            for (int s : c.slots) {
                auto it = c.orientation_class.find(s);
                if (it == c.orientation_class.end())
                    fail("orientation_class missing slot " + std::to_string(s));
                if (it->second != 1 && it->second != -1)
                    fail("orientation_class values must be +1 or -1");
            }
        } else if (!c.orientation_class.empty()) {
            fail("orientation_class on a non-orientable component");
        }
    }

    std::map<int, int> use_count;
    std::set<int> curve_indices;
    for (const auto& c : d.curves) {
        if (!curve_indices.insert(c.index).second)
            fail("duplicate curve index " + std::to_string(c.index));
        if (c.kind == CurveKind::two_sided) {
            if (c.slot_a == c.slot_b) fail("two_sided curve glues a slot to itself");
            for (int s : {c.slot_a, c.slot_b}) {
                if (!all_slots.count(s)) fail("curve references unknown slot " + std::to_string(s));
                ++use_count[s];
            }
        } else {
            if (!all_slots.count(c.slot_a))
                fail("curve references unknown slot " + std::to_string(c.slot_a));
            if (c.slot_b != 0) fail("one_sided curve must leave slot_b unset");
            ++use_count[c.slot_a];
        }
    }
    const int r = static_cast<int>(d.curves.size());
    for (int i = 1; i <= r; ++i)
        if (!curve_indices.count(i)) fail("curve indices must be exactly 1.." + std::to_string(r));

    for (const auto& [label, slot] : d.exterior) {
        if (label < 1 || label > d.target.boundary)
            fail("exterior label c" + std::to_string(label) + " out of range");
        if (!all_slots.count(slot)) fail("exterior label on unknown slot " + std::to_string(slot));
        ++use_count[slot];
    }
    if (static_cast<int>(d.exterior.size()) != d.target.boundary)
        fail("exterior must label exactly the target boundary curves");

    for (int s : all_slots) {
        auto it = use_count.find(s);
        if (it == use_count.end()) fail("slot " + std::to_string(s) + " is unused");
        if (it->second != 1) fail("slot " + std::to_string(s) + " is used more than once");
    }
}

SurfaceInvariants glue_invariants(const CutDiagram& d) {
    validate_structure(d);
    const auto comp_of = component_of_slot(d);

    int chi = 0;
    bool any_nonorientable = false;
    for (const auto& c : d.components) {
        chi += euler(component_surface(c));
        if (!c.orientable) any_nonorientable = true;
    }

    ParityDSU conn(d.components.size()); // connectivity only, parity unused
    ParityDSU orient(d.components.size());
    bool any_onesided = false;
    for (const auto& c : d.curves) {
        if (c.kind == CurveKind::one_sided) {
            any_onesided = true;
            continue;
        }
        size_t ka = comp_of.at(c.slot_a);
        size_t kb = comp_of.at(c.slot_b);
        conn.merge(ka, kb, 0);
        int sa = slot_sign(d.components[ka], c.slot_a);
        int sb = slot_sign(d.components[kb], c.slot_b);
        if (sa != 0 && sb != 0) orient.merge(ka, kb, sa == sb ? 1 : 0);
    }

    bool connected = true;
    for (size_t k = 1; k < d.components.size(); ++k)
        if (conn.find(k).first != conn.find(0).first) connected = false;

    bool orientable = !any_nonorientable && !any_onesided && !orient.contradiction;

    SurfaceInvariants inv;
    inv.connected = connected;
    inv.orientable = orientable;
    for (const auto& [label, slot] : d.exterior) inv.boundary_labels.push_back(label);
    inv.genus = connected
                    ? classify_from_chi(orientable, chi, d.target.boundary).genus
                    : -1;
    return inv;
}

ValidationReport validate_generic(const CutDiagram& d) {
    validate_structure(d);
    ValidationReport report;
    const auto roles = slot_roles(d);
    auto add = [&](const char* rule, std::string detail) {
        report.violations.push_back({rule, std::move(detail)});
    };

    for (const auto& c : d.components) {
        const std::string where = "component " + std::to_string(c.id);
        if (c.orientable && c.genus == 0 && c.slots.size() == 1) {
            add("R1", where + " is a disk, so its boundary curve is null-homotopic");
            continue;
        }
        if (!c.orientable && c.genus == 1 && c.slots.size() == 1) {
            const SlotRole r = roles.at(c.slots[0]);
            if (r.role == 'c')
                add("R2", "curve " + std::to_string(r.ref) + " bounds the Moebius strip " + where);
            else if (r.role == 'e' && d.components.size() > 1)
                add("R2", where + " is a Moebius strip hanging off exterior curve c" +
                              std::to_string(r.ref));
        }
        if (c.orientable && c.genus == 0 && c.slots.size() == 2) {
            const SlotRole r1 = roles.at(c.slots[0]);
            const SlotRole r2 = roles.at(c.slots[1]);
            auto pair_is = [&](char x, char y) {
                return (r1.role == x && r2.role == y) || (r1.role == y && r2.role == x);
            };
            if (r1.role == 'c' && r2.role == 'c' && r1.ref != r2.ref)
                add("R3", "curves " + std::to_string(r1.ref) + " and " + std::to_string(r2.ref) +
                              " cobound the annulus " + where + ", so they are isotopic");
            else if (pair_is('c', 'e')) {
                const SlotRole& cr = r1.role == 'c' ? r1 : r2;
                const SlotRole& er = r1.role == 'e' ? r1 : r2;
                add("R3", "curve " + std::to_string(cr.ref) + " is parallel to exterior curve c" +
                              std::to_string(er.ref) + " across the annulus " + where);
            } else if (pair_is('o', 'c')) {
                const SlotRole& cr = r1.role == 'c' ? r1 : r2;
                add("R2", "curve " + std::to_string(cr.ref) +
                              " bounds a Moebius strip: the annulus " + where +
                              " joins it to a one_sided gluing");
            }
        }
        if (!c.orientable && c.genus == 1)
            for (int s : c.slots)
                if (roles.at(s).role == 'o')
                    report.warnings.push_back(
                        "one_sided gluing on the genus-1 non-orientable " + where +
                        ": curve " + std::to_string(roles.at(s).ref) +
                        " may be isotopic to the component's core (not decided by local rules)");
    }

    const SurfaceInvariants inv = glue_invariants(d);
    if (!inv.connected)
        report.violations.push_back({"R4", "glued surface is disconnected"});

    if (d.target.orientable || euler(d.target) >= 0) {
        report.violations.push_back(
            {"R5", "target must be non-orientable with negative Euler characteristic"});
    } else if (inv.connected &&
               (inv.orientable != d.target.orientable || inv.genus != d.target.genus)) {
        report.violations.push_back(
            {"R5", "glued surface is " +
                       to_string(Surface{inv.orientable, inv.genus, d.target.boundary}) +
                       ", target is " + to_string(d.target)});
    }
    return report;
}

CutDiagram cut_subfamily(const CutDiagram& d, const std::set<int>& keep) {
    validate_structure(d);
    std::set<int> indices;
    for (const auto& c : d.curves) indices.insert(c.index);
    for (int k : keep)
        if (!indices.count(k))
            throw error(errc::malformed_data,
                        "subfamily keeps unknown curve " + std::to_string(k));

    const auto comp_of = component_of_slot(d);
    const size_t n = d.components.size();

    std::vector<const CurveGluing*> drop2, drop1;
    for (const auto& c : d.curves) {
        if (keep.count(c.index)) continue;
        (c.kind == CurveKind::two_sided ? drop2 : drop1).push_back(&c);
    }

    ParityDSU dsu(n);
    for (const CurveGluing* c : drop2)
        dsu.merge(comp_of.at(c->slot_a), comp_of.at(c->slot_b), 0);

    std::map<size_t, std::vector<size_t>> clusters;
    for (size_t k = 0; k < n; ++k) clusters[dsu.find(k).first].push_back(k);

    std::set<int> dropped_slots;
    std::map<size_t, bool> cluster_has_onesided;
    for (const CurveGluing* c : drop2) {
        dropped_slots.insert(c->slot_a);
        dropped_slots.insert(c->slot_b);
    }
    for (const CurveGluing* c : drop1) {
        dropped_slots.insert(c->slot_a);
        cluster_has_onesided[dsu.find(comp_of.at(c->slot_a)).first] = true;
    }

    CutDiagram out;
    out.target = d.target;
    out.exterior = d.exterior;
    for (const auto& c : d.curves)
        if (keep.count(c.index)) out.curves.push_back(c);

    for (auto& [root, members] : clusters) {
        int chi = 0;
        bool orientable = !cluster_has_onesided[root];
        int new_id = d.components[members[0]].id;
        for (size_t k : members) {
            const ComponentSpec& c = d.components[k];
            chi += euler(component_surface(c));
            if (!c.orientable) orientable = false;
            new_id = std::min(new_id, c.id);
        }

        // Orientation flips of the members, consistent across the internal
        // gluings: f_b = -(s_a * f_a * s_b). A contradiction cannot occur
        // when the cluster is orientable.
        std::map<size_t, int> flip;
        if (orientable) {
            ParityDSU check(n);
            for (const CurveGluing* c : drop2) {
                size_t ka = comp_of.at(c->slot_a), kb = comp_of.at(c->slot_b);
                if (dsu.find(ka).first != root) continue;
                int sa = slot_sign(d.components[ka], c->slot_a);
                int sb = slot_sign(d.components[kb], c->slot_b);
                check.merge(ka, kb, sa == sb ? 1 : 0);
            }
            orientable = !check.contradiction;
            if (orientable)
                for (size_t k : members)
                    flip[k] = check.find(k).second ? -1 : 1;
        }

        ComponentSpec merged;
        merged.id = new_id;
        merged.orientable = orientable;
        for (size_t k : members)
            for (int s : d.components[k].slots)
                if (!dropped_slots.count(s)) {
                    merged.slots.push_back(s);
                    if (orientable)
                        merged.orientation_class[s] =
                            flip[k] * slot_sign(d.components[k], s);
                }
        std::sort(merged.slots.begin(), merged.slots.end());
        merged.genus =
            classify_from_chi(orientable, chi, static_cast<int>(merged.slots.size())).genus;
        out.components.push_back(std::move(merged));
    }
    std::sort(out.components.begin(), out.components.end(),
              [](const ComponentSpec& a, const ComponentSpec& b) { return a.id < b.id; });
    return out;
}

CutDiagram reindex_curves(const CutDiagram& d) {
    std::vector<int> old_indices;
    for (const auto& c : d.curves) old_indices.push_back(c.index);
    std::sort(old_indices.begin(), old_indices.end());
    std::map<int, int> renum;
    for (size_t i = 0; i < old_indices.size(); ++i)
        renum[old_indices[i]] = static_cast<int>(i) + 1;

    CutDiagram out = d;
    for (auto& c : out.curves) c.index = renum.at(c.index);
    std::sort(out.curves.begin(), out.curves.end(),
              [](const CurveGluing& a, const CurveGluing& b) { return a.index < b.index; });
    return out;
}

namespace {

// Signature of one component inside a cut diagram: the data the orbit
// classification compares. Limit-curve incidences are tagged by kind
// (separating, non-separating two-sided, one-sided); exterior orientation
// classes enter as an unordered partition of the labels, which makes the
// string invariant under a global flip of the component.
std::string component_signature(const CutDiagram& d, const ComponentSpec& c,
                                const std::map<int, SlotRole>& roles,
                                const std::map<int, size_t>& comp_of,
                                const std::map<int, const CurveGluing*>& curve_by_index,
                                const std::vector<int>& relabel) {
    std::vector<int> ext;
    std::set<std::pair<int, char>> incidences;
    for (int s : c.slots) {
        const SlotRole r = roles.at(s);
        if (r.role == 'e') {
            ext.push_back(r.ref);
        } else if (r.role == 'o') {
            incidences.insert({relabel.empty() ? r.ref : relabel[r.ref - 1], 'o'});
        } else {
            const CurveGluing& g = *curve_by_index.at(r.ref);
            char tag = comp_of.at(g.slot_a) == comp_of.at(g.slot_b) ? 'n' : 's';
            incidences.insert({relabel.empty() ? r.ref : relabel[r.ref - 1], tag});
        }
    }
    std::sort(ext.begin(), ext.end());

    std::ostringstream os;
    os << (c.orientable ? 'o' : 'n') << c.genus << "|e";
    for (int x : ext) os << x << ',';
    os << "|p";
    if (c.orientable && !ext.empty()) {
        std::vector<int> plus, minus;
        for (int x : ext)
            (c.orientation_class.at(d.exterior.at(x)) > 0 ? plus : minus).push_back(x);
        if (plus.empty() || minus.empty()) {
            for (int x : ext) os << x << ',';
        } else {
            const auto& first = plus[0] < minus[0] ? plus : minus;
            const auto& second = plus[0] < minus[0] ? minus : plus;
            for (int x : first) os << x << ',';
            os << '/';
            for (int x : second) os << x << ',';
        }
    }
    os << "|a";
    for (const auto& [idx, tag] : incidences) os << idx << tag << ',';
    return os.str();
}

std::string cut_signature(const CutDiagram& cut, const std::vector<int>& relabel) {
    const auto roles = slot_roles(cut);
    const auto comp_of = component_of_slot(cut);
    std::map<int, const CurveGluing*> curve_by_index;
    for (const auto& c : cut.curves) curve_by_index[c.index] = &c;
    std::vector<std::string> sigs;
    for (const auto& c : cut.components)
        sigs.push_back(component_signature(cut, c, roles, comp_of, curve_by_index, relabel));
    std::sort(sigs.begin(), sigs.end());
    std::string out;
    for (const auto& s : sigs) out += s + "&";
    return out;
}

std::vector<CutDiagram> all_cuts(const CutDiagram& d) {
    const int r = static_cast<int>(d.curves.size());
    std::vector<CutDiagram> cuts;
    cuts.reserve(size_t{1} << r);
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::set<int> keep;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i)) keep.insert(i + 1);
        cuts.push_back(cut_subfamily(d, keep));
    }
    return cuts;
}

} // namespace

std::string ordered_signature(const CutDiagram& d) {
    validate_structure(d);
    std::ostringstream os;
    os << "T:" << to_string(d.target);
    unsigned mask = 0;
    for (const CutDiagram& cut : all_cuts(d)) os << "#S" << mask++ << ":" << cut_signature(cut, {});
    return os.str();
}

std::string canonical_form(const CutDiagram& d) {
    validate_structure(d);
    const auto roles = slot_roles(d);

    std::vector<std::string> comps;
    for (const auto& c : d.components) {
        auto encode = [&](int flip) {
            std::vector<std::string> desc;
            for (int s : c.slots) {
                const SlotRole r = roles.at(s);
                int sign = (c.orientable && r.role != 'o') ? flip * slot_sign(c, s) : 0;
                desc.push_back(std::string(1, r.role) + std::to_string(r.ref) +
                               (sign > 0 ? "+" : sign < 0 ? "-" : "."));
            }
            std::sort(desc.begin(), desc.end());
            std::string out;
            out += c.orientable ? 'o' : 'n';
            out += std::to_string(c.genus) + "[";
            for (const auto& x : desc) out += x + ",";
            return out + "]";
        };
        comps.push_back(c.orientable ? std::min(encode(1), encode(-1)) : encode(1));
    }
    std::sort(comps.begin(), comps.end());

    std::ostringstream os;
    os << "T:" << to_string(d.target) << ";";
    for (const auto& s : comps) os << s << ";";
    os << "K:";
    std::vector<std::pair<int, CurveKind>> kinds;
    for (const auto& c : d.curves) kinds.push_back({c.index, c.kind});
    std::sort(kinds.begin(), kinds.end());
    for (const auto& [i, k] : kinds)
        os << i << (k == CurveKind::two_sided ? 't' : 'u') << ",";
    return os.str();
}

OrbitWitness orbit_equal(const CutDiagram& a, const CutDiagram& b, bool ordered) {
    validate_structure(a);
    validate_structure(b);
    if (!(a.target == b.target))
        throw error(errc::mismatched_target, "curve families live on different surfaces");
    const int r = static_cast<int>(a.curves.size());
    if (r != static_cast<int>(b.curves.size()))
        throw error(errc::malformed_data, "curve families differ in size");

    std::vector<int> identity(r);
    std::iota(identity.begin(), identity.end(), 1);

    if (ordered) {
        if (ordered_signature(a) == ordered_signature(b)) return {true, identity};
        return {false, {}};
    }

    auto kind_of = [](const CutDiagram& d, int index) {
        for (const auto& c : d.curves)
            if (c.index == index) return c.kind;
        throw error(errc::malformed_data, "missing curve index");
    };

    const auto cuts_a = all_cuts(a);
    const auto cuts_b = all_cuts(b);
    std::vector<std::string> sig_b(cuts_b.size());
    for (size_t m = 0; m < cuts_b.size(); ++m) sig_b[m] = cut_signature(cuts_b[m], {});

    std::vector<int> sigma = identity;
    do {
        bool kinds_ok = true;
        for (int i = 1; i <= r && kinds_ok; ++i)
            if (kind_of(a, i) != kind_of(b, sigma[i - 1])) kinds_ok = false;
        if (!kinds_ok) continue;

        bool all_match = true;
        for (unsigned mask = 0; mask < cuts_a.size() && all_match; ++mask) {
            unsigned image = 0;
            for (int i = 0; i < r; ++i)
                if (mask & (1u << i)) image |= 1u << (sigma[i] - 1);
            if (cut_signature(cuts_a[mask], sigma) != sig_b[image]) all_match = false;
        }
        if (all_match) return {true, sigma};
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return {false, {}};
}

CutDiagram diagram_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::malformed_data, std::string("bad diagram JSON: ") + e.what());
    }

    try {
        CutDiagram d;
        const auto& t = j.at("target");
        d.target = Surface{t.at("orientable").get<bool>(), t.at("genus").get<int>(),
                           t.at("boundary").get<int>()};
        for (const auto& cj : j.at("components")) {
            ComponentSpec c;
            c.id = cj.at("id").get<int>();
            c.orientable = cj.at("orientable").get<bool>();
            c.genus = cj.at("genus").get<int>();
            c.slots = cj.at("slots").get<std::vector<int>>();
            if (cj.contains("orientation_class"))
                for (const auto& [key, val] : cj.at("orientation_class").items())
                    c.orientation_class[std::stoi(key)] = val.get<int>();
            d.components.push_back(std::move(c));
        }
        if (j.contains("exterior"))
            for (const auto& [key, val] : j.at("exterior").items()) {
                if (key.size() < 2 || key[0] != 'c')
                    throw error(errc::malformed_data, "exterior keys must look like c1, c2, ...");
                d.exterior[std::stoi(key.substr(1))] = val.get<int>();
            }
        for (const auto& cj : j.at("curves")) {
            CurveGluing c;
            c.index = cj.at("index").get<int>();
            const std::string kind = cj.at("kind").get<std::string>();
            if (kind == "two_sided") {
                c.kind = CurveKind::two_sided;
                const auto slots = cj.at("slots").get<std::vector<int>>();
                if (slots.size() != 2)
                    throw error(errc::malformed_data, "two_sided curve needs two slots");
                c.slot_a = slots[0];
                c.slot_b = slots[1];
            } else if (kind == "one_sided") {
                c.kind = CurveKind::one_sided;
                c.slot_a = cj.at("slot").get<int>();
            } else {
                throw error(errc::malformed_data, "unknown curve kind '" + kind + "'");
            }
            d.curves.push_back(c);
        }
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::malformed_data, std::string("bad diagram JSON: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw error(errc::malformed_data, "bad numeric key in diagram JSON");
    }
}

std::string diagram_to_json(const CutDiagram& d) {
    nlohmann::ordered_json j;
    j["target"] = {{"orientable", d.target.orientable},
                   {"genus", d.target.genus},
                   {"boundary", d.target.boundary}};
    j["components"] = nlohmann::ordered_json::array();
    for (const auto& c : d.components) {
        nlohmann::ordered_json cj;
        cj["id"] = c.id;
        cj["orientable"] = c.orientable;
        cj["genus"] = c.genus;
        cj["slots"] = c.slots;
        if (c.orientable) {
            nlohmann::ordered_json oc = nlohmann::ordered_json::object();
            for (const auto& [slot, sign] : c.orientation_class)
                oc[std::to_string(slot)] = sign;
            cj["orientation_class"] = std::move(oc);
        }
        j["components"].push_back(std::move(cj));
    }
    j["exterior"] = nlohmann::ordered_json::object();
    for (const auto& [label, slot] : d.exterior) j["exterior"]["c" + std::to_string(label)] = slot;
    j["curves"] = nlohmann::ordered_json::array();
    for (const auto& c : d.curves) {
        nlohmann::ordered_json cj;
        cj["index"] = c.index;
        if (c.kind == CurveKind::two_sided) {
            cj["kind"] = "two_sided";
            cj["slots"] = {c.slot_a, c.slot_b};
        } else {
            cj["kind"] = "one_sided";
            cj["slot"] = c.slot_a;
        }
        j["curves"].push_back(std::move(cj));
    }
    return j.dump(2) + "\n";
}

} // namespace mcg
