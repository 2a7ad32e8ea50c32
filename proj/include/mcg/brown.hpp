#pragma once

#include "mcg/presentation.hpp"

#include <string>
#include <vector>

namespace mcg {

// Input for assembling a group presentation from a group action on a
// 2-complex: vertex stabilizer presentations, edge stabilizer generators with
// their two boundary images, and one relation per triangle.
struct BrownVertex {
    std::string id;
    Presentation pres;
};

struct BrownEdgeGen {
    Word i; // image in the initial-vertex stabilizer
    Word c; // image in the terminal-vertex stabilizer
};

struct BrownEdge {
    std::string id;
    std::string src, dst;
    bool in_tree = false;
    std::vector<BrownEdgeGen> stab;
};

// Edges a: u->v, b: v->w, c: u->w. The words ha, h live in the vertex group
// of u, hb in that of v, hc in that of w.
struct BrownTriangle {
    std::string a, b, c;
    Word ha, hb, hc, h;
};

struct BrownData {
    std::vector<BrownVertex> vertices;
    std::vector<BrownEdge> edges;
    std::vector<BrownTriangle> triangles;
};

struct BrownResult {
    Presentation pres;
    bool complete = true;
    std::vector<std::string> stuck; // edges never determined (reduce mode)
};

// reduce = false: the raw presentation with one generator g_<edge> per edge,
// relators = vertex relators, g_e = 1 for tree edges, g_e^-1 i(g) g_e c(g)^-1
// per edge stabilizer generator, and ha g_a hb g_b hc g_c^-1 h^-1 per
// triangle.
//
// reduce = true: edge generators are eliminated. Tree edges start as the
// empty word; a triangle with two determined edges determines the third; the
// fixpoint substitutes every g_e away. Edges never reached are reported in
// `stuck` with complete = false (their generators survive).
BrownResult brown_assembly(const BrownData& data, bool reduce);

} // namespace mcg
