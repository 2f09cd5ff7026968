#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cloven/arity.hpp"

namespace cloven {

// One slot in a vertex's counterclockwise rotation order: either a leaf
// bound to a boundary position, or one end of an internal edge.
struct RotItem {
    int leaf = -1;
    int edge = -1;
    bool is_leaf() const { return leaf >= 0; }
};

// An unordered pair of boundary gaps {a, b}, a < b. Gap j lies between
// leaf j and leaf j+1 (mod N).
struct CutClass {
    int a = -1, b = -1;
    CutClass() = default;
    CutClass(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {}
    bool operator==(const CutClass& o) const { return a == o.a && b == o.b; }
    bool operator<(const CutClass& o) const { return a != o.a ? a < o.a : b < o.b; }
    std::string to_string() const;
};

// A directed planar tree labeling one open cell of the regularized moduli
// space. Internal edges carry a direction (tail -> head); leaf directions
// are determined by the boundary role and are not stored.
struct PlanarTreeCell {
    int num_leaves = 0;                        // N
    std::vector<std::vector<RotItem>> rot;     // ccw rotation order per vertex
    std::vector<std::pair<int, int>> edges;    // edge id -> (tail, head)

    int vertex_count() const { return static_cast<int>(rot.size()); }
    int valence(int v) const { return static_cast<int>(rot[v].size()); }
    int edge_other(int e, int v) const {
        return edges[e].first == v ? edges[e].second : edges[e].first;
    }
};

// Empty result means the cell is a valid label; otherwise each entry names
// the violated rule and the offending vertex/edge.
std::vector<std::string> validate(const PlanarTreeCell& cell, const Arity& arity);

// V - 1, the number of free distance coordinates modulo a common shift.
int dimension(const PlanarTreeCell& cell);

// (N + k - 3) - V; the differential raises this grading by one.
int syzygy_degree(const PlanarTreeCell& cell, const Arity& arity);

// Canonical text encoding. Grammar:
//   KEY  := VERT
//   VERT := '(' ITEM* ')'
//   ITEM := 'L' digits | ('>'|'<') VERT
// Anchored at the internal endpoint of leaf 0; items follow rotation order
// from the entry half-edge ('>': directed away from the current vertex).
std::string encode_key(const PlanarTreeCell& cell);
PlanarTreeCell decode_key(const std::string& key);

// Vertices in order of first visit by the anchored traversal that also
// defines encode_key. Fixes the orientation of the cell.
std::vector<int> canonical_vertex_order(const PlanarTreeCell& cell);

// Merges the endpoints of edge e, splicing rotation orders at the merge
// point. If vertex_map is given, it receives old index -> new index.
PlanarTreeCell contract_edge(const PlanarTreeCell& cell, int e,
                             std::vector<int>* vertex_map = nullptr);

// All codimension-1 faces: one per internal edge.
std::vector<std::pair<int, PlanarTreeCell>> contractions(const PlanarTreeCell& cell);

// Incidence sign of the face obtained by contracting edge e, from comparing
// the canonical vertex-tuple orientations of the cell and its face.
int sign_of(const PlanarTreeCell& cell, int e);

// Valence-2 vertices (necessarily with two outgoing edges in a valid cell).
std::vector<int> bivalent_vertices(const PlanarTreeCell& cell);

// The saddle-cut class of a bivalent vertex: removing it leaves two
// complementary boundary arcs [a..b] and [b+1..a-1]; the class is
// {gap(a-1), gap(b)}.
CutClass cut_class_of(const PlanarTreeCell& cell, int v);

// All cut classes realized by the cell's bivalent vertices, sorted.
std::vector<CutClass> cut_classes(const PlanarTreeCell& cell);

}  // namespace cloven
