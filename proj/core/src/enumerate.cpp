#include "cloven/enumerate.hpp"

#include <memory>

namespace cloven {

namespace {

// Undirected plane-tree skeletons, generated by splitting boundary arcs.
// A node consuming a single item has valence 2 (entry + item), i.e. is a
// bivalent candidate; those are rationed by the k-1 budget and may not be
// adjacent (the shared edge could not be outgoing from both).
struct TNode;
using NodePtr = std::shared_ptr<const TNode>;

struct TItem {
    int leaf = -1;  // boundary position, or
    NodePtr child;  // subtree consuming a block of positions
};

struct TNode {
    std::vector<TItem> items;  // rotation order after the entry edge
    bool bivalent() const { return items.size() == 1; }
};

struct NodeAlt {
    NodePtr node;
    int biv_used = 0;
};

struct SeqAlt {
    std::vector<TItem> items;
    int biv_used = 0;
};

class SkeletonGen {
public:
    // All subtrees hanging from a parent edge and consuming leaves [lo,hi).
    std::vector<NodeAlt> gen_node(int lo, int hi, int budget, bool forbid_bivalent) {
        std::vector<NodeAlt> out;
        // Bivalent node: a single item, either the lone leaf or a child
        // covering the whole block (that child must not be bivalent too).
        if (!forbid_bivalent && budget >= 1) {
            if (hi - lo == 1) {
                auto n = std::make_shared<TNode>();
                n->items.push_back(TItem{lo, nullptr});
                out.push_back({n, 1});
            }
            for (const NodeAlt& c : gen_node(lo, hi, budget - 1, true)) {
                auto n = std::make_shared<TNode>();
                n->items.push_back(TItem{-1, c.node});
                out.push_back({n, c.biv_used + 1});
            }
        }
        // Ordinary node: at least two items. A single child covering the
        // whole block would just re-describe this node, so it is suppressed
        // (that sequence could only form a size-1 item list anyway).
        for (SeqAlt& seq : gen_seq(lo, hi, budget, false)) {
            if (seq.items.size() < 2)
                continue;
            auto n = std::make_shared<TNode>();
            n->items = std::move(seq.items);
            out.push_back({n, seq.biv_used});
        }
        return out;
    }

    // All item sequences (each consuming >=1 leaf) covering [lo,hi) exactly.
    // allow_full_child = false forbids the sequence that is one child
    // consuming all of [lo,hi), which breaks the node/sequence recursion.
    std::vector<SeqAlt> gen_seq(int lo, int hi, int budget, bool allow_full_child = true) {
        std::vector<SeqAlt> out;
        if (lo == hi) {
            out.push_back({});
            return out;
        }
        // First item: the leaf at lo...
        for (SeqAlt& rest : gen_seq(lo + 1, hi, budget)) {
            SeqAlt s;
            s.items.push_back(TItem{lo, nullptr});
            s.items.insert(s.items.end(), rest.items.begin(), rest.items.end());
            s.biv_used = rest.biv_used;
            out.push_back(std::move(s));
        }
        // ...or a child subtree consuming [lo,mid).
        int last_mid = allow_full_child ? hi : hi - 1;
        for (int mid = lo + 1; mid <= last_mid; ++mid) {
            for (const NodeAlt& c : gen_node(lo, mid, budget, false)) {
                for (SeqAlt& rest : gen_seq(mid, hi, budget - c.biv_used)) {
                    SeqAlt s;
                    s.items.push_back(TItem{-1, c.node});
                    s.items.insert(s.items.end(), rest.items.begin(), rest.items.end());
                    s.biv_used = c.biv_used + rest.biv_used;
                    out.push_back(std::move(s));
                }
            }
        }
        return out;
    }
};

// Flattens a skeleton into an (as yet undirected) cell; edges are stored
// (parent, child) and reoriented afterwards.
void attach_items(PlanarTreeCell& cell, int v, const std::vector<TItem>& items) {
    for (const TItem& it : items) {
        if (!it.child) {
            cell.rot[v].push_back(RotItem{it.leaf, -1});
        } else {
            int e = static_cast<int>(cell.edges.size());
            int w = cell.vertex_count();
            cell.edges.emplace_back(v, w);
            cell.rot[v].push_back(RotItem{-1, e});
            cell.rot.emplace_back();
            cell.rot[w].push_back(RotItem{-1, e});
            attach_items(cell, w, it.child->items);
        }
    }
}

// Emits every orientation of the skeleton's edges satisfying the direction
// rules: bivalent vertices have both half-edges outgoing, nobody is a sink.
template <class Emit>
void orient(PlanarTreeCell cell, const std::vector<LeafRole>& roles, const Emit& emit) {
    const int V = cell.vertex_count();
    const int E = static_cast<int>(cell.edges.size());
    // 0 = free, 1 = forced as stored (tail->head), 2 = forced reversed.
    std::vector<int> forced(E, 0);
    for (int v = 0; v < V; ++v) {
        if (cell.valence(v) != 2)
            continue;
        for (const RotItem& it : cell.rot[v]) {
            if (it.is_leaf()) {
                if (roles[it.leaf] != LeafRole::Output)
                    return;  // an input leaf can never leave a bivalent vertex
            } else {
                int want = cell.edges[it.edge].first == v ? 1 : 2;
                if (forced[it.edge] != 0 && forced[it.edge] != want)
                    return;  // adjacent bivalent vertices
                forced[it.edge] = want;
            }
        }
    }
    std::vector<int> free_edges;
    for (int e = 0; e < E; ++e)
        if (forced[e] == 0)
            free_edges.push_back(e);
        else if (forced[e] == 2)
            std::swap(cell.edges[e].first, cell.edges[e].second);

    for (unsigned long mask = 0; mask < (1ul << free_edges.size()); ++mask) {
        PlanarTreeCell cand = cell;
        for (size_t i = 0; i < free_edges.size(); ++i)
            if (mask & (1ul << i))
                std::swap(cand.edges[free_edges[i]].first, cand.edges[free_edges[i]].second);
        bool ok = true;
        for (int v = 0; v < V && ok; ++v) {
            bool has_out = false;
            for (const RotItem& it : cand.rot[v]) {
                if (it.is_leaf() ? roles[it.leaf] == LeafRole::Output
                                 : cand.edges[it.edge].first == v) {
                    has_out = true;
                    break;
                }
            }
            ok = has_out;
        }
        if (ok)
            emit(cand);
    }
}

}  // namespace

void for_each_cell(const Arity& arity, int max_leaves,
                   const std::function<void(const PlanarTreeCell&)>& visit) {
    const int N = arity.total_leaves();
    if (N > max_leaves)
        throw resource_error("enumerate_cells: arity " + arity.to_string() + " has N = " +
                             std::to_string(N) + " > guard " + std::to_string(max_leaves));
    const auto roles = boundary_sequence(arity);
    const int budget = arity.k - 1;

    SkeletonGen gen;
    for (SeqAlt& seq : gen.gen_seq(1, N, budget)) {
        bool root_biv = seq.items.size() == 1;
        if (root_biv) {
            if (seq.biv_used + 1 > budget)
                continue;
            if (seq.items[0].child && seq.items[0].child->bivalent())
                continue;
        }
        PlanarTreeCell skel;
        skel.num_leaves = N;
        skel.rot.emplace_back();
        skel.rot[0].push_back(RotItem{0, -1});
        attach_items(skel, 0, seq.items);
        orient(std::move(skel), roles, visit);
    }
}

std::map<std::string, PlanarTreeCell> enumerate_cells(const Arity& arity, int max_leaves) {
    std::map<std::string, PlanarTreeCell> cells;
    for_each_cell(arity, max_leaves,
                  [&](const PlanarTreeCell& cand) { cells.emplace(encode_key(cand), cand); });
    return cells;
}

}  // namespace cloven
