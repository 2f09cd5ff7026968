#include "cloven/cell.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace cloven {

std::string CutClass::to_string() const {
    std::ostringstream os;
    os << "{g" << a << ",g" << b << "}";
    return os.str();
}

namespace {

int find_leaf_slot(const PlanarTreeCell& cell, int leaf, int& vertex_out) {
    for (int v = 0; v < cell.vertex_count(); ++v)
        for (int s = 0; s < cell.valence(v); ++s)
            if (cell.rot[v][s].is_leaf() && cell.rot[v][s].leaf == leaf) {
                vertex_out = v;
                return s;
            }
    return -1;
}

int find_edge_slot(const PlanarTreeCell& cell, int v, int e) {
    for (int s = 0; s < cell.valence(v); ++s)
        if (!cell.rot[v][s].is_leaf() && cell.rot[v][s].edge == e)
            return s;
    return -1;
}

// Anchored traversal shared by encode_key and canonical_vertex_order.
// Visits items of each vertex in rotation order from the entry half-edge.
template <class EnterFn, class LeafFn, class EdgeFn, class ExitFn>
void traverse(const PlanarTreeCell& cell, EnterFn on_enter, LeafFn on_leaf,
              EdgeFn on_edge, ExitFn on_exit) {
    int anchor = -1;
    int anchor_slot = find_leaf_slot(cell, 0, anchor);
    if (anchor_slot < 0)
        throw std::invalid_argument("cell has no leaf at boundary position 0");
    std::function<void(int, int, bool)> rec = [&](int v, int entry, bool include_entry) {
        on_enter(v);
        int d = cell.valence(v);
        int n_items = include_entry ? d : d - 1;
        for (int i = 0; i < n_items; ++i) {
            int slot = (entry + (include_entry ? i : i + 1)) % d;
            const RotItem& it = cell.rot[v][slot];
            if (it.is_leaf()) {
                on_leaf(v, it.leaf);
            } else {
                int e = it.edge;
                int other = cell.edge_other(e, v);
                on_edge(v, e);
                rec(other, find_edge_slot(cell, other, e), false);
            }
        }
        on_exit(v);
    };
    rec(anchor, anchor_slot, true);
}

int perm_parity_between(const std::vector<int>& from, const std::vector<int>& to) {
    std::vector<int> pos(from.size());
    std::vector<int> index_of;
    int maxv = 0;
    for (int x : from) maxv = std::max(maxv, x);
    index_of.assign(maxv + 1, -1);
    for (size_t i = 0; i < from.size(); ++i) index_of[from[i]] = static_cast<int>(i);
    std::vector<int> seq(to.size());
    for (size_t i = 0; i < to.size(); ++i) seq[i] = index_of[to[i]];
    int inversions = 0;
    for (size_t i = 0; i < seq.size(); ++i)
        for (size_t j = i + 1; j < seq.size(); ++j)
            if (seq[i] > seq[j]) ++inversions;
    return (inversions % 2 == 0) ? +1 : -1;
}

}  // namespace

std::vector<std::string> validate(const PlanarTreeCell& cell, const Arity& arity) {
    std::vector<std::string> bad;
    const int N = arity.total_leaves();
    const int V = cell.vertex_count();
    const int E = static_cast<int>(cell.edges.size());
    if (cell.num_leaves != N)
        bad.push_back("leaf count mismatch: cell has " + std::to_string(cell.num_leaves) +
                      ", arity needs " + std::to_string(N));
    if (V == 0) {
        bad.push_back("no vertices");
        return bad;
    }

    // Structural soundness; bail out early if the half-edge data is broken,
    // the graph-level checks below would not be meaningful.
    std::vector<int> leaf_seen(N, 0);
    std::vector<int> edge_seen(E, 0);
    for (int v = 0; v < V; ++v) {
        for (const RotItem& it : cell.rot[v]) {
            if (it.is_leaf()) {
                if (it.leaf >= N)
                    bad.push_back("leaf position out of range at vertex " + std::to_string(v));
                else
                    ++leaf_seen[it.leaf];
            } else {
                if (it.edge < 0 || it.edge >= E) {
                    bad.push_back("edge id out of range at vertex " + std::to_string(v));
                    continue;
                }
                const auto& [t, h] = cell.edges[it.edge];
                if (t != v && h != v)
                    bad.push_back("vertex " + std::to_string(v) +
                                  " lists edge " + std::to_string(it.edge) + " it is not on");
                ++edge_seen[it.edge];
            }
        }
    }
    for (int l = 0; l < N; ++l)
        if (leaf_seen[l] != 1)
            bad.push_back("leaf " + std::to_string(l) + " bound " +
                          std::to_string(leaf_seen[l]) + " times");
    for (int e = 0; e < E; ++e) {
        if (edge_seen[e] != 2)
            bad.push_back("edge " + std::to_string(e) + " appears " +
                          std::to_string(edge_seen[e]) + " times in rotations");
        if (cell.edges[e].first == cell.edges[e].second)
            bad.push_back("edge " + std::to_string(e) + " is a loop");
    }
    if (E != V - 1)
        bad.push_back("not a tree: " + std::to_string(V) + " vertices, " +
                      std::to_string(E) + " edges");
    if (!bad.empty())
        return bad;

    // Connectivity and planarity: the anchored contour walk must meet every
    // vertex and read the leaves as 0,1,...,N-1.
    std::vector<int> visited(V, 0);
    std::vector<int> leaf_order;
    traverse(
        cell, [&](int v) { visited[v] = 1; }, [&](int, int leaf) { leaf_order.push_back(leaf); },
        [&](int, int) {}, [&](int) {});
    for (int v = 0; v < V; ++v)
        if (!visited[v]) {
            bad.push_back("vertex " + std::to_string(v) + " unreachable from anchor");
            return bad;
        }
    for (int i = 0; i < static_cast<int>(leaf_order.size()); ++i)
        if (leaf_order[i] != i) {
            bad.push_back("rotation system incompatible with boundary order: saw leaf " +
                          std::to_string(leaf_order[i]) + " in position " + std::to_string(i));
            break;
        }

    // Direction rules.
    const auto roles = boundary_sequence(arity);
    int bivalent_count = 0;
    for (int v = 0; v < V; ++v) {
        int out_deg = 0;
        for (const RotItem& it : cell.rot[v]) {
            if (it.is_leaf())
                out_deg += roles[it.leaf] == LeafRole::Output ? 1 : 0;
            else
                out_deg += cell.edges[it.edge].first == v ? 1 : 0;
        }
        int val = cell.valence(v);
        if (val <= 1)
            bad.push_back("univalent vertex " + std::to_string(v));
        if (out_deg == 0)
            bad.push_back("sink at vertex " + std::to_string(v));
        if (val == 2) {
            ++bivalent_count;
            if (out_deg == 1)
                bad.push_back("regular point, not a cell label: vertex " + std::to_string(v) +
                              " is valence-2 with one incoming and one outgoing edge");
        }
    }
    if (bivalent_count > arity.k - 1)
        bad.push_back("too many bivalent vertices: " + std::to_string(bivalent_count) +
                      " > k-1 = " + std::to_string(arity.k - 1));
    if (V > N - 2 + bivalent_count)
        bad.push_back("vertex bound violated: V = " + std::to_string(V) + " > N-2+b = " +
                      std::to_string(N - 2 + bivalent_count));
    return bad;
}

int dimension(const PlanarTreeCell& cell) { return cell.vertex_count() - 1; }

int syzygy_degree(const PlanarTreeCell& cell, const Arity& arity) {
    return arity.syzygy_offset() - cell.vertex_count();
}

std::string encode_key(const PlanarTreeCell& cell) {
    std::string out;
    traverse(
        cell, [&](int) { out += '('; },
        [&](int, int leaf) {
            out += 'L';
            out += std::to_string(leaf);
        },
        [&](int v, int e) { out += cell.edges[e].first == v ? '>' : '<'; },
        [&](int) { out += ')'; });
    return out;
}

PlanarTreeCell decode_key(const std::string& key) {
    PlanarTreeCell cell;
    size_t pos = 0;
    int max_leaf = -1;
    auto fail = [&](const std::string& msg) {
        throw std::invalid_argument("bad cell key at offset " + std::to_string(pos) + ": " + msg);
    };
    std::function<int(int)> parse_vert = [&](int entry_edge) -> int {
        if (pos >= key.size() || key[pos] != '(')
            fail("expected '('");
        ++pos;
        int v = cell.vertex_count();
        cell.rot.emplace_back();
        if (entry_edge >= 0)
            cell.rot[v].push_back(RotItem{-1, entry_edge});
        while (pos < key.size() && key[pos] != ')') {
            char c = key[pos];
            if (c == 'L') {
                ++pos;
                size_t start = pos;
                while (pos < key.size() && std::isdigit(static_cast<unsigned char>(key[pos])))
                    ++pos;
                if (pos == start)
                    fail("expected digits after 'L'");
                int leaf = std::stoi(key.substr(start, pos - start));
                max_leaf = std::max(max_leaf, leaf);
                cell.rot[v].push_back(RotItem{leaf, -1});
            } else if (c == '>' || c == '<') {
                ++pos;
                int e = static_cast<int>(cell.edges.size());
                cell.edges.emplace_back(-1, -1);
                cell.rot[v].push_back(RotItem{-1, e});
                int child = parse_vert(e);
                cell.edges[e] = c == '>' ? std::make_pair(v, child) : std::make_pair(child, v);
            } else {
                fail("unexpected character");
            }
        }
        if (pos >= key.size())
            fail("unterminated '('");
        ++pos;  // ')'
        return v;
    };
    parse_vert(-1);
    if (pos != key.size())
        fail("trailing characters");
    cell.num_leaves = max_leaf + 1;
    return cell;
}

std::vector<int> canonical_vertex_order(const PlanarTreeCell& cell) {
    std::vector<int> order;
    std::vector<char> seen(cell.vertex_count(), 0);
    traverse(
        cell,
        [&](int v) {
            if (!seen[v]) {
                seen[v] = 1;
                order.push_back(v);
            }
        },
        [&](int, int) {}, [&](int, int) {}, [&](int) {});
    return order;
}

PlanarTreeCell contract_edge(const PlanarTreeCell& cell, int e, std::vector<int>* vertex_map) {
    const auto [u, v] = cell.edges[e];
    const int V = cell.vertex_count();
    std::vector<int> vmap(V);
    for (int w = 0, next = 0; w < V; ++w)
        vmap[w] = (w == v) ? -1 : next++;
    vmap[v] = vmap[u];

    auto emap = [&](int old_e) { return old_e > e ? old_e - 1 : old_e; };

    PlanarTreeCell out;
    out.num_leaves = cell.num_leaves;
    out.rot.resize(V - 1);
    out.edges.reserve(cell.edges.size() - 1);
    for (int f = 0; f < static_cast<int>(cell.edges.size()); ++f) {
        if (f == e)
            continue;
        out.edges.emplace_back(vmap[cell.edges[f].first], vmap[cell.edges[f].second]);
    }

    int v_entry = find_edge_slot(cell, v, e);
    for (int w = 0; w < V; ++w) {
        if (w == v)
            continue;
        auto& items = out.rot[vmap[w]];
        for (int s = 0; s < cell.valence(w); ++s) {
            const RotItem& it = cell.rot[w][s];
            if (!it.is_leaf() && it.edge == e) {
                // Splice v's rotation (minus its end of e) into u's slot.
                int dv = cell.valence(v);
                for (int i = 1; i < dv; ++i) {
                    const RotItem& vit = cell.rot[v][(v_entry + i) % dv];
                    items.push_back(vit.is_leaf() ? vit : RotItem{-1, emap(vit.edge)});
                }
            } else {
                items.push_back(it.is_leaf() ? it : RotItem{-1, emap(it.edge)});
            }
        }
    }
    if (vertex_map)
        *vertex_map = std::move(vmap);
    return out;
}

std::vector<std::pair<int, PlanarTreeCell>> contractions(const PlanarTreeCell& cell) {
    std::vector<std::pair<int, PlanarTreeCell>> out;
    out.reserve(cell.edges.size());
    for (int e = 0; e < static_cast<int>(cell.edges.size()); ++e)
        out.emplace_back(e, contract_edge(cell, e));
    return out;
}

int sign_of(const PlanarTreeCell& cell, int e) {
    if (e < 0 || e >= static_cast<int>(cell.edges.size()))
        throw std::invalid_argument("sign_of: not an internal edge");
    const auto [u, v] = cell.edges[e];

    // Orientation-comparison sign: bring (tail, head) to the front of the
    // canonical vertex tuple, merge, and compare with the face's own tuple.
    std::vector<int> canon = canonical_vertex_order(cell);
    std::vector<int> target{u, v};
    for (int w : canon)
        if (w != u && w != v)
            target.push_back(w);
    int eps = perm_parity_between(canon, target);

    std::vector<int> vmap;
    PlanarTreeCell face = contract_edge(cell, e, &vmap);
    std::vector<int> merged;
    merged.push_back(vmap[u]);
    for (int w : canon)
        if (w != u && w != v)
            merged.push_back(vmap[w]);
    int sigma = perm_parity_between(merged, canonical_vertex_order(face));
    return eps * sigma;
}

std::vector<int> bivalent_vertices(const PlanarTreeCell& cell) {
    std::vector<int> out;
    for (int v = 0; v < cell.vertex_count(); ++v)
        if (cell.valence(v) == 2)
            out.push_back(v);
    return out;
}

CutClass cut_class_of(const PlanarTreeCell& cell, int v) {
    if (v < 0 || v >= cell.vertex_count() || cell.valence(v) != 2)
        throw std::invalid_argument("cut_class_of: vertex is not bivalent");
    const int N = cell.num_leaves;

    // Leaves on the side of the first rotation item.
    std::vector<char> in_side(N, 0);
    std::function<void(int, int)> collect = [&](int w, int from_edge) {
        for (const RotItem& it : cell.rot[w]) {
            if (it.is_leaf())
                in_side[it.leaf] = 1;
            else if (it.edge != from_edge)
                collect(cell.edge_other(it.edge, w), it.edge);
        }
    };
    const RotItem& first = cell.rot[v][0];
    if (first.is_leaf())
        in_side[first.leaf] = 1;
    else
        collect(cell.edge_other(first.edge, v), first.edge);

    // The side must be a cyclic arc [a..b].
    int a = -1, b = -1, count = 0;
    for (int l = 0; l < N; ++l) {
        if (!in_side[l])
            continue;
        ++count;
        if (!in_side[(l + N - 1) % N])
            a = l;
        if (!in_side[(l + 1) % N])
            b = l;
    }
    if (a < 0 || b < 0 || count == 0 || count == N)
        throw std::logic_error("cut_class_of: side of bivalent vertex is not a proper arc");
    int len = (b - a + N) % N + 1;
    if (len != count)
        throw std::logic_error("cut_class_of: side of bivalent vertex is not contiguous");
    return CutClass((a + N - 1) % N, b);
}

std::vector<CutClass> cut_classes(const PlanarTreeCell& cell) {
    std::vector<CutClass> out;
    for (int v : bivalent_vertices(cell))
        out.push_back(cut_class_of(cell, v));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace cloven
