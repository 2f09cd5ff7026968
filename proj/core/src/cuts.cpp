#include "cloven/cuts.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cloven {

bool is_valid_class(const CutClass& c, const Arity& arity) {
    const int N = arity.total_leaves();
    if (c.a < 0 || c.b >= N || c.a == c.b)
        return false;
    const auto roles = boundary_sequence(arity);
    bool out1 = false, out2 = false;
    for (int l = 0; l < N; ++l) {
        bool inside = c.a < l && l <= c.b;  // arc (gap a, gap b]
        (inside ? out1 : out2) |= roles[l] == LeafRole::Output;
    }
    return out1 && out2;
}

std::vector<CutClass> valid_classes(const Arity& arity) {
    const int N = arity.total_leaves();
    std::vector<CutClass> out;
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b)
            if (is_valid_class(CutClass(a, b), arity))
                out.emplace_back(a, b);
    return out;
}

bool classes_interleave(const CutClass& c1, const CutClass& c2, int num_leaves) {
    (void)num_leaves;
    if (c1.a == c2.a || c1.a == c2.b || c1.b == c2.a || c1.b == c2.b)
        return false;
    bool in1 = c1.a < c2.a && c2.a < c1.b;
    bool in2 = c1.a < c2.b && c2.b < c1.b;
    return in1 != in2;
}

namespace {

struct BoundaryItem {
    int leaf = -1;
    int chord = -1;
};

// Leaves and chord ends in counterclockwise boundary order. Within a gap,
// ends are sorted by descending ccw distance to the opposite endpoint, the
// unique ordering that keeps the diagram noncrossing.
std::vector<BoundaryItem> boundary_items(const std::vector<CutClass>& classes, int N) {
    std::vector<BoundaryItem> items;
    for (int p = 0; p < N; ++p) {
        items.push_back({p, -1});
        std::vector<std::pair<int, int>> ends;  // (ccw distance to opposite, chord)
        for (int c = 0; c < static_cast<int>(classes.size()); ++c) {
            if (classes[c].a == p)
                ends.emplace_back((classes[c].b - p + N) % N, c);
            if (classes[c].b == p)
                ends.emplace_back((classes[c].a - p + N) % N, c);
        }
        std::sort(ends.begin(), ends.end(), std::greater<>());
        for (const auto& [d, c] : ends)
            items.push_back({-1, c});
    }
    return items;
}

void collect_regions(const std::vector<BoundaryItem>& items, int lo, int hi,
                     std::vector<std::vector<int>>& out) {
    std::vector<int> here;
    for (int i = lo; i < hi; ++i) {
        if (items[i].leaf >= 0) {
            here.push_back(items[i].leaf);
            continue;
        }
        int partner = -1;
        for (int j = i + 1; j < hi; ++j)
            if (items[j].chord == items[i].chord) {
                partner = j;
                break;
            }
        if (partner < 0)
            throw std::logic_error("regions: unmatched chord end");
        collect_regions(items, i + 1, partner, out);
        i = partner;
    }
    out.push_back(std::move(here));
}

}  // namespace

std::vector<std::vector<int>> regions(const std::vector<CutClass>& classes, const Arity& arity) {
    const int N = arity.total_leaves();
    for (size_t i = 0; i < classes.size(); ++i)
        for (size_t j = i + 1; j < classes.size(); ++j)
            if (classes_interleave(classes[i], classes[j], N))
                throw std::invalid_argument("regions: classes " + classes[i].to_string() +
                                            " and " + classes[j].to_string() + " interleave");
    auto items = boundary_items(classes, N);
    std::vector<std::vector<int>> out;
    collect_regions(items, 0, static_cast<int>(items.size()), out);
    if (out.size() != classes.size() + 1)
        throw std::logic_error("regions: expected r+1 regions");
    return out;
}

bool jointly_realizable(const std::vector<CutClass>& classes, const Arity& arity) {
    std::set<CutClass> seen(classes.begin(), classes.end());
    if (seen.size() != classes.size())
        throw std::invalid_argument("jointly_realizable: duplicate cut classes");
    const int N = arity.total_leaves();
    for (size_t i = 0; i < classes.size(); ++i)
        for (size_t j = i + 1; j < classes.size(); ++j)
            if (classes_interleave(classes[i], classes[j], N))
                return false;
    const auto roles = boundary_sequence(arity);
    for (const auto& region : regions(classes, arity)) {
        bool has_output = false;
        for (int l : region)
            has_output |= roles[l] == LeafRole::Output;
        if (!has_output)
            return false;
    }
    return true;
}

}  // namespace cloven
