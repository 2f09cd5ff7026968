#include "cloven/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>
#include <unordered_map>

namespace cloven {

std::string tag_name(ComplexTag tag) {
    switch (tag) {
        case ComplexTag::Full: return "full";
        case ComplexTag::YPart: return "y_part";
        case ComplexTag::ClovQuotient: return "clov_quotient";
        case ComplexTag::SubFamily: return "subfamily";
    }
    return "?";
}

long long CellComplex::total_cells() const {
    long long n = 0;
    for (const auto& b : basis)
        n += static_cast<long long>(b.size());
    return n;
}

int CellComplex::bottom_degree() const {
    for (int s = 0; s < degree_count(); ++s)
        if (!basis[s].empty())
            return s;
    return -1;
}

namespace {

// Sort triplets by (col, row) and accumulate duplicates; complains when an
// accumulated differential entry leaves {-1, 0, 1} (two distinct
// contractions of one cell landing on the same face would do that).
void normalize_entries(SparseIntMatrix& d) {
    auto& e = d.entries;
    std::sort(e.begin(), e.end(), [](const auto& a, const auto& b) {
        return std::get<1>(a) != std::get<1>(b) ? std::get<1>(a) < std::get<1>(b)
                                                : std::get<0>(a) < std::get<0>(b);
    });
    size_t out = 0;
    for (size_t i = 0; i < e.size();) {
        auto [r, c, v] = e[i];
        long long sum = 0;
        for (; i < e.size() && std::get<0>(e[i]) == r && std::get<1>(e[i]) == c; ++i)
            sum += std::get<2>(e[i]);
        if (sum < -1 || sum > 1)
            throw std::logic_error("differential entry outside {-1,0,1}");
        if (sum != 0)
            e[out++] = {r, c, sum};
    }
    e.resize(out);
    e.shrink_to_fit();
}

}  // namespace

CellComplex build_full_complex(const Arity& arity, int max_leaves) {
    CellComplex cx;
    cx.arity = arity;
    cx.tag = ComplexTag::Full;
    const int degrees = arity.top_dimension() + 1;
    cx.basis.resize(degrees);
    cx.masks.resize(degrees);
    cx.delta.resize(degrees);

    // Pass 1: canonical keys with per-cell syzygy degree and cut-class mask.
    // Cells themselves are discarded immediately; class bits are assigned in
    // discovery order and permuted to the sorted universe afterwards.
    struct Meta {
        std::int32_t degree;
        std::int32_t index = -1;  // position within basis[degree], assigned later
        std::uint64_t mask;
    };
    std::map<CutClass, int> bit_of;
    std::map<std::string, Meta> seen;
    for_each_cell(arity, max_leaves, [&](const PlanarTreeCell& cell) {
        int s = syzygy_degree(cell, arity);
        if (s < 0 || s >= degrees)
            throw std::logic_error("cell with out-of-range syzygy degree: " + encode_key(cell));
        std::uint64_t mask = 0;
        for (const CutClass& c : cut_classes(cell)) {
            auto [it, fresh] = bit_of.emplace(c, static_cast<int>(bit_of.size()));
            if (it->second >= 64)
                throw std::logic_error("more than 64 cut classes realized");
            mask |= 1ull << it->second;
        }
        seen.emplace(encode_key(cell), Meta{s, -1, mask});
    });

    std::vector<int> bit_perm(bit_of.size());
    int sorted_bit = 0;
    for (const auto& [c, b] : bit_of) {  // map iterates classes in sorted order
        cx.class_universe.push_back(c);
        bit_perm[b] = sorted_bit++;
    }

    // Pass 2: indices per degree (key order within each degree is the global
    // key order restricted to it, so bases come out sorted).
    for (auto& [key, meta] : seen) {
        meta.index = static_cast<int>(cx.basis[meta.degree].size());
        cx.basis[meta.degree].push_back(key);
        std::uint64_t mask = 0;
        for (std::uint64_t rest = meta.mask; rest;) {
            int b = std::countr_zero(rest);
            rest &= rest - 1;
            mask |= 1ull << bit_perm[b];
        }
        cx.masks[meta.degree].push_back(mask);
    }

    // Pass 3: differential entries from contractions; the cell is rebuilt
    // from its key so no cell structure has to stay resident.
    for (int s = 0; s < degrees; ++s) {
        cx.delta[s].rows = s + 1 < degrees ? static_cast<int>(cx.basis[s + 1].size()) : 0;
        cx.delta[s].cols = static_cast<int>(cx.basis[s].size());
    }
    for (const auto& [key, meta] : seen) {
        const PlanarTreeCell cell = decode_key(key);
        for (int e = 0; e < static_cast<int>(cell.edges.size()); ++e) {
            PlanarTreeCell face = contract_edge(cell, e);
            auto it = seen.find(encode_key(face));
            if (it == seen.end() || it->second.degree != meta.degree + 1)
                throw std::logic_error("differential: face of cell is not in the basis above");
            cx.delta[meta.degree].add(it->second.index, meta.index, sign_of(cell, e));
        }
    }
    for (int s = 0; s < degrees; ++s)
        normalize_entries(cx.delta[s]);
    if (!d_squared_is_zero(cx))
        throw std::logic_error("delta^2 != 0 for full complex of " + arity.to_string());
    return cx;
}

std::pair<CellComplex, CellComplex> split_y_and_clov(const CellComplex& full) {
    const int shift = full.arity.k - 1;
    CellComplex y, clov;
    y.arity = clov.arity = full.arity;
    y.tag = ComplexTag::YPart;
    clov.tag = ComplexTag::ClovQuotient;
    clov.class_universe = full.class_universe;
    const int degrees = full.degree_count();
    int y_degrees = std::max(degrees - shift, 0);
    y.basis.resize(y_degrees);
    y.masks.resize(y_degrees);
    clov.basis.resize(degrees);
    clov.masks.resize(degrees);
    // pos[s][j] = index within its half; bivalent-free cells (mask 0) go to Y.
    std::vector<std::vector<int>> pos(degrees);
    for (int s = 0; s < degrees; ++s) {
        pos[s].resize(full.basis[s].size());
        for (size_t j = 0; j < full.basis[s].size(); ++j) {
            if (full.masks[s][j] == 0) {
                if (s - shift < 0)
                    throw std::logic_error("bivalent-free cell below syzygy k-1");
                pos[s][j] = static_cast<int>(y.basis[s - shift].size());
                y.basis[s - shift].push_back(full.basis[s][j]);
                y.masks[s - shift].push_back(0);
            } else {
                pos[s][j] = static_cast<int>(clov.basis[s].size());
                clov.basis[s].push_back(full.basis[s][j]);
                clov.masks[s].push_back(full.masks[s][j]);
            }
        }
    }
    // Both differentials are restrictions of the full one: YPart is a
    // subcomplex (a contraction never creates a bivalent vertex — an entry
    // leaving it is an error), ClovQuotient keeps entries between cells with
    // bivalents and drops the rest.
    y.delta.resize(y_degrees);
    clov.delta.resize(degrees);
    for (int t = 0; t < y_degrees; ++t) {
        y.delta[t].rows = t + 1 < y_degrees ? static_cast<int>(y.basis[t + 1].size()) : 0;
        y.delta[t].cols = static_cast<int>(y.basis[t].size());
    }
    for (int s = 0; s < degrees; ++s) {
        clov.delta[s].rows = s + 1 < degrees ? static_cast<int>(clov.basis[s + 1].size()) : 0;
        clov.delta[s].cols = static_cast<int>(clov.basis[s].size());
        for (const auto& [r, c, v] : full.delta[s].entries) {
            bool col_y = full.masks[s][c] == 0;
            bool row_y = full.masks[s + 1][r] == 0;
            if (col_y) {
                if (!row_y)
                    throw std::logic_error("bivalent-free subcomplex is not closed at " +
                                           full.basis[s][c]);
                y.delta[s - shift].add(pos[s + 1][r], pos[s][c], v);
            } else if (!row_y) {
                clov.delta[s].add(pos[s + 1][r], pos[s][c], v);
            }
        }
    }
    for (auto& d : y.delta)
        normalize_entries(d);
    for (auto& d : clov.delta)
        normalize_entries(d);
    if (!d_squared_is_zero(y))
        throw std::logic_error("delta^2 != 0 for y_part complex of " + y.arity.to_string());
    if (!d_squared_is_zero(clov))
        throw std::logic_error("delta^2 != 0 for clov_quotient complex of " +
                               clov.arity.to_string());
    return {std::move(y), std::move(clov)};
}

CellComplex subfamily_complex(const CellComplex& full, const std::vector<CutClass>& classes) {
    return SubfamilyExtractor(full).extract(classes);
}

SubfamilyExtractor::SubfamilyExtractor(const CellComplex& full) : full_(full) {
    universe_ = full.class_universe;
    groups_.resize(full.degree_count());
    for (int s = 0; s < full.degree_count(); ++s) {
        std::map<std::uint64_t, std::vector<int>> by_mask;
        for (size_t j = 0; j < full.masks[s].size(); ++j)
            by_mask[full.masks[s][j]].push_back(static_cast<int>(j));
        groups_[s].assign(by_mask.begin(), by_mask.end());
    }
    col_order_.resize(full.degree_count());
    col_ptr_.resize(full.degree_count());
    for (int s = 0; s < full.degree_count(); ++s) {
        const auto& ent = full.delta[s].entries;
        std::vector<int>& order = col_order_[s];
        order.resize(ent.size());
        for (size_t e = 0; e < ent.size(); ++e)
            order[e] = static_cast<int>(e);
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            return std::get<1>(ent[x]) != std::get<1>(ent[y])
                       ? std::get<1>(ent[x]) < std::get<1>(ent[y])
                       : std::get<0>(ent[x]) < std::get<0>(ent[y]);
        });
        std::vector<int>& ptr = col_ptr_[s];
        ptr.assign(full.delta[s].cols + 1, 0);
        for (const auto& [r, c, v] : ent)
            ++ptr[c + 1];
        for (int c = 0; c < full.delta[s].cols; ++c)
            ptr[c + 1] += ptr[c];
    }
    size_t widest = 0;
    for (const auto& b : full.basis)
        widest = std::max(widest, b.size());
    scratch_.assign(widest, -1);
}

CellComplex SubfamilyExtractor::extract(const std::vector<CutClass>& classes) const {
    CellComplex sub;
    sub.arity = full_.arity;
    sub.tag = ComplexTag::SubFamily;
    sub.family = classes;
    std::sort(sub.family.begin(), sub.family.end());
    sub.family.erase(std::unique(sub.family.begin(), sub.family.end()), sub.family.end());
    sub.class_universe = universe_;

    std::uint64_t fmask = 0;
    bool impossible = false;
    for (const CutClass& c : sub.family) {
        auto it = std::lower_bound(universe_.begin(), universe_.end(), c);
        if (it == universe_.end() || !(*it == c))
            impossible = true;  // no cell realizes this class at all
        else
            fmask |= 1ull << (it - universe_.begin());
    }

    const int degrees = full_.degree_count();
    sub.basis.resize(degrees);
    sub.masks.resize(degrees);
    std::vector<std::vector<int>> sel(degrees);
    if (!impossible) {
        for (int s = 0; s < degrees; ++s) {
            for (const auto& [mask, idx] : groups_[s])
                if ((mask & fmask) == fmask)
                    sel[s].insert(sel[s].end(), idx.begin(), idx.end());
            std::sort(sel[s].begin(), sel[s].end());
            sub.basis[s].reserve(sel[s].size());
            for (int j : sel[s]) {
                sub.basis[s].push_back(full_.basis[s][j]);
                sub.masks[s].push_back(full_.masks[s][j]);
            }
        }
    }
    // Induced differential: rows and columns of full delta restricted to the
    // selected cells. scratch_ holds row positions for one degree at a time
    // and is wiped back to -1 before moving on.
    sub.delta.resize(degrees);
    for (int s = 0; s < degrees; ++s) {
        SparseIntMatrix& d = sub.delta[s];
        d.rows = s + 1 < degrees ? static_cast<int>(sel[s + 1].size()) : 0;
        d.cols = static_cast<int>(sel[s].size());
        if (d.cols == 0 || d.rows == 0)
            continue;
        for (size_t i = 0; i < sel[s + 1].size(); ++i)
            scratch_[sel[s + 1][i]] = static_cast<int>(i);
        const auto& ent = full_.delta[s].entries;
        for (size_t i = 0; i < sel[s].size(); ++i) {
            int col = sel[s][i];
            for (int e = col_ptr_[s][col]; e < col_ptr_[s][col + 1]; ++e) {
                const auto& [r, c, v] = ent[col_order_[s][e]];
                if (scratch_[r] >= 0)
                    d.add(scratch_[r], static_cast<int>(i), v);
            }
        }
        for (int j : sel[s + 1])
            scratch_[j] = -1;
    }
    if (!d_squared_is_zero(sub))
        throw std::logic_error("delta^2 != 0 for subfamily complex of " + sub.arity.to_string());
    return sub;
}

bool d_squared_is_zero(const CellComplex& cx) {
    for (int s = 0; s + 1 < cx.degree_count(); ++s) {
        // (delta[s+1] * delta[s]) column by column
        const SparseIntMatrix& a = cx.delta[s + 1];
        const SparseIntMatrix& b = cx.delta[s];
        std::vector<std::vector<std::pair<int, long long>>> a_by_col(a.cols);
        for (const auto& [r, c, v] : a.entries)
            a_by_col[c].emplace_back(r, v);
        std::vector<std::vector<std::pair<int, long long>>> b_by_col(b.cols);
        for (const auto& [r, c, v] : b.entries)
            b_by_col[c].emplace_back(r, v);
        for (int j = 0; j < b.cols; ++j) {
            std::map<int, long long> col;
            for (const auto& [mid, vb] : b_by_col[j])
                for (const auto& [r, va] : a_by_col[mid])
                    col[r] += va * vb;
            for (const auto& [r, v] : col)
                if (v != 0)
                    return false;
        }
    }
    return true;
}

namespace {

// Visits the listing in bounded-size pieces so huge complexes never hold
// the whole text in memory.
template <class Sink>
void walk_listing(const CellComplex& cx, const Sink& sink) {
    std::ostringstream os;
    os << "%% cell-complex " << tag_name(cx.tag) << " " << cx.arity.to_string() << "\n";
    sink(os.str());
    for (int s = 0; s < cx.degree_count(); ++s) {
        std::ostringstream head;
        head << "%% degree " << s << " basis " << cx.basis[s].size() << "\n";
        sink(head.str());
        for (const auto& [r, c, v] : cx.delta[s].entries) {
            std::ostringstream line;
            line << s << " " << (s + 1 < cx.degree_count() ? cx.basis[s + 1][r] : "-") << " "
                 << cx.basis[s][c] << " " << v << "\n";
            sink(line.str());
        }
    }
}

}  // namespace

std::string complex_listing(const CellComplex& cx) {
    std::string out;
    walk_listing(cx, [&](const std::string& piece) { out += piece; });
    return out;
}

std::uint64_t complex_hash(const CellComplex& cx) {
    std::uint64_t h = 1469598103934665603ull;
    walk_listing(cx, [&](const std::string& piece) {
        for (unsigned char c : piece) {
            h ^= c;
            h *= 1099511628211ull;
        }
    });
    return h;
}

}  // namespace cloven
