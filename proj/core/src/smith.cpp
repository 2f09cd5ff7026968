#include "cloven/smith.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace cloven {

namespace {

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// Working form: rows as ordered col->value maps plus a column index for
// pivot search and column operations. Only the (small) residue left after
// the free-pivot phase lives here.
struct Work {
    std::vector<std::map<int, BigInt>> row;
    std::vector<std::set<int>> col_rows;

    Work(int rows, int cols) : row(rows), col_rows(cols) {}

    void set(int r, int c, const BigInt& v) {
        if (v == 0) {
            row[r].erase(c);
            col_rows[c].erase(r);
        } else {
            row[r][c] = v;
            col_rows[c].insert(r);
        }
    }

    // row r2 -= q * row r1
    void row_axpy(int r2, const BigInt& q, int r1) {
        if (q == 0)
            return;
        for (const auto& [c, v] : row[r1]) {
            auto it = row[r2].find(c);
            BigInt nv = (it == row[r2].end() ? BigInt(0) : it->second) - q * v;
            set(r2, c, nv);
        }
    }

    // col c2 -= q * col c1
    void col_axpy(int c2, const BigInt& q, int c1) {
        if (q == 0)
            return;
        std::vector<int> rows_with(col_rows[c1].begin(), col_rows[c1].end());
        for (int r : rows_with) {
            const BigInt& v = row[r][c1];
            auto it = row[r].find(c2);
            BigInt nv = (it == row[r].end() ? BigInt(0) : it->second) - q * v;
            set(r, c2, nv);
        }
    }
};

long long fill_of(const Work& w, int r, int c) {
    return static_cast<long long>(w.row[r].size() - 1) *
           static_cast<long long>(w.col_rows[c].size() - 1);
}

// Min-heap candidate: (fill estimate, row, col).
using Cand = std::tuple<long long, int, int>;
using CandHeap = std::priority_queue<Cand, std::vector<Cand>, std::greater<Cand>>;

}  // namespace

std::vector<BigInt> smith_normal_form(const SparseIntMatrix& m) {
    // Accumulate duplicate triplets and drop cancellations.
    std::vector<std::tuple<int, int, long long>> ent(m.entries);
    for (const auto& [r, c, v] : ent)
        if (r < 0 || r >= m.rows || c < 0 || c >= m.cols)
            throw std::invalid_argument("smith_normal_form: entry out of range");
    std::sort(ent.begin(), ent.end(),
              [](const auto& a, const auto& b) {
                  return std::get<0>(a) != std::get<0>(b) ? std::get<0>(a) < std::get<0>(b)
                                                          : std::get<1>(a) < std::get<1>(b);
              });
    size_t out = 0;
    for (size_t i = 0; i < ent.size();) {
        auto [r, c, v] = ent[i];
        long long sum = 0;
        for (; i < ent.size() && std::get<0>(ent[i]) == r && std::get<1>(ent[i]) == c; ++i)
            sum += std::get<2>(ent[i]);
        if (sum != 0)
            ent[out++] = {r, c, sum};
    }
    ent.resize(out);

    long long unit_pivots = 0;

    // --- Phase 1: free pivots. A row (or column) whose single surviving
    // entry is a unit can be pivoted out by deleting its row and column; no
    // other value changes, so this runs on a compact immutable entry store.
    {
        const size_t nnz = ent.size();
        std::vector<std::vector<int>> of_row(m.rows), of_col(m.cols);
        std::vector<int> row_nnz(m.rows, 0), col_nnz(m.cols, 0);
        for (size_t e = 0; e < nnz; ++e) {
            const auto& [r, c, v] = ent[e];
            of_row[r].push_back(static_cast<int>(e));
            of_col[c].push_back(static_cast<int>(e));
            ++row_nnz[r];
            ++col_nnz[c];
        }
        std::vector<char> row_dead(m.rows, 0), col_dead(m.cols, 0);
        std::deque<std::pair<char, int>> queue;  // ('r', row) or ('c', col)
        for (int r = 0; r < m.rows; ++r)
            if (row_nnz[r] == 1)
                queue.emplace_back('r', r);
        for (int c = 0; c < m.cols; ++c)
            if (col_nnz[c] == 1)
                queue.emplace_back('c', c);

        auto alive = [&](int e) {
            return !row_dead[std::get<0>(ent[e])] && !col_dead[std::get<1>(ent[e])];
        };
        auto kill_pair = [&](int pr, int pc) {
            row_dead[pr] = 1;
            col_dead[pc] = 1;
            for (int e : of_col[pc]) {
                int r = std::get<0>(ent[e]);
                if (!row_dead[r] && --row_nnz[r] == 1)
                    queue.emplace_back('r', r);
            }
            for (int e : of_row[pr]) {
                int c = std::get<1>(ent[e]);
                if (!col_dead[c] && --col_nnz[c] == 1)
                    queue.emplace_back('c', c);
            }
            ++unit_pivots;
        };
        while (!queue.empty()) {
            auto [kind, idx] = queue.front();
            queue.pop_front();
            if (kind == 'r') {
                if (row_dead[idx] || row_nnz[idx] != 1)
                    continue;
                for (int e : of_row[idx])
                    if (alive(e)) {
                        auto [r, c, v] = ent[e];
                        if (v == 1 || v == -1)
                            kill_pair(r, c);
                        break;
                    }
            } else {
                if (col_dead[idx] || col_nnz[idx] != 1)
                    continue;
                for (int e : of_col[idx])
                    if (alive(e)) {
                        auto [r, c, v] = ent[e];
                        if (v == 1 || v == -1)
                            kill_pair(r, c);
                        break;
                    }
            }
        }

        // Compact the residue.
        std::vector<int> rmap(m.rows, -1), cmap(m.cols, -1);
        int nr = 0, nc = 0;
        std::vector<std::tuple<int, int, long long>> rest;
        for (const auto& [r, c, v] : ent) {
            if (row_dead[r] || col_dead[c])
                continue;
            if (rmap[r] < 0)
                rmap[r] = nr++;
            if (cmap[c] < 0)
                cmap[c] = nc++;
            rest.emplace_back(rmap[r], cmap[c], v);
        }
        ent = std::move(rest);
        ent.shrink_to_fit();
        // Rebind dimensions to the residue.
        Work w(nr, nc);
        for (const auto& [r, c, v] : ent)
            w.set(r, c, BigInt(v));

        std::vector<char> row_done(nr, 0), col_done(nc, 0);
        std::vector<BigInt> diag(static_cast<size_t>(unit_pivots), BigInt(1));

        // --- Phase 2: unit pivots picked by least fill (lazy min-heap).
        CandHeap heap;
        for (const auto& [r, c, v] : ent)
            if (v == 1 || v == -1)
                heap.emplace(fill_of(w, r, c), r, c);
        while (!heap.empty()) {
            auto [fill, pr, pc] = heap.top();
            heap.pop();
            if (row_done[pr] || col_done[pc])
                continue;
            auto it = w.row[pr].find(pc);
            if (it == w.row[pr].end() || abs(it->second) != 1)
                continue;
            long long now = fill_of(w, pr, pc);
            if (now > fill) {
                heap.emplace(now, pr, pc);
                continue;
            }
            const BigInt a = it->second;
            std::vector<int> in_col(w.col_rows[pc].begin(), w.col_rows[pc].end());
            for (int r : in_col) {
                if (r == pr)
                    continue;
                w.row_axpy(r, w.row[r][pc] / a, pr);
                for (const auto& [c, v] : w.row[r])
                    if (abs(v) == 1)
                        heap.emplace(fill_of(w, r, c), r, c);
            }
            for (const auto& [c, v] : w.row[pr])
                if (c != pc)
                    w.col_rows[c].erase(pr);
            w.row[pr].clear();
            w.col_rows[pc].erase(pr);
            diag.emplace_back(1);
            row_done[pr] = 1;
            col_done[pc] = 1;
        }

        // --- Phase 3: whatever is left has no unit entries; run the general
        // elimination with pivot shrinking. The residue here is tiny.
        for (;;) {
            int pr = -1, pc = -1;
            BigInt pv;
            long long best_fill = 0;
            for (int r = 0; r < nr; ++r) {
                if (row_done[r])
                    continue;
                for (const auto& [c, v] : w.row[r]) {
                    BigInt a = abs(v);
                    long long fill = fill_of(w, r, c);
                    if (pr < 0 || a < pv || (a == pv && fill < best_fill)) {
                        pr = r;
                        pc = c;
                        pv = a;
                        best_fill = fill;
                    }
                }
            }
            if (pr < 0)
                break;

            // Shrink the pivot until it divides everything in its row and
            // column; each reduction leaves a strictly smaller remainder,
            // which becomes the new pivot.
            for (bool clean = false; !clean;) {
                clean = true;
                BigInt a = w.row[pr][pc];
                for (int r : std::vector<int>(w.col_rows[pc].begin(), w.col_rows[pc].end())) {
                    if (r == pr)
                        continue;
                    const BigInt v = w.row[r][pc];
                    if (v % a != 0) {
                        w.row_axpy(r, v / a, pr);
                        pr = r;
                        clean = false;
                        break;
                    }
                }
                if (!clean)
                    continue;
                int bad_col = -1;
                BigInt bad_val;
                for (const auto& [c, v] : w.row[pr]) {
                    if (c != pc && v % a != 0) {
                        bad_col = c;
                        bad_val = v;
                        break;
                    }
                }
                if (bad_col >= 0) {
                    w.col_axpy(bad_col, bad_val / a, pc);
                    pc = bad_col;
                    clean = false;
                }
            }

            BigInt a = w.row[pr][pc];
            for (int r : std::vector<int>(w.col_rows[pc].begin(), w.col_rows[pc].end())) {
                if (r == pr)
                    continue;
                w.row_axpy(r, w.row[r][pc] / a, pr);
            }
            // The pivot column is clear, so clearing the pivot row by column
            // operations touches only the pivot row: just drop its entries.
            for (const auto& [c, v] : w.row[pr])
                if (c != pc)
                    w.col_rows[c].erase(pr);
            w.row[pr].clear();
            w.col_rows[pc].erase(pr);
            diag.push_back(abs(a));
            row_done[pr] = 1;
            col_done[pc] = 1;
        }

        // Fix up the divisibility chain: d_1 | d_2 | ...
        for (bool changed = true; changed;) {
            changed = false;
            for (size_t i = 0; i + 1 < diag.size(); ++i) {
                if (diag[i + 1] % diag[i] != 0) {
                    BigInt g = gcd(diag[i], diag[i + 1]);
                    BigInt l = diag[i] / g * diag[i + 1];
                    diag[i] = g;
                    diag[i + 1] = l;
                    changed = true;
                }
            }
        }
        std::sort(diag.begin(), diag.end());
        return diag;
    }
}

int rank_of(const SparseIntMatrix& m) {
    return rank_from_factors(smith_normal_form(m));
}

}  // namespace cloven
