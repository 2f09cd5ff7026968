#pragma once

// Reference implementations used only as test oracles: a dense textbook
// Smith-normal-form routine and a fraction-free (Bareiss) rank computation.

#include <cstdlib>
#include <vector>

#include "cloven/smith.hpp"

namespace oracle {

using cloven::BigInt;
using Dense = std::vector<std::vector<BigInt>>;

inline Dense to_dense(const cloven::SparseIntMatrix& m) {
    Dense a(m.rows, std::vector<BigInt>(m.cols, 0));
    for (const auto& [r, c, v] : m.entries)
        a[r][c] += v;
    return a;
}

// Invariant factors d_1 | d_2 | ... by unimodular row/column operations:
// bring the smallest nonzero entry to the pivot, reduce its row and column,
// and fold in any submatrix entry the pivot does not divide.
inline std::vector<BigInt> dense_smith(Dense a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<BigInt> diag;
    for (int t = 0; t < rows && t < cols; ++t) {
        bool changed = true;
        while (changed) {
            changed = false;
            // Smallest nonzero entry of the trailing submatrix -> (t, t).
            int pr = -1, pc = -1;
            for (int r = t; r < rows; ++r)
                for (int c = t; c < cols; ++c)
                    if (a[r][c] != 0 &&
                        (pr < 0 || abs(a[r][c]) < abs(a[pr][pc]))) {
                        pr = r;
                        pc = c;
                    }
            if (pr < 0)
                return diag;
            std::swap(a[t], a[pr]);
            for (int r = t; r < rows; ++r)
                std::swap(a[r][t], a[r][pc]);
            for (int r = t + 1; r < rows; ++r)
                if (a[r][t] != 0) {
                    const BigInt q = a[r][t] / a[t][t];
                    for (int c = t; c < cols; ++c)
                        a[r][c] -= q * a[t][c];
                    if (a[r][t] != 0)
                        changed = true;  // remainder left; re-pivot
                }
            for (int c = t + 1; c < cols; ++c)
                if (a[t][c] != 0) {
                    const BigInt q = a[t][c] / a[t][t];
                    for (int r = t; r < rows; ++r)
                        a[r][c] -= q * a[r][t];
                    if (a[t][c] != 0)
                        changed = true;
                }
            if (!changed) {
                // Enforce divisibility: fold a bad row into row t and redo.
                for (int r = t + 1; r < rows && !changed; ++r)
                    for (int c = t + 1; c < cols && !changed; ++c)
                        if (a[r][c] % a[t][t] != 0) {
                            for (int cc = t; cc < cols; ++cc)
                                a[t][cc] += a[r][cc];
                            changed = true;
                        }
            }
        }
        diag.push_back(abs(a[t][t]));
    }
    return diag;
}

// Rank over the rationals by Bareiss fraction-free elimination.
inline int bareiss_rank(Dense a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    BigInt prev = 1;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pr = -1;
        for (int r = rank; r < rows; ++r)
            if (a[r][c] != 0) {
                pr = r;
                break;
            }
        if (pr < 0)
            continue;
        std::swap(a[rank], a[pr]);
        for (int r = rank + 1; r < rows; ++r) {
            for (int cc = c + 1; cc < cols; ++cc)
                a[r][cc] = (a[rank][c] * a[r][cc] - a[r][c] * a[rank][cc]) / prev;
            a[r][c] = 0;
        }
        prev = a[rank][c];
        rank++;
    }
    return rank;
}

}  // namespace oracle
