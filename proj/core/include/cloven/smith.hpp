#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace cloven {

using BigInt = boost::multiprecision::cpp_int;

// Sparse integer matrix in triplet form. Rows/cols may be zero.
struct SparseIntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::tuple<int, int, long long>> entries;

    void add(int r, int c, long long v) {
        if (v != 0)
            entries.emplace_back(r, c, v);
    }
    SparseIntMatrix transposed() const {
        SparseIntMatrix t;
        t.rows = cols;
        t.cols = rows;
        t.entries.reserve(entries.size());
        for (const auto& [r, c, v] : entries)
            t.entries.emplace_back(c, r, v);
        return t;
    }
};

// Invariant factors d_1 | d_2 | ... (all positive), computed by unimodular
// row/column elimination over arbitrary-precision integers. Pivots are
// chosen minimal in absolute value, breaking ties by least fill-in.
std::vector<BigInt> smith_normal_form(const SparseIntMatrix& m);

inline int rank_from_factors(const std::vector<BigInt>& factors) {
    return static_cast<int>(factors.size());
}

int rank_of(const SparseIntMatrix& m);

}  // namespace cloven
