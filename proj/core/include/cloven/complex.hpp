#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cloven/cell.hpp"
#include "cloven/enumerate.hpp"
#include "cloven/smith.hpp"

namespace cloven {

enum class ComplexTag { Full, YPart, ClovQuotient, SubFamily };

std::string tag_name(ComplexTag tag);

// A syzygy-graded free integer cochain complex with cell-keyed bases.
// delta[s] maps degree s to degree s+1 (rows indexed by basis[s+1]).
struct CellComplex {
    Arity arity;
    ComplexTag tag = ComplexTag::Full;
    std::vector<CutClass> family;  // the cut classes of a SubFamily complex

    std::vector<std::vector<std::string>> basis;  // per degree, sorted keys
    std::vector<SparseIntMatrix> delta;           // one per degree

    // Per-cell cut-class data, parallel to basis: masks[s][j] has bit b set
    // iff the cell has a bivalent vertex in class class_universe[b]. A cell
    // is bivalent-free iff its mask is zero (every bivalent vertex cuts).
    // Cell structure itself is recoverable via decode_key(basis[s][j]).
    std::vector<std::vector<std::uint64_t>> masks;
    std::vector<CutClass> class_universe;  // sorted classes realized somewhere

    int degree_count() const { return static_cast<int>(basis.size()); }
    long long size_at(int s) const {
        return s >= 0 && s < degree_count() ? static_cast<long long>(basis[s].size()) : 0;
    }
    long long total_cells() const;
    bool empty() const { return total_cells() == 0; }
    int bottom_degree() const;  // lowest nonempty degree, -1 if empty
};

// Bases from enumerate_cells grouped by syzygy degree, differential from
// contractions with orientation-comparison signs. Throws logic_error if the
// assembled differential fails delta^2 = 0 or has an entry outside {-1,0,1}.
CellComplex build_full_complex(const Arity& arity, int max_leaves = kDefaultMaxLeaves);

// (YPart, ClovQuotient): the subcomplex of cells without bivalent vertices,
// re-graded by s - (k-1), and the quotient spanned by cells with them.
std::pair<CellComplex, CellComplex> split_y_and_clov(const CellComplex& full);

// Cells possessing a bivalent vertex in every listed class, with the induced
// differential entries between them. Empty basis allowed.
CellComplex subfamily_complex(const CellComplex& full, const std::vector<CutClass>& classes);

// Amortizes subfamily extraction over many families: cells are grouped once
// by the bitmask of cut classes their bivalent vertices realize, and the
// differential of the full complex is indexed by column once.
class SubfamilyExtractor {
public:
    explicit SubfamilyExtractor(const CellComplex& full);
    CellComplex extract(const std::vector<CutClass>& classes) const;

private:
    const CellComplex& full_;
    std::vector<CutClass> universe_;  // classes realized by some cell, sorted
    // per degree: distinct mask -> cell indices (sorted)
    std::vector<std::vector<std::pair<std::uint64_t, std::vector<int>>>> groups_;
    // per degree: delta entry ids sorted by column, with column offsets
    std::vector<std::vector<int>> col_order_;
    std::vector<std::vector<int>> col_ptr_;
    mutable std::vector<int> scratch_;  // cell index -> position, reset after use
};

bool d_squared_is_zero(const CellComplex& complex);

// Plain-text triplet listing (degree, row key, column key, entry), one
// matrix block per degree, for external verification.
std::string complex_listing(const CellComplex& complex);

// FNV-1a hash of the listing; pins matrix provenance in reports.
std::uint64_t complex_hash(const CellComplex& complex);

}  // namespace cloven
