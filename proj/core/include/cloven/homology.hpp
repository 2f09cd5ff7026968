#pragma once

#include <string>
#include <vector>

#include "cloven/complex.hpp"
#include "cloven/smith.hpp"

namespace cloven {

// Per-degree Betti ranks and torsion coefficients (divisibility order),
// plus the Euler characteristic of the underlying graded basis.
struct HomologySummary {
    std::string tag;
    Arity arity;
    std::vector<long long> basis_sizes;
    std::vector<long long> betti;
    std::vector<std::vector<BigInt>> torsion;
    long long euler = 0;

    long long betti_at(int d) const {
        return d >= 0 && d < static_cast<int>(betti.size()) ? betti[d] : 0;
    }
    bool torsion_free() const {
        for (const auto& t : torsion)
            if (!t.empty())
                return false;
        return true;
    }
    int top_nonzero_degree() const;  // -1 when all homology vanishes
};

// Cohomology of the cochain complex: H^s = ker delta_s / im delta_{s-1}.
HomologySummary cohomology(const CellComplex& complex);

// Homology of the transposed (cellular chain) complex. Betti numbers agree
// with cohomology; torsion shifts one degree.
HomologySummary chain_homology(const CellComplex& complex);

// Homology of a plain graded matrix family d[s]: C_s -> C_{s+1}.
HomologySummary cohomology_of_matrices(const std::vector<SparseIntMatrix>& d,
                                       const std::vector<long long>& sizes,
                                       std::string tag, const Arity& arity);

// Rank identities forced by the long exact sequence of
// YPart[k-1] -> Full -> ClovQuotient.
struct LesResult {
    bool pass = false;
    std::string witness;  // first violated identity, empty on pass
};
LesResult les_consistency(const HomologySummary& y, const HomologySummary& clov,
                          const HomologySummary& full, int k);

}  // namespace cloven
