#pragma once

#include <string>
#include <vector>

#include "cloven/cuts.hpp"
#include "cloven/homology.hpp"

namespace cloven {

// The nerve of the cloven-cell covering: vertices are the valid cut
// classes, simplices the jointly realizable families.
struct NerveComplex {
    Arity arity;
    std::vector<CutClass> vertices;
    // simplices[r]: sorted (r+1)-tuples of vertex indices, lexicographic.
    std::vector<std::vector<std::vector<int>>> simplices;

    int dim() const { return static_cast<int>(simplices.size()) - 1; }
    long long simplex_count() const;
    std::vector<std::vector<int>> facets() const;   // maximal simplices
    std::string facet_listing() const;              // text export
};

NerveComplex build_nerve(const Arity& arity, int max_leaves = kDefaultMaxLeaves);

// Simplicial chain homology with integer coefficients.
HomologySummary nerve_homology(const NerveComplex& nerve);

}  // namespace cloven
