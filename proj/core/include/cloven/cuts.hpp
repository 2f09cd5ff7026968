#pragma once

#include <vector>

#include "cloven/cell.hpp"

namespace cloven {

// Cut classes whose two boundary arcs each contain an output leaf, sorted.
std::vector<CutClass> valid_classes(const Arity& arity);

bool is_valid_class(const CutClass& c, const Arity& arity);

// Strict interleaving around the boundary circle; sharing a gap is not
// interleaving (the cuts admit parallel disjoint representatives).
bool classes_interleave(const CutClass& c1, const CutClass& c2, int num_leaves);

// The r+1 complementary regions of the noncrossing chord lamination, as
// leaf sets (empty regions included). Chord ends sharing a gap are ordered
// by the cyclic position of their opposite endpoints. Throws on
// interleaving input.
std::vector<std::vector<int>> regions(const std::vector<CutClass>& classes, const Arity& arity);

// True iff no two classes strictly interleave and every region of the
// lamination contains an output leaf. Throws on duplicate classes.
bool jointly_realizable(const std::vector<CutClass>& classes, const Arity& arity);

}  // namespace cloven
