#pragma once

#include <functional>
#include <map>
#include <string>

#include "cloven/cell.hpp"

namespace cloven {

inline constexpr int kDefaultMaxLeaves = 10;

// All valid cells of the arity, keyed and deduplicated by canonical key
// (std::map keeps the deterministic sorted order). Generation is recursive
// over boundary arcs followed by direction assignment with constraint
// propagation. Throws resource_error when N exceeds the guard.
std::map<std::string, PlanarTreeCell> enumerate_cells(const Arity& arity,
                                                      int max_leaves = kDefaultMaxLeaves);

// Streaming form: visits every valid cell exactly once, in no particular
// order, without materializing the whole family. Complex assembly uses this
// to keep only derived per-cell data in memory.
void for_each_cell(const Arity& arity, int max_leaves,
                   const std::function<void(const PlanarTreeCell&)>& visit);

}  // namespace cloven
