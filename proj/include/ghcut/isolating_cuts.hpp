#pragma once

#include <span>
#include <vector>

#include "ghcut/graph.hpp"

namespace ghcut {

/// Minimum isolating cut of one terminal group: `side` contains the group,
/// avoids every other group, and is the inclusion-minimal set of minimum
/// value with that property.
struct IsolatingCut {
  std::size_t group = 0;
  VertexSet side;
  Weight value = 0;
};

struct IsolatingResult {
  std::vector<IsolatingCut> cuts;  // indexed by group
};

/// Minimum isolating cuts for >= 2 disjoint non-empty groups.
///
/// ceil(log2 #groups) bipartition max-flows, one per bit of the group index
/// and each between two unions of groups, localize every group to the region
/// that stays on its side in all of them; a final max-flow per group with
/// the outside of its region as the sink yields the minimal minimum
/// isolating side. The per-group flows are independent and run in
/// parallel when OpenMP is enabled.
///
/// Throws std::invalid_argument on fewer than two groups, an empty group or
/// overlapping groups.
IsolatingResult isolating_cuts(const Graph& g, std::span<const VertexSet> groups);

/// Same computation with the per-group flows run one after another.
IsolatingResult isolating_cuts_serial(const Graph& g, std::span<const VertexSet> groups);

}  // namespace ghcut
