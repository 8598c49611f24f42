#pragma once

#include <optional>
#include <vector>

#include "ghcut/graph.hpp"

namespace ghcut {

/// Rooted weighted spanning tree; parent[root] == -1 and weight[v] is the
/// weight of the edge from v to parent[v].
struct GHTree {
  Vertex root = 0;
  std::vector<Vertex> parent;
  std::vector<Weight> weight;

  Vertex size() const { return static_cast<Vertex>(parent.size()); }
};

struct GusfieldOptions {
  /// Accept disconnected graphs; separated pairs then get weight-0 edges.
  bool allow_disconnected = false;
};

/// Gusfield's construction rooted at vertex 0: n - 1 max-flow calls on the
/// original graph, no contractions. If `flow_calls` is given it receives the
/// number of max-flow calls made. Throws std::invalid_argument for an empty
/// graph, or for a disconnected one unless allowed.
GHTree build_gusfield(const Graph& g, const GusfieldOptions& options = {}, std::size_t* flow_calls = nullptr);

/// Lightest edge on the tree path between a and b.
/// Throws std::invalid_argument if a == b or either is out of range.
Weight query(const GHTree& t, Vertex a, Vertex b);

struct Counterexample {
  Vertex a = 0;
  Vertex b = 0;
  Weight tree_value = 0;
  Weight true_value = 0;
};

/// Checks query(t, a, b) == lambda(a, b) for every pair a < b and returns the
/// lexicographically first pair that fails. Pairs are checked in parallel.
std::optional<Counterexample> verify_gh(const Graph& g, const GHTree& t);

/// Reference pair-by-pair check kept for testing the parallel kernel.
std::optional<Counterexample> verify_gh_serial(const Graph& g, const GHTree& t);

}  // namespace ghcut
