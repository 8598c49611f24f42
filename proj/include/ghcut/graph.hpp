#pragma once

#include <span>
#include <vector>

#include "ghcut/types.hpp"

namespace ghcut {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight w = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Arc {
  Vertex to = 0;
  Weight w = 0;
};

/// Weighted undirected graph on vertices [0, n).
///
/// Construction normalizes the edge list: every edge is stored with u < v,
/// parallel edges are merged by summing weights, and self-loops are dropped.
/// Weights must be >= 1 and the total weight must stay below 2^62 so that
/// every cut and flow value fits comfortably in a signed 64-bit integer.
/// Instances are immutable after construction.
class Graph {
 public:
  Graph() = default;
  Graph(Vertex n, std::span<const Edge> edges);

  Vertex num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  /// Normalized edges, sorted by (u, v).
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const Arc> neighbors(Vertex v) const {
    return {arcs_.data() + offsets_[v], arcs_.data() + offsets_[v + 1]};
  }

  Weight weighted_degree(Vertex v) const { return degree_[v]; }
  Weight total_weight() const { return total_weight_; }

 private:
  Vertex n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Arc> arcs_;
  std::vector<Weight> degree_;
  Weight total_weight_ = 0;
};

/// One side of a vertex bipartition together with delta(side).
struct Cut {
  VertexSet side;
  Weight value = 0;
};

/// delta(side): total weight of edges with exactly one endpoint in `side`.
/// Throws std::invalid_argument if side is empty, all of V, or out of range.
Weight cut_value(const Graph& g, std::span<const Vertex> side);

/// Unchecked variant for membership masks (mask[v] != 0 means v is inside).
Weight cut_value_mask(const Graph& g, std::span<const char> mask);

/// Validates `side`, sorts and deduplicates it, and attaches its value.
Cut make_cut(const Graph& g, VertexSet side);

VertexSet complement(Vertex n, std::span<const Vertex> side);
std::vector<char> to_mask(Vertex n, std::span<const Vertex> set);
VertexSet from_mask(std::span<const char> mask);

/// Maps every vertex of an original graph to its vertex in a quotient graph.
struct ContractionMap {
  std::vector<Vertex> forward;
  /// contracted[q] is true iff quotient vertex q stands for a group of two
  /// or more original vertices.
  std::vector<bool> contracted;

  Vertex quotient_size() const { return static_cast<Vertex>(contracted.size()); }

  /// Preimage of a quotient vertex set, sorted.
  VertexSet lift(std::span<const Vertex> quotient_side) const;
};

struct Contraction {
  Graph graph;
  ContractionMap map;
};

/// Merges each group into a single vertex. Group i becomes quotient vertex i;
/// the remaining vertices follow in increasing original order. Edge weights
/// between merged vertices are summed and self-loops are dropped, so every
/// quotient cut has the same value as its lift.
/// Throws std::invalid_argument for empty, out-of-range or overlapping groups.
Contraction contract(const Graph& g, std::span<const VertexSet> groups);

bool is_connected(const Graph& g);

}  // namespace ghcut
