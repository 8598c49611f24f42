#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ghcut/graph.hpp"
#include "ghcut/random.hpp"

namespace ghcut {

using TreeEdge = std::pair<Vertex, Vertex>;

/// A tree on a subset of a graph's vertices with a designated source.
///
/// Tree edges are not required to be graph edges. The constructor checks
/// that the edges form exactly one tree over `vertices` and that the source
/// is a member; violations throw std::invalid_argument.
class SteinerTree {
 public:
  SteinerTree(VertexSet vertices, std::vector<TreeEdge> edges, Vertex source);

  const VertexSet& vertices() const { return vertices_; }
  const std::vector<TreeEdge>& edges() const { return edges_; }
  Vertex source() const { return source_; }
  std::size_t size() const { return vertices_.size(); }

  bool contains(Vertex v) const;
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool is_leaf(Vertex v) const { return degree(v) == 1; }

  /// The tree restricted to `keep`, which must contain the source and
  /// induce a connected subtree.
  SteinerTree induced(std::span<const Vertex> keep) const;

  /// Vertex sets of the components of T minus `removed`, each sorted,
  /// ordered by their smallest vertex.
  std::vector<VertexSet> components_without(Vertex removed) const;

  /// Vertices on the tree path from `from` to `to`, inclusive.
  VertexSet path(Vertex from, Vertex to) const;

 private:
  std::size_t index_of(Vertex v) const;

  VertexSet vertices_;
  std::vector<TreeEdge> edges_;
  Vertex source_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

/// Vertex whose removal leaves the smallest largest component; ties go to
/// the lowest id. Every remaining component has at most 2|V(T)|/3 vertices.
Vertex centroid(const SteinerTree& t);

/// Split of a tree around its centroid c relative to the source s.
///
/// side_trees are the components of T - c not containing s. When s != c,
/// path runs s = r_0, ..., r_h = c; source_branches (F) are the vertices
/// reachable from s without passing r_1; path_region (T_0) holds everything
/// else in the component of s, i.e. r_1..r_{h-1} and whatever hangs off
/// them. Then {s}, {c}, F, T_0, T_1..T_l partition V(T). When s == c, the
/// path is {s} and both F and T_0 are empty.
struct Decomposition {
  Vertex centroid = 0;
  VertexSet path;
  VertexSet source_branches;
  VertexSet path_region;
  std::vector<VertexSet> side_trees;
};

Decomposition decompose(const SteinerTree& t);

/// Number of tree edges with endpoints on different sides of the cut. Tree
/// vertices not listed in `side` are on the other side.
std::size_t respects_count(const SteinerTree& t, std::span<const Vertex> side);
std::size_t respects_count(const SteinerTree& t, const Cut& cut);

/// Removes each part independently with probability 1/2. Parts must be
/// vertex sets whose removal in any combination leaves a tree containing the
/// source (the F and T_i parts of a Decomposition); otherwise throws
/// std::logic_error.
SteinerTree prune_sample(const SteinerTree& t, std::span<const VertexSet> parts, SplitMix64& rng);

/// Uniform random recursive tree over `terminals` (must contain `source`).
SteinerTree random_steiner_tree(VertexSet terminals, Vertex source, std::uint64_t seed);

/// Spanning tree of a connected graph made of graph edges, chosen by
/// Kruskal over random edge priorities.
SteinerTree random_spanning_tree(const Graph& g, Vertex source, std::uint64_t seed);

}  // namespace ghcut
