#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "ghcut/generators.hpp"
#include "ghcut/graph.hpp"
#include "ghcut/steiner_tree.hpp"

namespace ghcut::testing {

inline Graph random_graph(std::uint64_t seed, Vertex n, Weight max_weight = 10) {
  GenerateParams p;
  p.n = n;
  p.seed = seed;
  p.max_weight = max_weight;
  return generate(p);
}

inline Graph path_graph(std::initializer_list<Weight> weights) {
  std::vector<Edge> edges;
  Vertex v = 0;
  for (Weight w : weights) {
    edges.push_back({v, v + 1, w});
    ++v;
  }
  return Graph(v + 1, edges);
}

inline Graph unit_clique(Vertex n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v, 1});
  }
  return Graph(n, edges);
}

// Center 0, leaf i joined with weight weights[i - 1].
inline Graph star_graph(std::initializer_list<Weight> weights) {
  std::vector<Edge> edges;
  Vertex v = 1;
  for (Weight w : weights) edges.push_back({0, v++, w});
  return Graph(v, edges);
}

// Each vertex kept with probability 2/3; at least `min_size` vertices.
inline VertexSet random_subset(std::mt19937_64& rng, Vertex n, std::size_t min_size) {
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (rng() % 3 != 0) out.push_back(v);
  }
  for (Vertex v = 0; out.size() < min_size; ++v) {
    if (!std::binary_search(out.begin(), out.end(), v)) out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  }
  return out;
}

// Random tree over `terminals` in which `source` is a leaf.
inline SteinerTree random_leaf_tree(const VertexSet& terminals, Vertex source, std::uint64_t seed) {
  VertexSet rest;
  for (Vertex v : terminals) {
    if (v != source) rest.push_back(v);
  }
  const SteinerTree base = random_steiner_tree(rest, rest.front(), seed);
  std::vector<TreeEdge> edges = base.edges();
  edges.emplace_back(source, rest[seed % rest.size()]);
  return SteinerTree(terminals, edges, source);
}

// Mask of `side` over n vertices, as a bitmask.
inline std::uint32_t bits_of(const VertexSet& side) {
  std::uint32_t m = 0;
  for (Vertex v : side) m |= 1U << v;
  return m;
}

}  // namespace ghcut::testing
