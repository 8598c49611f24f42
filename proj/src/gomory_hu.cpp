#include "ghcut/gomory_hu.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "ghcut/maxflow.hpp"

namespace ghcut {

GHTree build_gusfield(const Graph& g, const GusfieldOptions& options, std::size_t* flow_calls) {
  const Vertex n = g.num_vertices();
  if (n < 1) throw std::invalid_argument("build_gusfield: empty graph");
  if (!options.allow_disconnected && !is_connected(g)) {
    throw std::invalid_argument("build_gusfield: graph is disconnected");
  }
  GHTree t;
  t.root = 0;
  t.parent.assign(n, 0);
  t.weight.assign(n, 0);
  t.parent[0] = -1;

  Dinic dinic(g);
  std::size_t calls = 0;
  for (Vertex s = 1; s < n; ++s) {
    const Vertex target = t.parent[s];
    t.weight[s] = dinic.run(s, target);
    ++calls;
    const auto& side = dinic.source_side();
    for (Vertex v = s + 1; v < n; ++v) {
      if (side[v] && t.parent[v] == target) t.parent[v] = s;
    }
  }
  if (flow_calls) *flow_calls = calls;
  return t;
}

namespace {

std::vector<int> depths(const GHTree& t) {
  std::vector<int> depth(t.size(), -1);
  for (Vertex v = 0; v < t.size(); ++v) {
    std::vector<Vertex> chain;
    Vertex u = v;
    while (u != -1 && depth[u] < 0) {
      chain.push_back(u);
      u = t.parent[u];
    }
    int d = u == -1 ? -1 : depth[u];
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++d;
  }
  return depth;
}

Weight path_min(const GHTree& t, const std::vector<int>& depth, Vertex a, Vertex b) {
  Weight best = std::numeric_limits<Weight>::max();
  while (a != b) {
    if (depth[a] < depth[b]) std::swap(a, b);
    best = std::min(best, t.weight[a]);
    a = t.parent[a];
  }
  return best;
}

std::optional<Counterexample> check_source(const Graph& g, const GHTree& t, const std::vector<int>& depth, Vertex a) {
  Dinic dinic(g);
  for (Vertex b = a + 1; b < g.num_vertices(); ++b) {
    const Weight truth = dinic.run(a, b);
    const Weight tree_value = path_min(t, depth, a, b);
    if (truth != tree_value) return Counterexample{a, b, tree_value, truth};
  }
  return std::nullopt;
}

void check_shape(const Graph& g, const GHTree& t) {
  if (t.size() != g.num_vertices()) throw std::invalid_argument("verify_gh: tree does not span the graph");
}

}  // namespace

Weight query(const GHTree& t, Vertex a, Vertex b) {
  if (a < 0 || b < 0 || a >= t.size() || b >= t.size()) throw std::invalid_argument("query: vertex out of range");
  if (a == b) throw std::invalid_argument("query: a and b must differ");
  return path_min(t, depths(t), a, b);
}

std::optional<Counterexample> verify_gh_serial(const Graph& g, const GHTree& t) {
  check_shape(g, t);
  const auto depth = depths(t);
  for (Vertex a = 0; a < g.num_vertices(); ++a) {
    if (auto bad = check_source(g, t, depth, a)) return bad;
  }
  return std::nullopt;
}

std::optional<Counterexample> verify_gh(const Graph& g, const GHTree& t) {
  check_shape(g, t);
  const auto depth = depths(t);
  const Vertex n = g.num_vertices();
  std::vector<std::optional<Counterexample>> found(n);
#pragma omp parallel for schedule(dynamic)
  for (Vertex a = 0; a < n; ++a) found[a] = check_source(g, t, depth, a);
  for (const auto& bad : found) {
    if (bad) return bad;
  }
  return std::nullopt;
}

}  // namespace ghcut
