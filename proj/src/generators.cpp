#include "ghcut/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace ghcut {

namespace {

// std::uniform_int_distribution is implementation-defined; keep generated
// instances identical across standard libraries.
Weight uniform(std::mt19937_64& rng, Weight lo, Weight hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<Weight>(rng() % span);
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Vertex find(std::vector<Vertex>& parent, Vertex v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

void connect_components(Vertex n, std::vector<Edge>& edges, std::mt19937_64& rng, Weight lo, Weight hi) {
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (const Edge& e : edges) parent[find(parent, e.u)] = find(parent, e.v);

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 1; i < order.size(); ++i) {
    const Vertex a = find(parent, order[i - 1]);
    const Vertex b = find(parent, order[i]);
    if (a != b) {
      edges.push_back({order[i - 1], order[i], uniform(rng, lo, hi)});
      parent[a] = b;
    }
  }
}

Graph erdos_renyi(const GenerateParams& p, std::mt19937_64& rng) {
  const double n = p.n;
  const double prob = p.edge_probability.value_or(std::min(1.0, std::max(0.3, 2.0 * std::log(n) / n)));
  std::vector<Edge> edges;
  for (Vertex u = 0; u < p.n; ++u) {
    for (Vertex v = u + 1; v < p.n; ++v) {
      if (unit(rng) < prob) edges.push_back({u, v, uniform(rng, p.min_weight, p.max_weight)});
    }
  }
  connect_components(p.n, edges, rng, p.min_weight, p.max_weight);
  return Graph(p.n, edges);
}

Graph clique(const GenerateParams& p, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < p.n; ++u) {
    for (Vertex v = u + 1; v < p.n; ++v) edges.push_back({u, v, uniform(rng, p.min_weight, p.max_weight)});
  }
  return Graph(p.n, edges);
}

Graph planted_cut(const GenerateParams& p, std::mt19937_64& rng) {
  if (p.planted_value < 1) throw std::invalid_argument("generate: planted value must be >= 1");
  std::vector<Vertex> order(p.n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t half = order.size() / 2;
  const std::span<const Vertex> left(order.data(), half);
  const std::span<const Vertex> right(order.data() + half, order.size() - half);

  std::vector<Edge> edges;
  // Splitting a clique on h vertices crosses at least h - 1 of its edges.
  auto add_clique = [&](std::span<const Vertex> part) {
    if (part.size() < 2) return;
    const Weight floor_w = p.planted_value / static_cast<Weight>(part.size() - 1) + 1;
    const Weight lo = std::max(p.min_weight, floor_w);
    const Weight hi = std::max(lo, p.max_weight + floor_w - 1);
    for (std::size_t i = 0; i < part.size(); ++i) {
      for (std::size_t j = i + 1; j < part.size(); ++j) edges.push_back({part[i], part[j], uniform(rng, lo, hi)});
    }
  };
  add_clique(left);
  add_clique(right);

  Weight remaining = p.planted_value;
  while (remaining > 0) {
    const Weight w = uniform(rng, 1, remaining);
    const Vertex a = left[rng() % left.size()];
    const Vertex b = right[rng() % right.size()];
    edges.push_back({a, b, w});
    remaining -= w;
  }
  return Graph(p.n, edges);
}

}  // namespace

GraphKind parse_graph_kind(std::string_view name) {
  if (name == "erdos-renyi-weighted" || name == "erdos-renyi") return GraphKind::ErdosRenyi;
  if (name == "clique") return GraphKind::Clique;
  if (name == "planted-cut") return GraphKind::PlantedCut;
  throw std::invalid_argument("unknown graph kind '" + std::string(name) + "'");
}

std::string_view to_string(GraphKind kind) {
  switch (kind) {
    case GraphKind::ErdosRenyi: return "erdos-renyi-weighted";
    case GraphKind::Clique: return "clique";
    case GraphKind::PlantedCut: return "planted-cut";
  }
  return "?";
}

Graph generate(const GenerateParams& params) {
  if (params.n < 2) throw std::invalid_argument("generate: n must be at least 2");
  if (params.min_weight < 1 || params.max_weight < params.min_weight) {
    throw std::invalid_argument("generate: weight range must satisfy 1 <= min <= max");
  }
  std::mt19937_64 rng(params.seed);
  switch (params.kind) {
    case GraphKind::ErdosRenyi: return erdos_renyi(params, rng);
    case GraphKind::Clique: return clique(params, rng);
    case GraphKind::PlantedCut: return planted_cut(params, rng);
  }
  throw std::invalid_argument("generate: unknown kind");
}

}  // namespace ghcut
