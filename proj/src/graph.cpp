#include "ghcut/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ghcut {

namespace {

constexpr Weight kMaxTotalWeight = Weight{1} << 62;

void check_vertex(Vertex n, Vertex v, const char* what) {
  if (v < 0 || v >= n) {
    throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                " out of range [0, " + std::to_string(n) + ")");
  }
}

}  // namespace

Graph::Graph(Vertex n, std::span<const Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");

  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      check_vertex(n, e.u, "Graph");
      check_vertex(n, e.v, "Graph");
    }
    if (e.w < 1) {
      throw std::invalid_argument("Graph: edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                  ") has non-positive weight " + std::to_string(e.w));
    }
    if (e.u == e.v) continue;
    normalized.push_back(e.u < e.v ? e : Edge{e.v, e.u, e.w});
  }
  std::sort(normalized.begin(), normalized.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });

  edges_.reserve(normalized.size());
  for (const Edge& e : normalized) {
    if (e.w >= kMaxTotalWeight - total_weight_) {
      throw std::invalid_argument("Graph: total edge weight must stay below 2^62");
    }
    total_weight_ += e.w;
    if (!edges_.empty() && edges_.back().u == e.u && edges_.back().v == e.v) {
      edges_.back().w += e.w;
    } else {
      edges_.push_back(e);
    }
  }

  degree_.assign(n, 0);
  offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
    degree_[e.u] += e.w;
    degree_[e.v] += e.w;
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  // Fill by advancing each vertex's start, then shift the starts back.
  arcs_.resize(2 * edges_.size());
  for (const Edge& e : edges_) {
    arcs_[offsets_[e.u]++] = {e.v, e.w};
    arcs_[offsets_[e.v]++] = {e.u, e.w};
  }
  for (Vertex v = n; v > 0; --v) offsets_[v] = offsets_[v - 1];
  offsets_[0] = 0;
}

Weight cut_value_mask(const Graph& g, std::span<const char> mask) {
  Weight total = 0;
  for (const Edge& e : g.edges()) {
    if ((mask[e.u] != 0) != (mask[e.v] != 0)) total += e.w;
  }
  return total;
}

Weight cut_value(const Graph& g, std::span<const Vertex> side) {
  return make_cut(g, VertexSet(side.begin(), side.end())).value;
}

Cut make_cut(const Graph& g, VertexSet side) {
  const Vertex n = g.num_vertices();
  for (Vertex v : side) check_vertex(n, v, "cut");
  std::sort(side.begin(), side.end());
  side.erase(std::unique(side.begin(), side.end()), side.end());
  if (side.empty() || static_cast<Vertex>(side.size()) == n) {
    throw std::invalid_argument("invalid cut: side must be a non-empty proper subset of V");
  }
  const auto mask = to_mask(n, side);
  return {std::move(side), cut_value_mask(g, mask)};
}

VertexSet complement(Vertex n, std::span<const Vertex> side) {
  auto mask = to_mask(n, side);
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (!mask[v]) out.push_back(v);
  }
  return out;
}

std::vector<char> to_mask(Vertex n, std::span<const Vertex> set) {
  std::vector<char> mask(n, 0);
  for (Vertex v : set) mask[v] = 1;
  return mask;
}

VertexSet from_mask(std::span<const char> mask) {
  VertexSet out;
  for (std::size_t v = 0; v < mask.size(); ++v) {
    if (mask[v]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

VertexSet ContractionMap::lift(std::span<const Vertex> quotient_side) const {
  std::vector<char> in(contracted.size(), 0);
  for (Vertex q : quotient_side) in[q] = 1;
  VertexSet out;
  for (std::size_t v = 0; v < forward.size(); ++v) {
    if (in[forward[v]]) out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

Contraction contract(const Graph& g, std::span<const VertexSet> groups) {
  const Vertex n = g.num_vertices();
  ContractionMap map;
  map.forward.assign(n, -1);
  Vertex next = 0;
  for (const VertexSet& group : groups) {
    if (group.empty()) throw std::invalid_argument("contract: empty group");
    for (Vertex v : group) {
      check_vertex(n, v, "contract");
      if (map.forward[v] != -1) {
        throw std::invalid_argument("contract: vertex " + std::to_string(v) + " appears in more than one group");
      }
      map.forward[v] = next;
    }
    map.contracted.push_back(group.size() > 1);
    ++next;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (map.forward[v] == -1) {
      map.forward[v] = next++;
      map.contracted.push_back(false);
    }
  }

  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    const Vertex a = map.forward[e.u];
    const Vertex b = map.forward[e.v];
    if (a != b) edges.push_back({a, b, e.w});
  }
  return {Graph(next, edges), std::move(map)};
}

bool is_connected(const Graph& g) {
  const Vertex n = g.num_vertices();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  Vertex visited = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const Arc& a : g.neighbors(v)) {
      if (!seen[a.to]) {
        seen[a.to] = 1;
        ++visited;
        stack.push_back(a.to);
      }
    }
  }
  return visited == n;
}

}  // namespace ghcut
