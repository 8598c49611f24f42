#include "ghcut/steiner_tree.hpp"

#include <algorithm>
#include <random>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ghcut {

SteinerTree::SteinerTree(VertexSet vertices, std::vector<TreeEdge> edges, Vertex source)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), source_(source) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw std::invalid_argument("SteinerTree: duplicate vertex");
  }
  if (!contains(source_)) {
    throw std::invalid_argument("SteinerTree: source " + std::to_string(source_) + " is not a tree vertex");
  }
  if (edges_.size() + 1 != vertices_.size()) {
    throw std::invalid_argument("SteinerTree: " + std::to_string(edges_.size()) + " edges cannot form a tree on " +
                                std::to_string(vertices_.size()) + " vertices");
  }

  const std::size_t k = vertices_.size();
  std::vector<std::size_t> count(k + 1, 0);
  for (const auto& [u, v] : edges_) {
    if (!contains(u) || !contains(v) || u == v) {
      throw std::invalid_argument("SteinerTree: edge (" + std::to_string(u) + ", " + std::to_string(v) +
                                  ") does not join two distinct tree vertices");
    }
    ++count[index_of(u) + 1];
    ++count[index_of(v) + 1];
  }
  std::partial_sum(count.begin(), count.end(), count.begin());
  offsets_ = count;
  adjacency_.resize(2 * edges_.size());
  for (const auto& [u, v] : edges_) {
    adjacency_[count[index_of(u)]++] = v;
    adjacency_[count[index_of(v)]++] = u;
  }
  for (std::size_t i = 0; i < k; ++i) std::sort(adjacency_.begin() + offsets_[i], adjacency_.begin() + offsets_[i + 1]);

  // |E| = |V| - 1 plus connectivity makes it a tree.
  std::vector<char> seen(k, 0);
  std::vector<Vertex> stack{source_};
  seen[index_of(source_)] = 1;
  std::size_t visited = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : neighbors(v)) {
      if (!seen[index_of(w)]) {
        seen[index_of(w)] = 1;
        ++visited;
        stack.push_back(w);
      }
    }
  }
  if (visited != k) throw std::invalid_argument("SteinerTree: edges do not connect all tree vertices");
}

bool SteinerTree::contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

std::size_t SteinerTree::index_of(Vertex v) const {
  return static_cast<std::size_t>(std::lower_bound(vertices_.begin(), vertices_.end(), v) - vertices_.begin());
}

std::span<const Vertex> SteinerTree::neighbors(Vertex v) const {
  const std::size_t i = index_of(v);
  return {adjacency_.data() + offsets_[i], adjacency_.data() + offsets_[i + 1]};
}

SteinerTree SteinerTree::induced(std::span<const Vertex> keep) const {
  VertexSet kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  std::vector<TreeEdge> edges;
  for (const auto& [u, v] : edges_) {
    if (std::binary_search(kept.begin(), kept.end(), u) && std::binary_search(kept.begin(), kept.end(), v)) {
      edges.emplace_back(u, v);
    }
  }
  return SteinerTree(std::move(kept), std::move(edges), source_);
}

std::vector<VertexSet> SteinerTree::components_without(Vertex removed) const {
  std::vector<VertexSet> out;
  std::vector<char> seen(size(), 0);
  if (contains(removed)) seen[index_of(removed)] = 1;
  for (Vertex start : vertices_) {
    if (seen[index_of(start)]) continue;
    VertexSet comp;
    std::vector<Vertex> stack{start};
    seen[index_of(start)] = 1;
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : neighbors(v)) {
        if (!seen[index_of(w)]) {
          seen[index_of(w)] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

VertexSet SteinerTree::path(Vertex from, Vertex to) const {
  std::vector<Vertex> parent(size(), -1);
  std::vector<char> seen(size(), 0);
  std::vector<Vertex> stack{to};
  seen[index_of(to)] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : neighbors(v)) {
      if (!seen[index_of(w)]) {
        seen[index_of(w)] = 1;
        parent[index_of(w)] = v;
        stack.push_back(w);
      }
    }
  }
  VertexSet out{from};
  for (Vertex v = from; v != to;) {
    v = parent[index_of(v)];
    out.push_back(v);
  }
  return out;
}

Vertex centroid(const SteinerTree& t) {
  const auto& verts = t.vertices();
  const std::size_t k = verts.size();
  if (k == 0) throw std::invalid_argument("centroid: empty tree");

  // Iterative DFS from the first vertex; subtree sizes in reverse preorder.
  auto idx = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  std::vector<Vertex> order;
  std::vector<Vertex> parent(k, -1);
  std::vector<char> seen(k, 0);
  std::vector<Vertex> stack{verts.front()};
  seen[0] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (Vertex w : t.neighbors(v)) {
      if (!seen[idx(w)]) {
        seen[idx(w)] = 1;
        parent[idx(w)] = v;
        stack.push_back(w);
      }
    }
  }
  std::vector<std::size_t> subtree(k, 1);
  std::vector<std::size_t> largest(k, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t i = idx(*it);
    largest[i] = std::max(largest[i], k - subtree[i]);
    if (parent[i] != -1) {
      const std::size_t p = idx(parent[i]);
      subtree[p] += subtree[i];
      largest[p] = std::max(largest[p], subtree[i]);
    }
  }
  std::size_t best = 0;
  for (std::size_t i = 1; i < k; ++i) {
    if (largest[i] < largest[best]) best = i;
  }
  return verts[best];
}

Decomposition decompose(const SteinerTree& t) {
  if (t.size() < 2) throw std::invalid_argument("decompose: tree needs at least two vertices");
  Decomposition d;
  const Vertex s = t.source();
  d.centroid = centroid(t);
  const Vertex c = d.centroid;

  for (VertexSet& comp : t.components_without(c)) {
    if (!std::binary_search(comp.begin(), comp.end(), s)) d.side_trees.push_back(std::move(comp));
  }
  if (s == c) {
    d.path = {s};
    return d;
  }

  d.path = t.path(s, c);
  const Vertex r1 = d.path[1];
  for (const VertexSet& comp : t.components_without(r1)) {
    if (std::binary_search(comp.begin(), comp.end(), s)) {
      for (Vertex v : comp) {
        if (v != s) d.source_branches.push_back(v);
      }
    }
  }

  std::vector<char> taken(t.size(), 0);
  auto mark = [&](Vertex v) {
    const auto& verts = t.vertices();
    taken[std::lower_bound(verts.begin(), verts.end(), v) - verts.begin()] = 1;
  };
  mark(s);
  mark(c);
  for (Vertex v : d.source_branches) mark(v);
  for (const VertexSet& side : d.side_trees) {
    for (Vertex v : side) mark(v);
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!taken[i]) d.path_region.push_back(t.vertices()[i]);
  }
  return d;
}

std::size_t respects_count(const SteinerTree& t, std::span<const Vertex> side) {
  VertexSet sorted(side.begin(), side.end());
  std::sort(sorted.begin(), sorted.end());
  auto in = [&](Vertex v) { return std::binary_search(sorted.begin(), sorted.end(), v); };
  std::size_t crossing = 0;
  for (const auto& [u, v] : t.edges()) {
    if (in(u) != in(v)) ++crossing;
  }
  return crossing;
}

std::size_t respects_count(const SteinerTree& t, const Cut& cut) { return respects_count(t, cut.side); }

SteinerTree prune_sample(const SteinerTree& t, std::span<const VertexSet> parts, SplitMix64& rng) {
  if (parts.empty()) return t;
  VertexSet removed;
  for (const VertexSet& part : parts) {
    // One raw bit per part keeps the sample stream portable.
    if (rng() & 1U) removed.insert(removed.end(), part.begin(), part.end());
  }
  if (removed.empty()) return t;
  std::sort(removed.begin(), removed.end());
  if (std::binary_search(removed.begin(), removed.end(), t.source())) {
    throw std::logic_error("prune_sample: a part contains the source");
  }
  VertexSet keep;
  std::set_difference(t.vertices().begin(), t.vertices().end(), removed.begin(), removed.end(),
                      std::back_inserter(keep));
  try {
    return t.induced(keep);
  } catch (const std::invalid_argument& e) {
    throw std::logic_error(std::string("prune_sample: pruning disconnects the tree: ") + e.what());
  }
}

SteinerTree random_steiner_tree(VertexSet terminals, Vertex source, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  std::shuffle(terminals.begin(), terminals.end(), rng);
  std::vector<TreeEdge> edges;
  for (std::size_t i = 1; i < terminals.size(); ++i) {
    edges.emplace_back(terminals[rng() % i], terminals[i]);
  }
  return SteinerTree(std::move(terminals), std::move(edges), source);
}

SteinerTree random_spanning_tree(const Graph& g, Vertex source, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::uint64_t, std::size_t>> order;
  for (std::size_t i = 0; i < g.num_edges(); ++i) order.emplace_back(rng(), i);
  std::sort(order.begin(), order.end());

  const Vertex n = g.num_vertices();
  std::vector<Vertex> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](Vertex v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<TreeEdge> edges;
  for (const auto& [priority, i] : order) {
    const Edge& e = g.edges()[i];
    const Vertex a = find(e.u);
    const Vertex b = find(e.v);
    if (a != b) {
      parent[a] = b;
      edges.emplace_back(e.u, e.v);
    }
  }
  VertexSet all(n);
  std::iota(all.begin(), all.end(), 0);
  return SteinerTree(std::move(all), std::move(edges), source);
}

}  // namespace ghcut
