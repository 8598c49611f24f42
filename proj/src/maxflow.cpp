#include "ghcut/maxflow.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace ghcut {

Dinic::Dinic(const Graph& g) : n_(g.num_vertices()) {
  if (2 * g.num_edges() > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("max_flow: too many edges");
  }
  offsets_.assign(n_ + 1, 0);
  for (Vertex v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + static_cast<std::uint32_t>(g.neighbors(v).size());
  arcs_.resize(offsets_[n_]);
  nodes_.resize(n_);

  // Both copies of an undirected edge appear in the adjacency; pair arc i of
  // u -> v with the matching arc of v -> u by walking edges in order.
  for (Vertex v = 0; v < n_; ++v) nodes_[v].cursor = offsets_[v];
  for (const Edge& e : g.edges()) {
    const std::uint32_t a = nodes_[e.u].cursor++;
    const std::uint32_t b = nodes_[e.v].cursor++;
    arcs_[a] = {e.v, b, e.w, e.w};
    arcs_[b] = {e.u, a, e.w, e.w};
  }
  reach_.resize(n_);
  scratch_.reserve(n_);
  path_.reserve(n_);
}

bool Dinic::build_levels() {
  for (NodeState& node : nodes_) node.level = -1;
  std::vector<Vertex>& queue = scratch_;
  queue.clear();
  for (Vertex s : sources_) {
    nodes_[s].level = 0;
    queue.push_back(s);
  }
  bool reached = false;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Vertex v = queue[i];
    if (nodes_[v].role == kSink) {
      reached = true;
      continue;
    }
    const int next = nodes_[v].level + 1;
    for (std::uint32_t a = offsets_[v]; a < offsets_[v + 1]; ++a) {
      const ArcState& arc = arcs_[a];
      if (arc.residual > 0 && nodes_[arc.head].level < 0) {
        nodes_[arc.head].level = next;
        queue.push_back(arc.head);
      }
    }
  }
  return reached;
}

// One blocking flow out of s, found with an explicit DFS stack of arcs.
Weight Dinic::augment(Vertex s) {
  Weight total = 0;
  std::vector<std::uint32_t>& path = path_;
  path.clear();
  Vertex v = s;
  while (true) {
    if (nodes_[v].role == kSink) {
      Weight bottleneck = std::numeric_limits<Weight>::max();
      for (std::uint32_t a : path) bottleneck = std::min(bottleneck, arcs_[a].residual);
      for (std::uint32_t a : path) {
        arcs_[a].residual -= bottleneck;
        arcs_[arcs_[a].reverse].residual += bottleneck;
      }
      total += bottleneck;
      // Restart from the tail of the first saturated arc.
      std::size_t keep = 0;
      while (arcs_[path[keep]].residual > 0) ++keep;
      path.resize(keep);
      v = path.empty() ? s : arcs_[path.back()].head;
      continue;
    }
    bool advanced = false;
    const int next = nodes_[v].level + 1;
    for (std::uint32_t& a = nodes_[v].cursor; a < offsets_[v + 1]; ++a) {
      const ArcState& arc = arcs_[a];
      if (arc.residual > 0 && nodes_[arc.head].level == next) {
        path.push_back(a);
        v = arc.head;
        advanced = true;
        break;
      }
    }
    if (advanced) continue;
    // Dead end: retreat and retire the arc that led here.
    nodes_[v].level = -1;
    if (path.empty()) break;
    path.pop_back();
    v = path.empty() ? s : arcs_[path.back()].head;
    ++nodes_[v].cursor;
  }
  return total;
}

void Dinic::mark_reachable() {
  std::fill(reach_.begin(), reach_.end(), 0);
  std::vector<Vertex>& stack = scratch_;
  stack.assign(sources_.begin(), sources_.end());
  for (Vertex s : sources_) reach_[s] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (std::uint32_t a = offsets_[v]; a < offsets_[v + 1]; ++a) {
      const ArcState& arc = arcs_[a];
      if (arc.residual > 0 && !reach_[arc.head]) {
        reach_[arc.head] = 1;
        stack.push_back(arc.head);
      }
    }
  }
}

Weight Dinic::run(Vertex s, Vertex t) {
  if (s < 0 || t < 0 || s >= n_ || t >= n_) throw std::invalid_argument("max_flow: vertex out of range");
  if (s == t) throw std::invalid_argument("max_flow: source and sink coincide");
  const Vertex sources[] = {s};
  const Vertex sinks[] = {t};
  return run(sources, sinks);
}

Weight Dinic::run(std::span<const Vertex> sources, std::span<const Vertex> sinks) {
  if (sources.empty() || sinks.empty()) throw std::invalid_argument("max_flow: empty terminal set");
  for (NodeState& node : nodes_) node.role = kPlain;
  for (Vertex v : sources) {
    if (v < 0 || v >= n_) throw std::invalid_argument("max_flow: vertex out of range");
    nodes_[v].role = kSource;
  }
  for (Vertex v : sinks) {
    if (v < 0 || v >= n_) throw std::invalid_argument("max_flow: vertex out of range");
    if (nodes_[v].role == kSource) {
      throw std::invalid_argument("max_flow: vertex " + std::to_string(v) + " is both source and sink");
    }
    nodes_[v].role = kSink;
  }
  sources_.assign(sources.begin(), sources.end());
  for (ArcState& arc : arcs_) arc.residual = arc.capacity;
  Weight flow = 0;
  while (build_levels()) {
    for (Vertex v = 0; v < n_; ++v) nodes_[v].cursor = offsets_[v];
    for (Vertex s : sources_) {
      if (nodes_[s].level == 0) flow += augment(s);
    }
  }
  mark_reachable();
  return flow;
}

namespace {

FlowResult sink_side(const Graph& g, const Dinic& dinic, Weight value) {
  FlowResult result;
  result.value = value;
  result.cut.value = value;
  const auto& reach = dinic.source_side();
  result.cut.side.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (!reach[v]) result.cut.side.push_back(v);
  }
  return result;
}

}  // namespace

FlowResult max_flow(const Graph& g, Vertex s, Vertex t) {
  Dinic dinic(g);
  const Weight value = dinic.run(s, t);
  return sink_side(g, dinic, value);
}

FlowResult max_flow_sets(const Graph& g, std::span<const Vertex> sources, std::span<const Vertex> sinks) {
  Dinic dinic(g);
  const Weight value = dinic.run(sources, sinks);
  return sink_side(g, dinic, value);
}

FlowResult max_flow_multi(const Graph& g, Vertex s, std::span<const Vertex> sinks) {
  if (sinks.empty()) throw std::invalid_argument("max_flow_multi: empty sink set");
  if (std::find(sinks.begin(), sinks.end(), s) != sinks.end()) {
    throw std::invalid_argument("max_flow_multi: source " + std::to_string(s) + " is also a sink");
  }
  const Vertex source[] = {s};
  return max_flow_sets(g, source, sinks);
}

}  // namespace ghcut
