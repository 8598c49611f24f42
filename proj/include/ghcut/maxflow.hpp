#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ghcut/graph.hpp"

namespace ghcut {

/// Minimum s-t cut. `cut.side` is the sink side V \ R, where R is the set of
/// vertices reachable from s in the final residual network; R is the unique
/// inclusion-minimal source side among all minimum cuts.
struct FlowResult {
  Weight value = 0;
  Cut cut;

  VertexSet source_side(Vertex n) const { return complement(n, cut.side); }
};

/// Dinic's blocking-flow algorithm on an undirected graph. Each undirected
/// edge of weight w becomes a pair of opposite arcs, each of capacity w,
/// sharing residual capacity. The network is built once and reused across
/// run() calls, which reset the flow.
class Dinic {
 public:
  explicit Dinic(const Graph& g);

  Weight run(Vertex s, Vertex t);

  /// Maximum flow from a vertex set to a disjoint vertex set, equivalent to
  /// merging each set into one vertex. Throws std::invalid_argument for an
  /// empty or out-of-range set, or a vertex in both.
  Weight run(std::span<const Vertex> sources, std::span<const Vertex> sinks);

  /// Residual reachability from the last run's source (mask over V).
  const std::vector<char>& source_side() const { return reach_; }

 private:
  enum Role : char { kPlain, kSource, kSink };

  // Arc i and arc reverse share one undirected edge of capacity `capacity`.
  struct ArcState {
    Vertex head;
    std::uint32_t reverse;
    Weight capacity;
    Weight residual;
  };

  struct NodeState {
    std::uint32_t cursor;
    int level;
    char role;
  };

  bool build_levels();
  Weight augment(Vertex s);
  void mark_reachable();

  Vertex n_;
  std::vector<std::uint32_t> offsets_;
  std::vector<ArcState> arcs_;
  std::vector<NodeState> nodes_;
  std::vector<char> reach_;
  std::vector<Vertex> sources_;
  // Reused BFS queue / DFS stack and augmenting path.
  std::vector<Vertex> scratch_;
  std::vector<std::uint32_t> path_;
};

/// lambda(s, t) with a minimum cut. Throws std::invalid_argument if s == t or
/// either is out of range. Disconnected s and t give value 0.
FlowResult max_flow(const Graph& g, Vertex s, Vertex t);

/// Minimum cut separating s from every vertex of `sinks`. Throws std::invalid_argument if sinks
/// is empty or contains s.
FlowResult max_flow_multi(const Graph& g, Vertex s, std::span<const Vertex> sinks);

/// Minimum cut separating two disjoint non-empty vertex sets. The returned
/// cut side contains `sinks`; its complement is the minimal side containing
/// `sources`.
FlowResult max_flow_sets(const Graph& g, std::span<const Vertex> sources, std::span<const Vertex> sinks);

}  // namespace ghcut
