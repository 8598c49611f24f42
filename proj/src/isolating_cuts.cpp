#include "ghcut/isolating_cuts.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "ghcut/maxflow.hpp"

namespace ghcut {

namespace {

// Below this size the per-group flows are too cheap to hand to threads.
constexpr Vertex kParallelMinVertices = 256;

void check_groups(const Graph& g, std::span<const VertexSet> groups) {
  if (groups.size() < 2) throw std::invalid_argument("isolating_cuts: need at least two groups");
  std::vector<char> used(g.num_vertices(), 0);
  for (const VertexSet& group : groups) {
    if (group.empty()) throw std::invalid_argument("isolating_cuts: empty group");
    for (Vertex v : group) {
      if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("isolating_cuts: vertex out of range");
      if (used[v]) {
        throw std::invalid_argument("isolating_cuts: vertex " + std::to_string(v) + " appears in more than one group");
      }
      used[v] = 1;
    }
  }
}

// Minimal isolating side of group i: the minimal minimizer lies inside the
// region of vertices that landed with group i in every bipartition, so
// everything outside the region can serve as the sink.
IsolatingCut solve_region(Dinic& dinic, Vertex n, std::span<const VertexSet> groups, std::size_t i,
                          const std::vector<std::uint32_t>& side_bits) {
  VertexSet outside;
  outside.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    if (side_bits[v] != i) outside.push_back(v);
  }
  IsolatingCut cut{i, {}, dinic.run(groups[i], outside)};
  cut.side.reserve(n - outside.size());
  const auto& reach = dinic.source_side();
  for (Vertex v = 0; v < n; ++v) {
    if (reach[v]) cut.side.push_back(v);
  }
  return cut;
}

IsolatingResult run(const Graph& g, std::span<const VertexSet> groups, bool parallel) {
  check_groups(g, groups);
  const Vertex n = g.num_vertices();
  const std::size_t count = groups.size();
  const int bits = std::bit_width(count - 1);

  // side_bits[v] records, per bipartition, whether v fell on the side of
  // the groups whose index has that bit set.
  Dinic dinic(g);
  std::vector<std::uint32_t> side_bits(n, 0);
  for (int b = 0; b < bits; ++b) {
    VertexSet zero;
    VertexSet one;
    zero.reserve(n);
    one.reserve(n);
    for (std::size_t i = 0; i < count; ++i) {
      VertexSet& half = (i >> b) & 1U ? one : zero;
      half.insert(half.end(), groups[i].begin(), groups[i].end());
    }
    dinic.run(zero, one);
    const auto& reach = dinic.source_side();
    for (Vertex v = 0; v < n; ++v) {
      if (!reach[v]) side_bits[v] |= 1U << b;
    }
  }

  IsolatingResult result;
  result.cuts.resize(count);
  if (parallel && n >= kParallelMinVertices) {
#pragma omp parallel
    {
      Dinic local(g);
#pragma omp for schedule(dynamic)
      for (std::size_t i = 0; i < count; ++i) result.cuts[i] = solve_region(local, n, groups, i, side_bits);
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) result.cuts[i] = solve_region(dinic, n, groups, i, side_bits);
  }
  return result;
}

}  // namespace

IsolatingResult isolating_cuts(const Graph& g, std::span<const VertexSet> groups) { return run(g, groups, true); }

IsolatingResult isolating_cuts_serial(const Graph& g, std::span<const VertexSet> groups) {
  return run(g, groups, false);
}

}  // namespace ghcut
