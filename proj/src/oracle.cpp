#include "ghcut/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ghcut {

namespace {

using Mask = std::uint32_t;

struct Scan {
  ExtWeight best = ExtWeight::infinity();
  std::vector<Mask> optimal;

  void offer(Weight value, Mask mask) {
    if (ExtWeight(value) < best) {
      best = value;
      optimal.clear();
    }
    if (ExtWeight(value) == best) optimal.push_back(mask);
  }
};

void guard(const Graph& g, Vertex limit) {
  if (g.num_vertices() > limit) {
    throw SizeGuardError("oracle: " + std::to_string(g.num_vertices()) + " vertices exceed the limit of " +
                         std::to_string(limit));
  }
}

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.num_vertices()) throw std::invalid_argument("oracle: vertex out of range");
}

Mask bit(Vertex v) { return Mask{1} << v; }

Weight mask_cut(const Graph& g, Mask mask) {
  Weight total = 0;
  for (const Edge& e : g.edges()) {
    if (((mask >> e.u) ^ (mask >> e.v)) & 1U) total += e.w;
  }
  return total;
}

// Enumerates every A = fixed_in | (subset of `free_vertices`), skipping
// those rejected by `accept`, and keeps the cheapest.
template <typename Accept>
Scan scan(const Graph& g, Mask fixed_in, Mask free_vertices, Accept&& accept, Exec exec) {
  std::vector<Vertex> free_list;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (free_vertices & bit(v)) free_list.push_back(v);
  }
  const std::uint64_t total = std::uint64_t{1} << free_list.size();
  auto expand = [&](std::uint64_t index) {
    Mask mask = fixed_in;
    for (std::size_t j = 0; j < free_list.size(); ++j) {
      if ((index >> j) & 1U) mask |= bit(free_list[j]);
    }
    return mask;
  };

  if (exec == Exec::Serial) {
    Scan out;
    for (std::uint64_t i = 0; i < total; ++i) {
      const Mask mask = expand(i);
      if (accept(mask)) out.offer(mask_cut(g, mask), mask);
    }
    return out;
  }

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::vector<Scan> partial(threads);
#pragma omp parallel num_threads(threads)
  {
    int id = 0;
#ifdef _OPENMP
    id = omp_get_thread_num();
#endif
    Scan& local = partial[id];
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(total); ++i) {
      const Mask mask = expand(static_cast<std::uint64_t>(i));
      if (accept(mask)) local.offer(mask_cut(g, mask), mask);
    }
  }
  Scan out;
  for (const Scan& p : partial) {
    if (p.best < out.best) {
      out.best = p.best;
      out.optimal.clear();
    }
    if (p.best == out.best && p.best.is_finite()) out.optimal.insert(out.optimal.end(), p.optimal.begin(), p.optimal.end());
  }
  std::sort(out.optimal.begin(), out.optimal.end());
  return out;
}

OracleAnswer to_answer(const Graph& g, const Scan& s) {
  OracleAnswer a;
  a.value = s.best;
  for (Mask mask : s.optimal) {
    Cut c;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (mask & bit(v)) c.side.push_back(v);
    }
    c.value = s.best.value();
    a.witnesses.push_back(std::move(c));
  }
  return a;
}

Mask all_vertices(const Graph& g) { return g.num_vertices() == 32 ? ~Mask{0} : bit(g.num_vertices()) - 1; }

std::vector<std::pair<Mask, Mask>> tree_edge_masks(const SteinerTree& tree) {
  std::vector<std::pair<Mask, Mask>> out;
  for (const auto& [u, v] : tree.edges()) out.emplace_back(bit(u), bit(v));
  return out;
}

OracleAnswer constrained(const Graph& g, const SteinerTree& tree, Vertex s, Mask fixed_in, int k, Exec exec) {
  for (Vertex v : tree.vertices()) check_vertex(g, v);
  const Mask free_vertices = all_vertices(g) & ~fixed_in & ~bit(s);
  const auto edges = tree_edge_masks(tree);
  auto within_budget = [&](Mask mask) {
    int crossing = 0;
    for (const auto& [a, b] : edges) crossing += ((mask & a) != 0) != ((mask & b) != 0);
    return crossing <= k;
  };
  return to_answer(g, scan(g, fixed_in, free_vertices, within_budget, exec));
}

}  // namespace

OracleAnswer brute_lambda(const Graph& g, Vertex s, Vertex t, Exec exec) {
  guard(g, kOracleMaxVertices);
  check_vertex(g, s);
  check_vertex(g, t);
  if (s == t) throw std::invalid_argument("brute_lambda: s and t must differ");
  const Mask free_vertices = all_vertices(g) & ~bit(s) & ~bit(t);
  return to_answer(g, scan(g, bit(t), free_vertices, [](Mask) { return true; }, exec));
}

OracleAnswer brute_lambda_tk(const Graph& g, const SteinerTree& tree, Vertex s, Vertex t, int k, Exec exec) {
  guard(g, kOracleMaxVertices);
  check_vertex(g, s);
  check_vertex(g, t);
  if (s == t) throw std::invalid_argument("brute_lambda_tk: s and t must differ");
  if (!tree.contains(t)) throw std::invalid_argument("brute_lambda_tk: t is not a tree vertex");
  return constrained(g, tree, s, bit(t), k, exec);
}

OracleAnswer brute_eta_tk(const Graph& g, const SteinerTree& tree, Vertex s, Vertex t, int k, Exec exec) {
  guard(g, kOracleMaxVertices);
  check_vertex(g, s);
  check_vertex(g, t);
  if (s == t) throw std::invalid_argument("brute_eta_tk: s and t must differ");
  if (!tree.contains(t)) throw std::invalid_argument("brute_eta_tk: t is not a tree vertex");
  if (!tree.contains(s) || !tree.is_leaf(s)) throw std::invalid_argument("brute_eta_tk: s is not a leaf of the tree");
  const Vertex p = tree.neighbors(s).front();
  return constrained(g, tree, s, bit(t) | bit(p), k, exec);
}

std::vector<IsolatingAnswer> brute_isolating(const Graph& g, std::span<const VertexSet> groups, Exec exec) {
  guard(g, kIsolatingOracleMaxVertices);
  Mask used = 0;
  std::vector<Mask> group_masks;
  for (const VertexSet& group : groups) {
    if (group.empty()) throw std::invalid_argument("brute_isolating: empty group");
    Mask m = 0;
    for (Vertex v : group) {
      check_vertex(g, v);
      m |= bit(v);
    }
    if (m & used) throw std::invalid_argument("brute_isolating: overlapping groups");
    used |= m;
    group_masks.push_back(m);
  }
  const Mask free_vertices = all_vertices(g) & ~used;

  std::vector<IsolatingAnswer> out;
  for (Mask m : group_masks) {
    const Scan s = scan(g, m, free_vertices, [](Mask) { return true; }, exec);
    IsolatingAnswer a{to_answer(g, s), {}};
    Mask minimal = all_vertices(g);
    for (Mask opt : s.optimal) minimal &= opt;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      if (minimal & bit(v)) a.minimal_side.push_back(v);
    }
    if (mask_cut(g, minimal) != s.best.value()) {
      throw std::logic_error("brute_isolating: intersection of minimizers is not optimal");
    }
    out.push_back(std::move(a));
  }
  return out;
}

OracleAnswer brute_steiner_mincut(const Graph& g, std::span<const Vertex> terminals, Exec exec) {
  guard(g, kOracleMaxVertices);
  Mask u = 0;
  for (Vertex v : terminals) {
    check_vertex(g, v);
    u |= bit(v);
  }
  if (std::popcount(u) < 2) throw std::invalid_argument("brute_steiner_mincut: need at least two terminals");
  const Vertex anchor = *std::min_element(terminals.begin(), terminals.end());
  const Mask free_vertices = all_vertices(g) & ~bit(anchor);
  return to_answer(g, scan(g, 0, free_vertices, [u](Mask mask) { return (mask & u) != 0; }, exec));
}

}  // namespace ghcut
