#include "ghcut/tree_mincuts.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "ghcut/isolating_cuts.hpp"
#include "ghcut/maxflow.hpp"

namespace ghcut {

MuTable::MuTable(Vertex n, bool keep_witnesses)
    : keep_witnesses_(keep_witnesses), values_(n, ExtWeight::infinity()), witnesses_(keep_witnesses ? n : 0) {}

bool MuTable::update(Vertex v, Weight value, const std::optional<Cut>& witness) {
  if (!(ExtWeight(value) < values_[v])) return false;
  values_[v] = value;
  if (keep_witnesses_) witnesses_[v] = witness;
  return true;
}

void MuTable::merge(const MuTable& other) {
  if (other.size() != size()) throw std::invalid_argument("MuTable::merge: size mismatch");
  for (Vertex v = 0; v < size(); ++v) {
    if (other.values_[v] < values_[v]) {
      values_[v] = other.values_[v];
      if (keep_witnesses_) witnesses_[v] = other.keep_witnesses_ ? other.witnesses_[v] : std::nullopt;
    }
  }
}

void RecursionStats::record(Procedure p, int k, std::uint64_t vertices, std::uint64_t tree_vertices,
                            std::uint64_t free_edges) {
  RecursionCounters& c = entries_[{p, k}];
  ++c.calls;
  c.sum_vertices += vertices;
  c.sum_tree_vertices += tree_vertices;
  c.sum_free_edges += free_edges;
}

void RecursionStats::merge(const RecursionStats& other) {
  for (const auto& [key, c] : other.entries_) {
    RecursionCounters& mine = entries_[key];
    mine.calls += c.calls;
    mine.sum_vertices += c.sum_vertices;
    mine.sum_tree_vertices += c.sum_tree_vertices;
    mine.sum_free_edges += c.sum_free_edges;
  }
}

RecursionCounters RecursionStats::total() const {
  RecursionCounters t;
  for (const auto& [key, c] : entries_) {
    t.calls += c.calls;
    t.sum_vertices += c.sum_vertices;
    t.sum_tree_vertices += c.sum_tree_vertices;
    t.sum_free_edges += c.sum_free_edges;
  }
  return t;
}

std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t phase, std::uint64_t index) {
  auto mix = [](std::uint64_t z) { return SplitMix64(z)(); };
  return mix(mix(mix(parent) ^ phase) ^ index);
}

namespace {

enum Phase : std::uint64_t {
  kPruneSample = 1,
  kPruneRecurse,
  kSourceBranches,
  kSideContracted,
  kBranchesContracted,
  kLeafAtCentroid,
  kTreeAtCentroid,
  kLeafReattached,
  kLeafRegionContracted,
  kLeafMaximizer,
  kPathRegion,
};

/// A (possibly contracted) graph seen by one level of the recursion.
/// contracted[v] marks supernodes; free_edges counts edges avoiding them.
struct Instance {
  const Graph* graph;
  std::vector<char> contracted;
  std::uint64_t free_edges = 0;

  Instance(const Graph& g, std::vector<char> flags) : graph(&g), contracted(std::move(flags)) {
    for (const Edge& e : g.edges()) {
      if (!contracted[e.u] && !contracted[e.v]) ++free_edges;
    }
  }
};

VertexSet set_union(std::initializer_list<const VertexSet*> parts) {
  VertexSet out;
  for (const VertexSet* p : parts) out.insert(out.end(), p->begin(), p->end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Tree edges of t with both endpoints in `keep` (sorted).
std::vector<TreeEdge> edges_within(const SteinerTree& t, const VertexSet& keep) {
  std::vector<TreeEdge> out;
  for (const auto& [u, v] : t.edges()) {
    if (std::binary_search(keep.begin(), keep.end(), u) && std::binary_search(keep.begin(), keep.end(), v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

/// Renames tree vertices through a contraction. Vertices merged into the
/// same node must contribute exactly one tree vertex.
SteinerTree map_tree(const VertexSet& vertices, const std::vector<TreeEdge>& edges, Vertex source,
                     const ContractionMap& map) {
  VertexSet mapped;
  for (Vertex v : vertices) mapped.push_back(map.forward[v]);
  std::vector<TreeEdge> mapped_edges;
  for (const auto& [u, v] : edges) mapped_edges.emplace_back(map.forward[u], map.forward[v]);
  return SteinerTree(std::move(mapped), std::move(mapped_edges), map.forward[source]);
}

class Recursion {
 public:
  Recursion(const TreeMincutsOptions& options, RecursionStats& stats) : options_(options), stats_(stats) {}

  void tree(const Instance& inst, MuTable& mu, const SteinerTree& t, int k, std::uint64_t seed);
  void leaf(const Instance& inst, MuTable& mu, const SteinerTree& t, int k, std::uint64_t seed);

 private:
  void record(Procedure p, const Instance& inst, const SteinerTree& t, int k) {
    stats_.record(p, k, static_cast<std::uint64_t>(inst.graph->num_vertices()), t.size(), inst.free_edges);
  }

  /// A k = 0 call does nothing but get counted; skips building its tree.
  void record_idle(Procedure p, const Instance& inst, std::size_t tree_vertices) {
    stats_.record(p, 0, static_cast<std::uint64_t>(inst.graph->num_vertices()), tree_vertices, inst.free_edges);
  }

  /// Subtree pruning: R samples, each dropping every part independently,
  /// followed by a call of procedure p at level k on the pruned tree.
  void pruned(Procedure p, const Instance& inst, MuTable& mu, const SteinerTree& t, std::span<const VertexSet> parts,
              int k, std::uint64_t seed);

  std::size_t repetitions(Vertex n) const {
    const double r = std::ceil(options_.reps_coeff * std::log2(std::max<double>(n, 2.0)));
    return std::max<std::size_t>(1, static_cast<std::size_t>(r));
  }

  void exact(const Instance& inst, MuTable& mu, const SteinerTree& t);

  /// Merges `group` into one vertex, runs `body` on the quotient with a fresh
  /// table, then folds the quotient values back into `mu`. A quotient value
  /// for a merged vertex is a cut separating the source from every member,
  /// so it is folded into all of them; the quotient source is skipped.
  template <typename Body>
  void contracted(const Instance& inst, MuTable& mu, const VertexSet& group, Vertex source, Body&& body);

  const TreeMincutsOptions& options_;
  RecursionStats& stats_;
};

void Recursion::exact(const Instance& inst, MuTable& mu, const SteinerTree& t) {
  const Graph& g = *inst.graph;
  Dinic dinic(g);
  for (Vertex u : t.vertices()) {
    if (u == t.source()) continue;
    const Weight value = dinic.run(t.source(), u);
    std::optional<Cut> witness;
    if (mu.keeps_witnesses()) {
      witness = Cut{VertexSet{}, value};
      const auto& reach = dinic.source_side();
      for (Vertex v = 0; v < g.num_vertices(); ++v) {
        if (!reach[v]) witness->side.push_back(v);
      }
    }
    mu.update(u, value, witness);
  }
}

void Recursion::pruned(Procedure p, const Instance& inst, MuTable& mu, const SteinerTree& t,
                       std::span<const VertexSet> parts, int k, std::uint64_t seed) {
  if (parts.empty()) return;
  const std::size_t reps = repetitions(inst.graph->num_vertices());
  for (std::size_t r = 0; r < reps; ++r) {
    SplitMix64 rng(derive_seed(seed, kPruneSample, r));
    if (k == 0) {
      // Same draws as prune_sample, one bit per part.
      std::size_t kept = t.size();
      for (const VertexSet& part : parts) {
        if (rng() & 1U) kept -= part.size();
      }
      record_idle(p, inst, kept);
      continue;
    }
    const SteinerTree sample = prune_sample(t, parts, rng);
    if (p == Procedure::Tree) {
      tree(inst, mu, sample, k, derive_seed(seed, kPruneRecurse, r));
    } else {
      leaf(inst, mu, sample, k, derive_seed(seed, kPruneRecurse, r));
    }
  }
}

template <typename Body>
void Recursion::contracted(const Instance& inst, MuTable& mu, const VertexSet& group, Vertex source, Body&& body) {
  const Contraction q = contract(*inst.graph, std::span<const VertexSet>(&group, 1));
  std::vector<char> flags(q.graph.num_vertices(), 0);
  for (Vertex v = 0; v < q.graph.num_vertices(); ++v) flags[v] = q.map.contracted[v];
  for (Vertex v = 0; v < inst.graph->num_vertices(); ++v) {
    if (inst.contracted[v]) flags[q.map.forward[v]] = 1;
  }
  const Instance child(q.graph, std::move(flags));
  MuTable child_mu(q.graph.num_vertices(), mu.keeps_witnesses());
  body(child, child_mu, q.map);

  const Vertex child_source = q.map.forward[source];
  for (Vertex v = 0; v < inst.graph->num_vertices(); ++v) {
    const Vertex image = q.map.forward[v];
    if (image == child_source || child_mu.value(image).is_infinite()) continue;
    std::optional<Cut> witness;
    if (mu.keeps_witnesses() && child_mu.witness(image)) {
      witness = Cut{q.map.lift(child_mu.witness(image)->side), child_mu.witness(image)->value};
    }
    mu.update(v, child_mu.value(image).value(), witness);
  }
}

void Recursion::tree(const Instance& inst, MuTable& mu, const SteinerTree& t, int k, std::uint64_t seed) {
  record(Procedure::Tree, inst, t, k);
  if (k == 0) return;
  if (t.size() <= options_.base_threshold) {
    exact(inst, mu, t);
    return;
  }

  const Graph& g = *inst.graph;
  const Vertex s = t.source();
  const Decomposition d = decompose(t);
  const Vertex c = d.centroid;
  const VertexSet& forest = d.source_branches;
  const VertexSet& middle = d.path_region;

  // Subtree pruning: F and every T_i vanish independently.
  std::vector<VertexSet> parts;
  if (!forest.empty()) parts.push_back(forest);
  parts.insert(parts.end(), d.side_trees.begin(), d.side_trees.end());
  pruned(Procedure::Tree, inst, mu, t, parts, k - 1, seed);
  const VertexSet source_only{s};
  const VertexSet centroid_only{c};
  if (!forest.empty()) {
    if (k == 1) {
      record_idle(Procedure::Tree, inst, forest.size() + 1);
    } else {
      tree(inst, mu, t.induced(set_union({&source_only, &forest})), k - 1, derive_seed(seed, kSourceBranches, 0));
    }
  }

  // Isolating cuts over {s}, {c}, T_0, T_1..T_l and F.
  std::vector<VertexSet> groups{source_only};
  if (c != s) groups.push_back({c});
  const std::size_t first_side = groups.size();
  std::vector<const VertexSet*> sides;
  if (!middle.empty()) sides.push_back(&middle);
  for (const VertexSet& side : d.side_trees) sides.push_back(&side);
  for (const VertexSet* side : sides) groups.push_back(*side);
  const std::size_t forest_group = groups.size();
  if (!forest.empty()) groups.push_back(forest);

  if (groups.size() >= 2) {
    const IsolatingResult iso = isolating_cuts(g, groups);

    // For each T_i: keep W_i, merge the rest (which holds s and c) into the
    // new source, and recurse on T_i hanging off that node.
    for (std::size_t i = 0; i < sides.size(); ++i) {
      const VertexSet& kept = iso.cuts[first_side + i].side;
      const VertexSet outside = complement(g.num_vertices(), kept);
      const VertexSet vertices = set_union({&centroid_only, sides[i]});
      const std::vector<TreeEdge> edges = edges_within(t, vertices);
      contracted(inst, mu, outside, s, [&](const Instance& child, MuTable& child_mu, const ContractionMap& map) {
        SteinerTree sub = map_tree(vertices, edges, c, map);
        tree(child, child_mu, sub, k, derive_seed(seed, kSideContracted, i));
      });
    }
    if (!forest.empty()) {
      const VertexSet outside = complement(g.num_vertices(), iso.cuts[forest_group].side);
      const VertexSet vertices = set_union({&source_only, &forest});
      const std::vector<TreeEdge> edges = edges_within(t, vertices);
      contracted(inst, mu, outside, s, [&](const Instance& child, MuTable& child_mu, const ContractionMap& map) {
        tree(child, child_mu, map_tree(vertices, edges, s, map), k, derive_seed(seed, kBranchesContracted, 0));
      });
    }
  }

  // A cut holding c whose tree crossings all lie on the s-c path region is
  // missed by every branch above. Such a cut contains c and every T_i
  // whole, so merge those into one node and recurse on the path region.
  if (s != c && !middle.empty()) {
    VertexSet far{c};
    for (const VertexSet& side : d.side_trees) far.insert(far.end(), side.begin(), side.end());
    std::sort(far.begin(), far.end());
    const VertexSet vertices = set_union({&source_only, &middle, &centroid_only});
    const std::vector<TreeEdge> edges = edges_within(t, vertices);
    contracted(inst, mu, far, s, [&](const Instance& child, MuTable& child_mu, const ContractionMap& map) {
      tree(child, child_mu, map_tree(vertices, edges, s, map), k, derive_seed(seed, kPathRegion, 0));
    });
  }

  // T^(4): drop F and T_0, hang s directly on c.
  if (s != c) {
    VertexSet vertices{c};
    for (const VertexSet& side : d.side_trees) vertices.insert(vertices.end(), side.begin(), side.end());
    std::sort(vertices.begin(), vertices.end());
    std::vector<TreeEdge> edges = edges_within(t, vertices);
    edges.emplace_back(s, c);
    vertices.insert(std::lower_bound(vertices.begin(), vertices.end(), s), s);
    const SteinerTree hung(vertices, edges, s);
    leaf(inst, mu, hung, k, derive_seed(seed, kLeafAtCentroid, 0));
    tree(inst, mu, hung, k - 1, derive_seed(seed, kTreeAtCentroid, 0));
  }
}

void Recursion::leaf(const Instance& inst, MuTable& mu, const SteinerTree& t, int k, std::uint64_t seed) {
  record(Procedure::Leaf, inst, t, k);
  if (k == 0) return;
  const Vertex s = t.source();
  if (t.size() <= options_.base_threshold) {
    exact(inst, mu, t);
    return;
  }
  const Vertex c = centroid(t);
  if (c == s) {
    exact(inst, mu, t);
    return;
  }

  const Graph& g = *inst.graph;
  std::vector<VertexSet> comps = t.components_without(c);
  const auto home = std::find_if(comps.begin(), comps.end(),
                                 [&](const VertexSet& comp) { return std::binary_search(comp.begin(), comp.end(), s); });
  const VertexSet source_comp = std::move(*home);
  comps.erase(home);
  const std::vector<VertexSet>& sides = comps;

  // Subtree pruning over T_1..T_l; T_0 (and so the leaf s) always stays.
  pruned(Procedure::Leaf, inst, mu, t, sides, k - 1, seed);

  // T^(2): remove T_0 and reattach s at c.
  if (k == 1) {
    record_idle(Procedure::Tree, inst, t.size() - source_comp.size() + 1);
  } else {
    VertexSet rest;
    std::set_difference(t.vertices().begin(), t.vertices().end(), source_comp.begin(), source_comp.end(),
                        std::back_inserter(rest));
    std::vector<TreeEdge> edges = edges_within(t, rest);
    edges.emplace_back(s, c);
    rest.insert(std::lower_bound(rest.begin(), rest.end(), s), s);
    tree(inst, mu, SteinerTree(rest, edges, s), k - 1, derive_seed(seed, kLeafReattached, 0));
  }

  // Isolating cuts over {s}, {c}, T_1..T_l and T_0 \ {s}.
  VertexSet region;
  for (Vertex v : source_comp) {
    if (v != s) region.push_back(v);
  }
  std::vector<VertexSet> groups{{s}, {c}};
  groups.insert(groups.end(), sides.begin(), sides.end());
  const std::size_t region_group = groups.size();
  if (!region.empty()) groups.push_back(region);
  const IsolatingResult iso = isolating_cuts(g, groups);

  if (!region.empty()) {
    const VertexSet outside = complement(g.num_vertices(), iso.cuts[region_group].side);
    const std::vector<TreeEdge> edges = edges_within(t, source_comp);
    contracted(inst, mu, outside, s, [&](const Instance& child, MuTable& child_mu, const ContractionMap& map) {
      leaf(child, child_mu, map_tree(source_comp, edges, s, map), k, derive_seed(seed, kLeafRegionContracted, 0));
    });
  }

  // Same gap as in the tree case: c and every T_i inside the cut, all tree
  // crossings in T_0.
  if (!region.empty() && !sides.empty()) {
    VertexSet far{c};
    for (const VertexSet& side : sides) far.insert(far.end(), side.begin(), side.end());
    std::sort(far.begin(), far.end());
    const VertexSet centroid_only{c};
    const VertexSet vertices = set_union({&source_comp, &centroid_only});
    const std::vector<TreeEdge> edges = edges_within(t, vertices);
    contracted(inst, mu, far, s, [&](const Instance& child, MuTable& child_mu, const ContractionMap& map) {
      leaf(child, child_mu, map_tree(vertices, edges, s, map), k, derive_seed(seed, kPathRegion, 0));
    });
  }

  if (sides.empty()) return;

  // One max-flow from s to c and all of T_1..T_l together.
  VertexSet sinks{c};
  for (const VertexSet& side : sides) sinks.insert(sinks.end(), side.begin(), side.end());
  const FlowResult joint = max_flow_multi(g, s, sinks);
  for (Vertex v : sinks) {
    mu.update(v, joint.value, mu.keeps_witnesses() ? std::optional<Cut>(joint.cut) : std::nullopt);
  }

  // Only the side tree holding the current maximiser of mu is recursed on.
  std::size_t chosen = 0;
  Vertex z = -1;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    for (Vertex v : sides[i]) {
      if (z == -1 || mu.value(v) > mu.value(z) || (mu.value(v) == mu.value(z) && v < z)) {
        z = v;
        chosen = i;
      }
    }
  }

  VertexSet merged{c};
  for (std::size_t i = 0; i < sides.size(); ++i) {
    if (i == chosen) continue;
    const VertexSet& w = iso.cuts[2 + i].side;
    merged.insert(merged.end(), w.begin(), w.end());
  }
  if (!region.empty()) {
    const VertexSet& w = iso.cuts[region_group].side;
    merged.insert(merged.end(), w.begin(), w.end());
  }
  std::sort(merged.begin(), merged.end());

  const VertexSet& kept_side = sides[chosen];
  VertexSet vertices{c};
  vertices.insert(vertices.end(), kept_side.begin(), kept_side.end());
  std::sort(vertices.begin(), vertices.end());
  std::vector<TreeEdge> edges = edges_within(t, vertices);
  edges.emplace_back(s, c);
  vertices.insert(std::lower_bound(vertices.begin(), vertices.end(), s), s);

  contracted(inst, mu, merged, s, [&](const Instance& child, MuTable& child_mu, const ContractionMap& map) {
    const SteinerTree sub = map_tree(vertices, edges, s, map);
    // Small trees may not shrink here; solve those exactly instead of looping.
    if (sub.size() >= t.size()) {
      exact(child, child_mu, sub);
    } else {
      leaf(child, child_mu, sub, k, derive_seed(seed, kLeafMaximizer, 0));
    }
  });
}

void check_inputs(const Graph& g, const SteinerTree& t, int k, const MuTable& mu) {
  if (k < 0) throw std::invalid_argument("tree_mincuts: k must be non-negative");
  if (t.vertices().front() < 0 || t.vertices().back() >= g.num_vertices()) {
    throw std::invalid_argument("tree_mincuts: tree vertex outside the graph");
  }
  if (mu.size() != g.num_vertices()) throw std::invalid_argument("tree_mincuts: table size differs from graph");
}

}  // namespace

void tree_mincuts(const Graph& g, const SteinerTree& t, int k, MuTable& mu, std::uint64_t seed,
                  RecursionStats& stats, const TreeMincutsOptions& options) {
  check_inputs(g, t, k, mu);
  Recursion rec(options, stats);
  const Instance root(g, std::vector<char>(g.num_vertices(), 0));
  rec.tree(root, mu, t, k, seed);
}

void leaf_mincuts(const Graph& g, const SteinerTree& t, int k, MuTable& mu, std::uint64_t seed,
                  RecursionStats& stats, const TreeMincutsOptions& options) {
  check_inputs(g, t, k, mu);
  if (t.size() >= 2 && !t.is_leaf(t.source())) {
    throw std::invalid_argument("leaf_mincuts: source " + std::to_string(t.source()) + " is not a leaf");
  }
  Recursion rec(options, stats);
  const Instance root(g, std::vector<char>(g.num_vertices(), 0));
  rec.leaf(root, mu, t, k, seed);
}

std::map<Vertex, Verdict> sstcv_verify(const Graph& g, std::span<const Vertex> terminals, Vertex s,
                                       const std::map<Vertex, Weight>& estimates,
                                       std::span<const SteinerTree> guide_trees, int k, std::uint64_t seed,
                                       RecursionStats* stats, const TreeMincutsOptions& options) {
  for (const SteinerTree& t : guide_trees) {
    if (t.source() != s) throw std::invalid_argument("sstcv_verify: guide tree source differs from s");
    for (Vertex u : terminals) {
      if (!t.contains(u)) {
        throw std::invalid_argument("sstcv_verify: guide tree does not span terminal " + std::to_string(u));
      }
    }
  }
  for (Vertex u : terminals) {
    if (u != s && !estimates.contains(u)) {
      throw std::invalid_argument("sstcv_verify: no estimate for terminal " + std::to_string(u));
    }
  }

  RecursionStats local;
  MuTable mu(g.num_vertices());
  for (std::size_t i = 0; i < guide_trees.size(); ++i) {
    tree_mincuts(g, guide_trees[i], k, mu, derive_seed(seed, 0x55c7c0ULL, i), stats ? *stats : local, options);
  }

  std::map<Vertex, Verdict> out;
  for (Vertex u : terminals) {
    if (u == s) continue;
    out[u] = mu.value(u) < ExtWeight(estimates.at(u)) ? Verdict::Loose : Verdict::Tight;
  }
  return out;
}

}  // namespace ghcut
