#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "ghcut/graph.hpp"
#include "ghcut/steiner_tree.hpp"

namespace ghcut {

/// Per-vertex candidate values mu(s, v), initially +infinity.
///
/// Updates only ever lower a value. Every finite value is the weight of an
/// actual cut of the graph the table was created for that separates the
/// source from v; with witnesses enabled, that cut is kept (side contains v,
/// excludes the source).
class MuTable {
 public:
  explicit MuTable(Vertex n, bool keep_witnesses = false);

  Vertex size() const { return static_cast<Vertex>(values_.size()); }
  bool keeps_witnesses() const { return keep_witnesses_; }

  ExtWeight value(Vertex v) const { return values_[v]; }
  const std::optional<Cut>& witness(Vertex v) const { return witnesses_[v]; }

  /// Lowers mu(v) to `value` if smaller. Returns whether it changed.
  bool update(Vertex v, Weight value, const std::optional<Cut>& witness = std::nullopt);

  /// Pointwise minimum with a table over the same vertex set.
  void merge(const MuTable& other);

 private:
  bool keep_witnesses_;
  std::vector<ExtWeight> values_;
  std::vector<std::optional<Cut>> witnesses_;
};

enum class Procedure { Tree, Leaf };

struct RecursionCounters {
  std::uint64_t calls = 0;
  std::uint64_t sum_vertices = 0;       // graph vertices per call
  std::uint64_t sum_tree_vertices = 0;  // |V(T)| per call
  std::uint64_t sum_free_edges = 0;     // edges with no contracted endpoint
};

/// Totals over every recursive call, keyed by (procedure, k).
class RecursionStats {
 public:
  void record(Procedure p, int k, std::uint64_t vertices, std::uint64_t tree_vertices, std::uint64_t free_edges);
  void merge(const RecursionStats& other);

  const std::map<std::pair<Procedure, int>, RecursionCounters>& entries() const { return entries_; }
  RecursionCounters total() const;

 private:
  std::map<std::pair<Procedure, int>, RecursionCounters> entries_;
};

struct TreeMincutsOptions {
  /// Pruning repetitions per call: ceil(reps_coeff * log2 n).
  double reps_coeff = 3.0;
  /// Trees with at most this many vertices are solved by one max-flow per
  /// terminal.
  std::size_t base_threshold = 4;
  bool keep_witnesses = false;
};

/// Single-source minimum cuts guided by a Steiner tree.
///
/// For every u in V(T) \ {s} lowers mu(u) so that afterwards
///   lambda(s, u) <= mu(u)                always, and
///   mu(u) <= lambda_{T,k}(s, u)          with high probability,
/// where lambda_{T,k} is the cheapest (s, u)-cut crossing at most k tree edges.
/// `mu` must span g's vertices. Randomness comes only from `seed`.
/// Throws std::invalid_argument for k < 0 or a tree that is not inside g.
void tree_mincuts(const Graph& g, const SteinerTree& t, int k, MuTable& mu, std::uint64_t seed,
                  RecursionStats& stats, const TreeMincutsOptions& options = {});

/// Variant for a source that is a leaf of T with tree neighbour p: the upper
/// bound is eta_{T,k}(s, u), the cheapest k-respecting (s, u)-cut that also
/// separates s from p. Throws std::invalid_argument if the source is not a
/// leaf.
void leaf_mincuts(const Graph& g, const SteinerTree& t, int k, MuTable& mu, std::uint64_t seed,
                  RecursionStats& stats, const TreeMincutsOptions& options = {});

enum class Verdict { Tight, Loose };

/// Decides for each terminal whether its estimate equals lambda(s, t),
/// given estimates that are never below lambda(s, t). Runs tree_mincuts once
/// per guide tree into one shared table. A terminal is reported Loose only
/// when some real cut is cheaper than its estimate, so Loose answers are
/// always correct; Tight answers are correct whenever some guide tree
/// k-respects a minimum cut for that terminal (with high probability).
/// Throws std::invalid_argument if a tree misses a terminal, a tree's source
/// is not s, or an estimate is missing.
std::map<Vertex, Verdict> sstcv_verify(const Graph& g, std::span<const Vertex> terminals, Vertex s,
                                       const std::map<Vertex, Weight>& estimates,
                                       std::span<const SteinerTree> guide_trees, int k, std::uint64_t seed,
                                       RecursionStats* stats = nullptr, const TreeMincutsOptions& options = {});

/// Child seed for a recursive call, from the parent seed, a phase tag and a
/// repetition index (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t phase, std::uint64_t index);

}  // namespace ghcut
