#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ghcut/tree_mincuts.hpp"

namespace ghcut {

struct BenchConfig {
  std::vector<Vertex> sizes;
  int k = 2;
  std::vector<std::uint64_t> seeds{1};
  double reps_coeff = 3.0;
  /// Expected degree of the generated Erdos-Renyi instances.
  double average_degree = 8.0;
};

/// One size of the sweep, averaged over seeds.
struct BenchRow {
  Vertex n = 0;
  double m = 0;
  double tree_size = 0;
  double calls = 0;
  double sum_vertices = 0;
  double sum_free_edges = 0;
  /// sum_vertices / ((n - 1) log^{3k} n log t), logs base 2.
  double vertex_ratio = 0;
  /// sum_free_edges / (m log^{3k} n log t).
  double edge_ratio = 0;
};

/// Runs tree_mincuts on a random connected graph of each size with a random
/// spanning tree rooted at vertex 0, and compares the accumulated recursion
/// sizes against the polylogarithmic bounds.
std::vector<BenchRow> bench_recursion(const BenchConfig& config);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace ghcut
