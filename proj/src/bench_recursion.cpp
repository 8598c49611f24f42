#include "ghcut/bench_recursion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ghcut/generators.hpp"

namespace ghcut {

std::vector<BenchRow> bench_recursion(const BenchConfig& config) {
  if (!std::is_sorted(config.sizes.begin(), config.sizes.end())) {
    throw std::invalid_argument("bench_recursion: sizes must be ascending");
  }
  if (config.seeds.empty()) throw std::invalid_argument("bench_recursion: need at least one seed");

  std::vector<BenchRow> rows;
  for (Vertex n : config.sizes) {
    BenchRow row;
    row.n = n;
    for (std::uint64_t seed : config.seeds) {
      GenerateParams params;
      params.kind = GraphKind::ErdosRenyi;
      params.n = n;
      params.seed = seed;
      params.edge_probability = std::min(1.0, config.average_degree / std::max(1, n - 1));
      const Graph g = generate(params);
      const SteinerTree t = random_spanning_tree(g, 0, derive_seed(seed, 0xbe4c, static_cast<std::uint64_t>(n)));

      RecursionStats stats;
      MuTable mu(n);
      TreeMincutsOptions options;
      options.reps_coeff = config.reps_coeff;
      tree_mincuts(g, t, config.k, mu, seed, stats, options);

      const RecursionCounters total = stats.total();
      const double log_n = std::log2(static_cast<double>(n));
      const double log_t = std::max(1.0, std::log2(static_cast<double>(t.size())));
      const double poly = std::pow(log_n, 3.0 * config.k) * log_t;
      const double m = static_cast<double>(g.num_edges());
      row.m += m;
      row.tree_size += static_cast<double>(t.size());
      row.calls += static_cast<double>(total.calls);
      row.sum_vertices += static_cast<double>(total.sum_vertices);
      row.sum_free_edges += static_cast<double>(total.sum_free_edges);
      row.vertex_ratio += static_cast<double>(total.sum_vertices) / ((n - 1) * poly);
      row.edge_ratio += static_cast<double>(total.sum_free_edges) / (m * poly);
    }
    const double count = static_cast<double>(config.seeds.size());
    row.m /= count;
    row.tree_size /= count;
    row.calls /= count;
    row.sum_vertices /= count;
    row.sum_free_edges /= count;
    row.vertex_ratio /= count;
    row.edge_ratio /= count;
    rows.push_back(row);
  }
  return rows;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("loglog_slope: need >= 2 paired points");
  double mx = 0;
  double my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0;
  double sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

}  // namespace ghcut
