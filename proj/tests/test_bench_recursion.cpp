#include <doctest.h>

#include <cmath>

#include "ghcut/bench_recursion.hpp"

using namespace ghcut;

TEST_CASE("k = 0 counts only the top call") {
  BenchConfig config;
  config.sizes = {40};
  config.k = 0;
  const auto rows = bench_recursion(config);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].calls == 1);
  CHECK(rows[0].sum_vertices == 40);
  CHECK(rows[0].tree_size == 40);
}

TEST_CASE("fixed seeds replay the same table") {
  BenchConfig config;
  config.sizes = {16, 32, 48};
  config.k = 2;
  config.seeds = {3, 4};
  const auto a = bench_recursion(config);
  const auto b = bench_recursion(config);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].calls == b[i].calls);
    CHECK(a[i].sum_vertices == b[i].sum_vertices);
    CHECK(a[i].sum_free_edges == b[i].sum_free_edges);
    CHECK(a[i].vertex_ratio == b[i].vertex_ratio);
  }
  CHECK(a[0].calls < a[2].calls);
}

TEST_CASE("sizes must ascend") {
  BenchConfig config;
  config.sizes = {32, 16};
  CHECK_THROWS_AS(bench_recursion(config), std::invalid_argument);
}

TEST_CASE("log-log slope") {
  const std::vector<double> x{2, 4, 8, 16};
  std::vector<double> y;
  for (double v : x) y.push_back(5 * std::pow(v, 1.5));
  CHECK(loglog_slope(x, y) == doctest::Approx(1.5));
  const std::vector<double> flat{7, 7, 7, 7};
  CHECK(loglog_slope(x, flat) == doctest::Approx(0.0));
}
