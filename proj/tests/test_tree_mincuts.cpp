#include <doctest.h>

#include <numeric>
#include <random>

#include "ghcut/maxflow.hpp"
#include "ghcut/oracle.hpp"
#include "ghcut/tree_mincuts.hpp"
#include "support.hpp"

using namespace ghcut;
using namespace ghcut::testing;

namespace {

struct Case {
  Graph g;
  SteinerTree t;
  int k;
};

Case random_case(std::uint64_t seed, bool leaf_source) {
  std::mt19937_64 rng(seed);
  const Vertex n = 6 + static_cast<Vertex>(rng() % 7);
  Graph g = random_graph(seed * 31 + 7, n);
  const VertexSet terms = random_subset(rng, n, 3);
  const Vertex s = terms[rng() % terms.size()];
  SteinerTree t = leaf_source ? random_leaf_tree(terms, s, rng()) : random_steiner_tree(terms, s, rng());
  return {std::move(g), std::move(t), 2 + static_cast<int>(seed % 3)};
}

// Every finite value is backed by a real cut of that value separating s from u.
void check_witnesses(const Graph& g, const SteinerTree& t, const MuTable& mu) {
  for (Vertex u : t.vertices()) {
    if (u == t.source() || mu.value(u).is_infinite()) continue;
    REQUIRE(mu.witness(u).has_value());
    const Cut& w = *mu.witness(u);
    CHECK(std::binary_search(w.side.begin(), w.side.end(), u));
    CHECK_FALSE(std::binary_search(w.side.begin(), w.side.end(), t.source()));
    CHECK(ExtWeight(cut_value(g, w.side)) == mu.value(u));
  }
}

}  // namespace

TEST_CASE("k = 0 does nothing") {
  const Case c = random_case(1, false);
  MuTable mu(c.g.num_vertices());
  RecursionStats stats;
  tree_mincuts(c.g, c.t, 0, mu, 1, stats);
  for (Vertex v = 0; v < c.g.num_vertices(); ++v) CHECK(mu.value(v).is_infinite());
  CHECK(stats.total().calls == 1);
}

TEST_CASE("small trees are solved exactly") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = random_graph(seed, 9);
    const SteinerTree t = random_steiner_tree({0, 3, 5, 8}, 3, seed);
    MuTable mu(9);
    RecursionStats stats;
    tree_mincuts(g, t, 1, mu, seed, stats);
    for (Vertex u : {0, 5, 8}) CHECK(mu.value(u) == ExtWeight(max_flow(g, 3, u).value));
    CHECK(mu.value(1).is_infinite());

    const SteinerTree edge({2, 7}, {{2, 7}}, 2);
    MuTable leaf_mu(9);
    leaf_mincuts(g, edge, 3, leaf_mu, seed, stats);
    CHECK(leaf_mu.value(7) == ExtWeight(max_flow(g, 2, 7).value));
  }
}

TEST_CASE("bad arguments") {
  const Graph g = random_graph(2, 6);
  const SteinerTree t = random_steiner_tree({0, 1, 2, 3, 4, 5}, 0, 2);
  MuTable mu(6);
  RecursionStats stats;
  CHECK_THROWS_AS(tree_mincuts(g, t, -1, mu, 1, stats), std::invalid_argument);
  MuTable short_mu(5);
  CHECK_THROWS_AS(tree_mincuts(g, t, 2, short_mu, 1, stats), std::invalid_argument);
  const SteinerTree outside({0, 9}, {{0, 9}}, 0);
  CHECK_THROWS_AS(tree_mincuts(g, outside, 2, mu, 1, stats), std::invalid_argument);
  const SteinerTree middle({0, 1, 2}, {{0, 1}, {0, 2}}, 0);
  CHECK_THROWS_AS(leaf_mincuts(g, middle, 2, mu, 1, stats), std::invalid_argument);
}

TEST_CASE("tree_mincuts lands between lambda and lambda_T,k") {
  int runs = 0;
  int covered = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Case c = random_case(seed, false);
    const Vertex s = c.t.source();
    for (std::uint64_t run = 0; run < 3; ++run) {
      MuTable mu(c.g.num_vertices(), true);
      RecursionStats stats;
      tree_mincuts(c.g, c.t, c.k, mu, run * 1000 + seed, stats);
      check_witnesses(c.g, c.t, mu);
      bool all = true;
      for (Vertex u : c.t.vertices()) {
        if (u == s) continue;
        CHECK(brute_lambda(c.g, s, u).value <= mu.value(u));
        all &= mu.value(u) <= brute_lambda_tk(c.g, c.t, s, u, c.k).value;
      }
      ++runs;
      covered += all;
    }
  }
  CHECK(covered >= runs * 95 / 100);
}

TEST_CASE("leaf_mincuts lands between lambda and eta_T,k") {
  int runs = 0;
  int covered = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const Case c = random_case(seed + 100, true);
    const Vertex s = c.t.source();
    for (std::uint64_t run = 0; run < 3; ++run) {
      MuTable mu(c.g.num_vertices(), true);
      RecursionStats stats;
      leaf_mincuts(c.g, c.t, c.k, mu, run * 1000 + seed, stats);
      check_witnesses(c.g, c.t, mu);
      bool all = true;
      for (Vertex u : c.t.vertices()) {
        if (u == s) continue;
        CHECK(brute_lambda(c.g, s, u).value <= mu.value(u));
        all &= mu.value(u) <= brute_eta_tk(c.g, c.t, s, u, c.k).value;
      }
      ++runs;
      covered += all;
    }
  }
  CHECK(covered >= runs * 95 / 100);
}

TEST_CASE("cuts crossing only the path between source and centroid are found") {
  // Every minimum 2-respecting cut for some terminal holds the centroid and
  // all subtrees beyond it, with both crossings between s and c.
  const std::vector<Edge> edges{{0, 3, 1}, {0, 4, 10}, {0, 5, 10}, {1, 5, 4}, {1, 6, 9}, {1, 7, 2},
                                {2, 4, 4}, {2, 5, 2},  {2, 7, 8},  {2, 8, 7}, {3, 4, 10}, {3, 7, 9},
                                {4, 5, 8}, {4, 7, 10}, {4, 8, 3},  {5, 8, 8}, {6, 8, 4},  {7, 8, 2}};
  const Graph g(9, edges);
  const SteinerTree t({0, 1, 2, 3, 4, 5, 6, 7, 8}, {{4, 2}, {2, 1}, {2, 5}, {5, 7}, {7, 0}, {5, 3}, {2, 8}, {2, 6}}, 0);
  REQUIRE(decompose(t).centroid == 2);
  REQUIRE(decompose(t).path_region == VertexSet{3, 5, 7});
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    MuTable mu(9);
    RecursionStats stats;
    tree_mincuts(g, t, 2, mu, seed, stats);
    for (Vertex u = 1; u < 9; ++u) CHECK(mu.value(u) <= brute_lambda_tk(g, t, 0, u, 2).value);
  }
}

TEST_CASE("leaf variant of the path gap") {
  const std::vector<Edge> edges{{0, 1, 8},  {0, 4, 1}, {0, 6, 1}, {0, 7, 7}, {1, 2, 10}, {1, 3, 2},
                                {1, 7, 1},  {2, 3, 8}, {2, 4, 6}, {2, 5, 4}, {3, 6, 6},  {4, 6, 3}};
  const Graph g(8, edges);
  const SteinerTree t({0, 1, 3, 5, 6, 7}, {{1, 3}, {3, 7}, {1, 6}, {1, 5}, {0, 3}}, 0);
  std::vector<ExtWeight> bound(8);
  for (Vertex u : t.vertices()) {
    if (u != 0) bound[u] = brute_eta_tk(g, t, 0, u, 2).value;
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    MuTable mu(8);
    RecursionStats stats;
    leaf_mincuts(g, t, 2, mu, seed, stats);
    for (Vertex u : t.vertices()) {
      if (u != 0) CHECK(mu.value(u) <= bound[u]);
    }
  }
}

TEST_CASE("larger k never raises a value") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Case c = random_case(seed + 400, false);
    std::vector<MuTable> by_k;
    for (int k = 1; k <= 4; ++k) {
      by_k.emplace_back(c.g.num_vertices());
      RecursionStats stats;
      tree_mincuts(c.g, c.t, k, by_k.back(), seed, stats);
    }
    for (int k = 1; k < 4; ++k) {
      for (Vertex u : c.t.vertices()) CHECK(by_k[k].value(u) <= by_k[k - 1].value(u));
    }
  }
}

TEST_CASE("a fixed seed replays exactly") {
  const Case c = random_case(77, false);
  MuTable a(c.g.num_vertices());
  MuTable b(c.g.num_vertices());
  RecursionStats sa;
  RecursionStats sb;
  tree_mincuts(c.g, c.t, 3, a, 5, sa);
  tree_mincuts(c.g, c.t, 3, b, 5, sb);
  for (Vertex v = 0; v < c.g.num_vertices(); ++v) CHECK(a.value(v) == b.value(v));
  REQUIRE(sa.entries().size() == sb.entries().size());
  for (const auto& [key, counters] : sa.entries()) {
    CHECK(sb.entries().at(key).calls == counters.calls);
    CHECK(sb.entries().at(key).sum_vertices == counters.sum_vertices);
  }
  CHECK(derive_seed(5, 1, 2) == derive_seed(5, 1, 2));
  CHECK(derive_seed(5, 1, 2) != derive_seed(5, 1, 3));
  CHECK(derive_seed(5, 1, 2) != derive_seed(5, 2, 2));
}

TEST_CASE("recursion statistics") {
  const Case c = random_case(9, false);
  RecursionStats stats;
  MuTable mu(c.g.num_vertices());
  tree_mincuts(c.g, c.t, 2, mu, 1, stats);
  const auto& top = stats.entries().at({Procedure::Tree, 2});
  CHECK(top.calls >= 1);
  std::uint64_t calls = 0;
  for (const auto& [key, counters] : stats.entries()) {
    CHECK(key.second >= 0);
    CHECK(key.second <= 2);
    CHECK(counters.sum_free_edges <= counters.calls * c.g.num_edges());
    calls += counters.calls;
  }
  CHECK(calls == stats.total().calls);

  RecursionStats twice = stats;
  twice.merge(stats);
  CHECK(twice.total().calls == 2 * calls);
}

TEST_CASE("MuTable only moves down") {
  MuTable mu(3, true);
  CHECK(mu.update(1, 10, Cut{{1}, 10}));
  CHECK_FALSE(mu.update(1, 12));
  CHECK(mu.value(1) == ExtWeight(10));
  CHECK(mu.update(1, 4, Cut{{1, 2}, 4}));
  CHECK(mu.witness(1)->side == VertexSet{1, 2});
  MuTable other(3);
  other.update(2, 5);
  mu.merge(other);
  CHECK(mu.value(2) == ExtWeight(5));
  CHECK(mu.value(1) == ExtWeight(4));
  CHECK(mu.value(0).is_infinite());
  CHECK_THROWS_AS(mu.merge(MuTable(4)), std::invalid_argument);
}

TEST_CASE("sstcv on tiny graphs with exact estimates") {
  const Graph g = random_graph(3, 4);
  const SteinerTree t = random_steiner_tree({0, 1, 2, 3}, 0, 3);
  std::map<Vertex, Weight> estimates;
  for (Vertex u = 1; u < 4; ++u) estimates[u] = max_flow(g, 0, u).value;
  const VertexSet terminals{0, 1, 2, 3};
  const std::vector<SteinerTree> trees{t};
  const auto verdicts = sstcv_verify(g, terminals, 0, estimates, trees, 3, 1);
  for (const auto& [u, v] : verdicts) CHECK(v == Verdict::Tight);
}

TEST_CASE("sstcv flags an inflated estimate") {
  std::mt19937_64 rng(41);
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 60 && checked < 10; ++seed) {
    const Vertex n = 9;
    const Graph g = random_graph(seed + 2000, n);
    VertexSet all(n);
    std::iota(all.begin(), all.end(), 0);
    const SteinerTree t = random_spanning_tree(g, 0, seed);
    // Pick a terminal whose minimum cut 2-respects the tree.
    Vertex target = -1;
    for (Vertex u = 1; u < n && target < 0; ++u) {
      if (brute_lambda_tk(g, t, 0, u, 2).value == brute_lambda(g, 0, u).value) target = u;
    }
    if (target < 0) continue;
    std::map<Vertex, Weight> estimates;
    for (Vertex u = 1; u < n; ++u) estimates[u] = brute_lambda(g, 0, u).value.value();
    estimates[target] += 1;
    const std::vector<SteinerTree> trees{t};
    const auto verdicts = sstcv_verify(g, all, 0, estimates, trees, 2, seed);
    CHECK(verdicts.at(target) == Verdict::Loose);
    ++checked;
  }
  CHECK(checked == 10);
}

TEST_CASE("sstcv agrees with direct comparison") {
  std::mt19937_64 rng(43);
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const Vertex n = 10;
    const Graph g = random_graph(seed + 3000, n);
    VertexSet all(n);
    std::iota(all.begin(), all.end(), 0);
    std::vector<SteinerTree> trees;
    for (std::uint64_t i = 0; i < 3; ++i) trees.push_back(random_spanning_tree(g, 0, seed * 10 + i));
    std::map<Vertex, Weight> estimates;
    std::map<Vertex, Weight> exact;
    for (Vertex u = 1; u < n; ++u) {
      exact[u] = brute_lambda(g, 0, u).value.value();
      estimates[u] = exact[u] + static_cast<Weight>(rng() % 2);
    }
    const auto verdicts = sstcv_verify(g, all, 0, estimates, trees, 4, seed);
    for (Vertex u = 1; u < n; ++u) {
      // Loose answers are always right; tight ones need a respecting tree.
      if (verdicts.at(u) == Verdict::Loose) CHECK(estimates[u] > exact[u]);
      bool promised = false;
      for (const SteinerTree& t : trees) promised |= brute_lambda_tk(g, t, 0, u, 4).value == ExtWeight(exact[u]);
      if (promised) CHECK((verdicts.at(u) == Verdict::Tight) == (estimates[u] == exact[u]));
    }
  }
}

TEST_CASE("sstcv input checks") {
  const Graph g = random_graph(5, 6);
  const VertexSet terminals{0, 1, 2};
  const std::map<Vertex, Weight> estimates{{1, 3}, {2, 3}};
  const std::vector<SteinerTree> misses{SteinerTree({0, 1}, {{0, 1}}, 0)};
  CHECK_THROWS_AS(sstcv_verify(g, terminals, 0, estimates, misses, 2, 1), std::invalid_argument);
  const std::vector<SteinerTree> wrong_source{SteinerTree({0, 1, 2}, {{0, 1}, {1, 2}}, 1)};
  CHECK_THROWS_AS(sstcv_verify(g, terminals, 0, estimates, wrong_source, 2, 1), std::invalid_argument);
  const std::vector<SteinerTree> fine{SteinerTree({0, 1, 2}, {{0, 1}, {1, 2}}, 0)};
  const std::map<Vertex, Weight> partial{{1, 3}};
  CHECK_THROWS_AS(sstcv_verify(g, terminals, 0, partial, fine, 2, 1), std::invalid_argument);
}
