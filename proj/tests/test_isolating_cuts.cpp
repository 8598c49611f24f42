#include <doctest.h>

#include <numeric>
#include <random>

#include "ghcut/isolating_cuts.hpp"
#include "ghcut/maxflow.hpp"
#include "ghcut/oracle.hpp"
#include "support.hpp"

using namespace ghcut;
using namespace ghcut::testing;

namespace {

std::vector<VertexSet> random_groups(std::mt19937_64& rng, Vertex n, std::size_t count, bool singletons) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<VertexSet> groups(count);
  std::size_t next = 0;
  for (auto& grp : groups) grp.push_back(order[next++]);
  if (!singletons) {
    for (; next < order.size(); ++next) {
      const auto r = rng() % (2 * count);
      if (r < count) groups[r].push_back(order[next]);
    }
  }
  for (auto& grp : groups) std::sort(grp.begin(), grp.end());
  return groups;
}

}  // namespace

TEST_CASE("two singleton groups reduce to one max-flow") {
  const Graph g = random_graph(12, 10);
  const std::vector<VertexSet> groups{{2}, {7}};
  const IsolatingResult r = isolating_cuts(g, groups);
  const FlowResult forward = max_flow(g, 2, 7);
  const FlowResult backward = max_flow(g, 7, 2);
  CHECK(r.cuts[0].value == forward.value);
  CHECK(r.cuts[0].side == forward.source_side(10));
  CHECK(r.cuts[1].value == backward.value);
  CHECK(r.cuts[1].side == backward.source_side(10));
}

TEST_CASE("star leaves isolate themselves") {
  const Graph g = star_graph({4, 2, 7, 1});
  const std::vector<VertexSet> groups{{1}, {2}, {3}};
  const IsolatingResult r = isolating_cuts(g, groups);
  for (std::size_t i = 0; i < 3; ++i) CHECK(r.cuts[i].group == i);
  CHECK(r.cuts[0].side == groups[0]);
  CHECK(r.cuts[1].side == groups[1]);
  // Leaf 3 is cheaper to cut off together with the center and leaf 4.
  CHECK(r.cuts[2].side == VertexSet{0, 3, 4});
  CHECK(r.cuts[0].value == 4);
  CHECK(r.cuts[1].value == 2);
  CHECK(r.cuts[2].value == 6);
}

TEST_CASE("isolating cuts match exhaustive search") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Vertex n = 11;
    const Graph g = random_graph(trial + 40, n);
    const bool singletons = trial % 2 == 0;
    const auto groups = random_groups(rng, n, 2 + trial % 4, singletons);
    const IsolatingResult r = isolating_cuts(g, groups);
    const auto truth = brute_isolating(g, groups);
    std::vector<char> owner(n, 0);
    for (std::size_t i = 0; i < groups.size(); ++i) {
      CHECK(ExtWeight(r.cuts[i].value) == truth[i].answer.value);
      CHECK(r.cuts[i].side == truth[i].minimal_side);
      CHECK(cut_value(g, r.cuts[i].side) == r.cuts[i].value);
      for (Vertex v : r.cuts[i].side) {
        CHECK(owner[v] == 0);
        owner[v] = 1;
      }
    }
  }
}

TEST_CASE("serial and parallel kernels agree") {
  std::mt19937_64 rng(8);
  for (Vertex n : {12, 300, 600}) {
    const Graph g = random_graph(n, n);
    const auto groups = random_groups(rng, n, 9, false);
    const IsolatingResult a = isolating_cuts(g, groups);
    const IsolatingResult b = isolating_cuts_serial(g, groups);
    for (std::size_t i = 0; i < groups.size(); ++i) {
      CHECK(a.cuts[i].value == b.cuts[i].value);
      CHECK(a.cuts[i].side == b.cuts[i].side);
    }
  }
}

TEST_CASE("bad groups") {
  const Graph g = random_graph(1, 6);
  CHECK_THROWS_AS(isolating_cuts(g, std::vector<VertexSet>{{0}}), std::invalid_argument);
  CHECK_THROWS_AS(isolating_cuts(g, std::vector<VertexSet>{{0}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(isolating_cuts(g, std::vector<VertexSet>{{0, 1}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(isolating_cuts(g, std::vector<VertexSet>{{0}, {6}}), std::invalid_argument);
}
