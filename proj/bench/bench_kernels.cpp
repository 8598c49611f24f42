// Serial reference against the OpenMP path for the three parallel kernels.
#include <benchmark/benchmark.h>

#include <numeric>

#include "ghcut/generators.hpp"
#include "ghcut/gomory_hu.hpp"
#include "ghcut/isolating_cuts.hpp"
#include "ghcut/oracle.hpp"

using namespace ghcut;

namespace {

Graph instance(Vertex n, std::uint64_t seed = 1) {
  GenerateParams p;
  p.n = n;
  p.seed = seed;
  return generate(p);
}

void oracle_scan(benchmark::State& state, Exec exec) {
  const Vertex n = static_cast<Vertex>(state.range(0));
  const Graph g = instance(n);
  VertexSet all(n);
  std::iota(all.begin(), all.end(), 0);
  for (auto _ : state) benchmark::DoNotOptimize(brute_steiner_mincut(g, all, exec));
  state.counters["cuts"] = benchmark::Counter(static_cast<double>(1ULL << (n - 1)), benchmark::Counter::kIsIterationInvariantRate);
}

void verify(benchmark::State& state, bool parallel) {
  const Graph g = instance(static_cast<Vertex>(state.range(0)));
  const GHTree t = build_gusfield(g);
  for (auto _ : state) benchmark::DoNotOptimize(parallel ? verify_gh(g, t) : verify_gh_serial(g, t));
}

void isolate(benchmark::State& state, bool parallel) {
  const Vertex n = static_cast<Vertex>(state.range(0));
  const Graph g = instance(n);
  // Every eighth vertex is its own group.
  std::vector<VertexSet> groups;
  for (Vertex v = 0; v < n; v += 8) groups.push_back({v});
  for (auto _ : state) {
    benchmark::DoNotOptimize(parallel ? isolating_cuts(g, groups) : isolating_cuts_serial(g, groups));
  }
}

}  // namespace

BENCHMARK_CAPTURE(oracle_scan, serial, Exec::Serial)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(oracle_scan, parallel, Exec::Parallel)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(verify, serial, false)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(verify, parallel, true)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(isolate, serial, false)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(isolate, parallel, true)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
