#include <benchmark/benchmark.h>

#include <random>

#include "gallai/constructions.hpp"
#include "gallai/menger.hpp"
#include "gallai/procedures.hpp"

using namespace gallai;

static void BM_LongestPathsModifiedPetersen(benchmark::State& state) {
  const Graph g = modified_petersen();
  for (auto _ : state) benchmark::DoNotOptimize(longest_paths(g));
}
BENCHMARK(BM_LongestPathsModifiedPetersen);

static void BM_GallaiNumberModifiedPetersen(benchmark::State& state) {
  const Graph g = modified_petersen();
  for (auto _ : state) benchmark::DoNotOptimize(gallai_number(g).tau);
}
BENCHMARK(BM_GallaiNumberModifiedPetersen);

static void BM_LongestCyclesRandom(benchmark::State& state) {
  const Graph g = random_connected(static_cast<int>(state.range(0)), 3, 10, 7);
  for (auto _ : state) benchmark::DoNotOptimize(longest_cycles(g, sets_only({})));
}
BENCHMARK(BM_LongestCyclesRandom)->Arg(10)->Arg(14)->Arg(18);

static void BM_GenericEnumerationTheta(benchmark::State& state) {
  const Graph g = petersen();
  const auto m = *find_pattern("theta");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_maximum(g, m, sets_only({})));
}
BENCHMARK(BM_GenericEnumerationTheta);

static void BM_HittingSet(benchmark::State& state) {
  const int u = static_cast<int>(state.range(0));
  std::mt19937_64 rng(11);
  HittingInstance inst;
  inst.universe = u;
  for (int j = 0; j < 3 * u; ++j) {
    VertexSet s(u);
    for (int x = 0; x < 3; ++x) s.insert(static_cast<Vertex>(rng() % u));
    inst.sets.push_back(s);
  }
  for (auto _ : state) benchmark::DoNotOptimize(min_hitting_set(inst).size());
}
BENCHMARK(BM_HittingSet)->Arg(16)->Arg(32)->Arg(48);

static void BM_MaxConnector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Graph g = random_connected(n, 1, 8, 3);
  VertexSet a(n), b(n);
  for (int i = 0; i < n / 4; ++i) {
    a.insert(i);
    b.insert(n - 1 - i);
  }
  for (auto _ : state) benchmark::DoNotOptimize(max_connector(g, a, b).size());
}
BENCHMARK(BM_MaxConnector)->Arg(30)->Arg(100)->Arg(300);

static void BM_ConnectedGraphGeneration(benchmark::State& state) {
  // the generator caches, so time the canonical form it is built on
  const auto& gs = all_connected_graphs(6);
  for (auto _ : state)
    for (const auto& g : gs) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_ConnectedGraphGeneration);

static void BM_BuildTransversal(benchmark::State& state) {
  const Graph g = modified_petersen();
  const auto k2 = *find_pattern("K2");
  for (auto _ : state) benchmark::DoNotOptimize(build_transversal(g, k2, Threshold::ratio(1, 2)).valid);
}
BENCHMARK(BM_BuildTransversal);
BENCHMARK_MAIN();
