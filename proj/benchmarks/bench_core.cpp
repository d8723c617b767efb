#include <benchmark/benchmark.h>

#include <string>

#include "wonderful/graph_io.hpp"
#include "wonderful/kclass.hpp"

namespace {

wonderful::Graph complete(int n) { return wonderful::builtin_graph("complete:" + std::to_string(n)); }

void BM_EnumerateNests(benchmark::State& state) {
  const auto b = wonderful::building_set(complete(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(wonderful::enumerate_nests(b));
}
BENCHMARK(BM_EnumerateNests)->DenseRange(3, 5);

void BM_WonderfulClass(benchmark::State& state) {
  const auto g = complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wonderful::wonderful_class(g, 4));
}
BENCHMARK(BM_WonderfulClass)->DenseRange(3, 5);

void BM_ConfClass(benchmark::State& state) {
  const auto g = wonderful::builtin_graph("cycle:" + std::to_string(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wonderful::conf_class(g));
}
BENCHMARK(BM_ConfClass)->DenseRange(4, 12, 4);

void BM_ConnectedInducedSubgraphs(benchmark::State& state) {
  const auto g = complete(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wonderful::enumerate_connected_induced(g));
}
BENCHMARK(BM_ConnectedInducedSubgraphs)->DenseRange(6, 12, 3);

}  // namespace

BENCHMARK_MAIN();
