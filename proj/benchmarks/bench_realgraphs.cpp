#include <benchmark/benchmark.h>

#include "isores/realgraphs.hpp"

using namespace isores;

namespace {

void BM_zero_graphs_simple(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const Stratum s = validate({1, t - 3}, std::vector<int>(t, 1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_zero_graphs(s, 1));
}
BENCHMARK(BM_zero_graphs_simple)->Arg(5)->Arg(6)->Arg(7);

void BM_saddle_graphs(benchmark::State& state) {
  const Stratum s = parse_mu("2,2,-2,-2,-2");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_saddle_graphs(s, 1));
}
BENCHMARK(BM_saddle_graphs);

void BM_adjacency_components(benchmark::State& state) {
  const Stratum s = parse_mu("2,2,-1,-1,-1,-1,-1,-1");
  for (auto _ : state) benchmark::DoNotOptimize(adjacency_components(s, 1));
}
BENCHMARK(BM_adjacency_components);

} // namespace
