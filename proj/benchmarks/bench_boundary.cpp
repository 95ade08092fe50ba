#include <benchmark/benchmark.h>

#include "isores/boundary.hpp"
#include "isores/chambers.hpp"

using namespace isores;

namespace {

Stratum wide_stratum(int p) {
  // p - 1 double poles plus one balancing pole
  std::vector<int> b(p - 1, 2);
  const int a = 2 * (p - 1) + 3 - 2;
  b.push_back(3);
  return validate({a / 2, a - a / 2}, b);
}

void BM_profile(benchmark::State& state) {
  const Stratum s = wide_stratum(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(profile(s));
}
BENCHMARK(BM_profile)->Arg(4)->Arg(6)->Arg(8)->Arg(10);

void BM_walls(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const ChamberLimits limits{p, true};
  for (auto _ : state) benchmark::DoNotOptimize(walls(p, limits));
}
BENCHMARK(BM_walls)->Arg(3)->Arg(5)->Arg(8)->Arg(10);

} // namespace
