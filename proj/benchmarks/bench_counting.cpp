#include <benchmark/benchmark.h>

#include "isores/counting.hpp"

using namespace isores;

namespace {

XiQuery balanced_query(int sum_b) {
  std::vector<int> b;
  int left = sum_b;
  while (left > 0) {
    int next = std::min(3, left);
    if (left - next == 1) next = left;  // avoid a trailing simple pole
    b.push_back(next);
    left -= next;
  }
  const int a = sum_b - 2;
  return make_xi_query(a / 2, a - a / 2, b);
}

void BM_xi_closed(benchmark::State& state) {
  const XiQuery q = balanced_query(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(xi_closed(q));
}
BENCHMARK(BM_xi_closed)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_xi_oracle(benchmark::State& state) {
  const XiQuery q = balanced_query(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(xi_oracle(q));
}
BENCHMARK(BM_xi_oracle)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_xi_recursion(benchmark::State& state) {
  const XiQuery q = balanced_query(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(xi_recursion_rhs(q, 1));
}
BENCHMARK(BM_xi_recursion)->Arg(8)->Arg(12)->Arg(16);

} // namespace
