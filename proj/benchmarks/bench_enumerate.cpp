#include <benchmark/benchmark.h>

#include "hiddensums/enumerate.hpp"

using namespace hiddensums;

static void BM_count_variety(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(count_variety(n, d));
}
BENCHMARK(BM_count_variety)->Args({3, 3})->Args({4, 2})->Args({5, 2})->Args({4, 3});

static void BM_enumerate_embedded(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) {
    std::uint64_t count = 0;
    for_each_embedded(N, d, kDefaultEmbeddedCap, [&](const EmbeddedHiddenSum&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_enumerate_embedded)->Args({4, 2})->Args({5, 2})->Args({5, 1});

static void BM_subspaces(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) {
    std::uint64_t count = 0;
    for_each_subspace(N, d, [&](const SubspaceFrame&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_subspaces)->Args({6, 3})->Args({8, 4});

BENCHMARK_MAIN();
