#include <benchmark/benchmark.h>

#include "hiddensums/attack.hpp"
#include "hiddensums/classify.hpp"

using namespace hiddensums;

static void BM_canonical_key(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  std::mt19937_64 rng(33);
  EmbeddedHiddenSum hs(random_standard_hidden_sum(N, 2, rng), random_invertible_matrix(N, rng));
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key_bytes(hs));
}
BENCHMARK(BM_canonical_key)->Arg(4)->Arg(5)->Arg(6);

static void BM_universe_build(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  for (auto _ : state) {
    StratumUniverse u = StratumUniverse::build(N, d);
    benchmark::DoNotOptimize(u.size());
  }
}
BENCHMARK(BM_universe_build)->Args({4, 2})->Args({5, 2})->Args({5, 1})->Unit(benchmark::kMillisecond);

static void BM_classify_all(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ClassTable t = classify_all(N);
    benchmark::DoNotOptimize(t.classes.size());
  }
}
BENCHMARK(BM_classify_all)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
