#include <benchmark/benchmark.h>

#include "hiddensums/attack.hpp"
#include "hiddensums/tb_cipher.hpp"

using namespace hiddensums;

// Full reconstruction (N+1 queries plus the Gaussian inversion) against a
// synthetic affine oracle; the trapdoor claim is cubic growth in N.
static void BM_mount_attack(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  std::mt19937_64 rng(0xa77ac4 + N);
  EmbeddedHiddenSum hs = EmbeddedHiddenSum::plain(random_standard_hidden_sum(N, N / 2, rng));
  Gf2Matrix M = random_invertible_matrix(N, rng);
  Gf2Vector t(N, rng() & low_mask(N));
  Oracle oracle = make_affine_oracle(hs, M, t);
  for (auto _ : state) {
    Reconstruction r = mount_attack(oracle, hs, AttackVariant::cpa);
    benchmark::DoNotOptimize(r.M_inv);
  }
  state.SetComplexityN(N);
}
BENCHMARK(BM_mount_attack)->RangeMultiplier(2)->Range(8, 64)->Complexity(benchmark::oNCubed);

static void BM_attack_toy_cipher(benchmark::State& state) {
  ToyCipherSpec spec = ToyCipherSpec::calibrated(static_cast<int>(state.range(0)));
  Gf2Vector key(6, 0b110101);
  Oracle oracle([&](const Gf2Vector& v) { return spec.encrypt(key, v); });
  for (auto _ : state) {
    Reconstruction r = mount_attack(oracle, toy_hidden_sum(), AttackVariant::cpa);
    benchmark::DoNotOptimize(r.t);
  }
}
BENCHMARK(BM_attack_toy_cipher)->Arg(1)->Arg(5)->Arg(10);

static void BM_coordinates(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  std::mt19937_64 rng(17);
  EmbeddedHiddenSum hs = EmbeddedHiddenSum::plain(random_standard_hidden_sum(N, N / 2, rng));
  Gf2Vector v(N, rng() & low_mask(N));
  for (auto _ : state) benchmark::DoNotOptimize(hs.coordinates(v));
}
BENCHMARK(BM_coordinates)->RangeMultiplier(2)->Range(8, 64);

BENCHMARK_MAIN();
