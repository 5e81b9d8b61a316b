#include <benchmark/benchmark.h>

#include <random>

#include "asgrs/asg.hpp"
#include "asgrs/attack.hpp"
#include "asgrs/gf2.hpp"
#include "asgrs/registers.hpp"
#include "asgrs/sampling.hpp"
#include "asgrs/sequence_analysis.hpp"

using namespace asgrs;

static void BM_BerlekampMassey(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const BitSequence s = random_bits(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(berlekamp_massey(s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BerlekampMassey)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void BM_Keystream(benchmark::State& state) {
  const AsgParams p = default_params(13, 11, 17);
  std::mt19937_64 rng(2);
  const AsgKey k = random_key(p, rng);
  const auto bits = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(keystream(p, k, bits));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Keystream)->Arg(1 << 10)->Arg(1 << 14);

static void BM_MatPow(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const BitMatrix t = transition_matrix(LfsrSpec(default_primitive_polynomial(m)));
  for (auto _ : state) benchmark::DoNotOptimize(mat_pow(t, (std::uint64_t{1} << m) - 2));
}
BENCHMARK(BM_MatPow)->DenseRange(8, 24, 8);

static void BM_Attack(benchmark::State& state) {
  const auto l = static_cast<std::size_t>(state.range(0));
  const AsgParams p = default_params(l, 7, 5);
  std::mt19937_64 rng(3);
  const AsgKey k = random_key(p, rng);
  const AttackConfig cfg = AttackConfig::with_defaults(p, keystream(p, k, recommended_keystream_bits(p)));
  for (auto _ : state) benchmark::DoNotOptimize(run_attack(cfg));
  state.SetComplexityN(std::int64_t{1} << l);
}
BENCHMARK(BM_Attack)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);
BENCHMARK_MAIN();
