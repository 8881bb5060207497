#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "egini/gini.hpp"

namespace {

using egini::Rational;

std::vector<Rational> random_values(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 12);
  std::vector<Rational> v(n);
  for (auto& x : v) x = Rational(num(rng), den(rng));
  return v;
}

void BM_DoubleSumNaive(benchmark::State& state) {
  const auto v = random_values(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(egini::double_sum_naive(v));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DoubleSumNaive)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_DoubleSumFast(benchmark::State& state) {
  const auto v = random_values(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(egini::double_sum_fast(v));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DoubleSumFast)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

void BM_IncrementalTrace(benchmark::State& state) {
  const auto gen =
      egini::power_sparse_generator(10, Rational(1), Rational(4));
  const auto n_max = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(egini::welfare_estimate(gen, 10, n_max));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IncrementalTrace)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

}  // namespace

BENCHMARK_MAIN();
