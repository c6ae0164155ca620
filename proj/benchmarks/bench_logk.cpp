#include <benchmark/benchmark.h>

#include "logbessel/bessel_base.hpp"
#include "logbessel/logk.hpp"
#include "logbessel/range_analysis.hpp"

namespace {

// Orders are passed as integers; a fractional part keeps the seed path general.
void BM_LogK(benchmark::State& state) {
  const double nu = static_cast<double>(state.range(0)) + 0.3;
  const double z = 1.5;
  for (auto _ : state) benchmark::DoNotOptimize(logbessel::log_k(nu, z));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LogK)->RangeMultiplier(10)->Range(1, 100'000)->Complexity();

void BM_LogKSumOfRatios(benchmark::State& state) {
  const double nu = static_cast<double>(state.range(0)) + 0.3;
  const double z = 1.5;
  for (auto _ : state) benchmark::DoNotOptimize(logbessel::log_k_sum_of_ratios(nu, z));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LogKSumOfRatios)->RangeMultiplier(10)->Range(1, 100'000)->Complexity();

void BM_ConventionalK(benchmark::State& state) {
  const double nu = static_cast<double>(state.range(0)) + 0.3;
  for (auto _ : state) benchmark::DoNotOptimize(logbessel::conventional_bessel_k_scaled(nu, 1.5));
}
BENCHMARK(BM_ConventionalK)->RangeMultiplier(10)->Range(1, 100);

void BM_SeedByArgument(benchmark::State& state) {
  // range(0) is z in hundredths, straddling the series / continued fraction switch.
  const double z = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(logbessel::scaled_seed(0.3, z));
}
BENCHMARK(BM_SeedByArgument)->Arg(1)->Arg(50)->Arg(199)->Arg(201)->Arg(1000)->Arg(100000);

void BM_Classify(benchmark::State& state) {
  const logbessel::FloatSystem sys = logbessel::FloatSystem::double_precision();
  for (auto _ : state) benchmark::DoNotOptimize(logbessel::classify(sys, 120.0, 3.0));
}
BENCHMARK(BM_Classify);

}  // namespace

BENCHMARK_MAIN();
