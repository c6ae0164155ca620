#include <benchmark/benchmark.h>

#include "logbessel/student.hpp"

namespace {

using logbessel::CfMethod;

template <CfMethod M>
void BM_StudentCf(benchmark::State& state) {
  const double nu = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(logbessel::student_cf(nu, 0.7, M));
}
BENCHMARK_TEMPLATE(BM_StudentCf, CfMethod::Direct)->RangeMultiplier(10)->Range(1, 10'000);
BENCHMARK_TEMPLATE(BM_StudentCf, CfMethod::LogDirect)->RangeMultiplier(10)->Range(1, 10'000);
BENCHMARK_TEMPLATE(BM_StudentCf, CfMethod::LogRecursion)->RangeMultiplier(10)->Range(1, 10'000);

void BM_GilPelaezPdf(benchmark::State& state) {
  const double nu = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(logbessel::gil_pelaez_pdf(nu, 0.5, CfMethod::LogRecursion));
}
BENCHMARK(BM_GilPelaezPdf)->Arg(1)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
