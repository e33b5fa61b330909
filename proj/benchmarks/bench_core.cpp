#include <benchmark/benchmark.h>

#include "hsdet/hypergeometric.hpp"
#include "hsdet/legendre.hpp"
#include "hsdet/moments.hpp"
#include "hsdet/rebit_density.hpp"
#include "hsdet/sep_series.hpp"

using namespace hsdet;

static void BM_UnbalancedMoment(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(unbalanced_moment(HalfIntegerAlpha(2), n));
}
BENCHMARK(BM_UnbalancedMoment)->Arg(10)->Arg(100)->Arg(500);

static void BM_BalancedPfq(benchmark::State& state) {
  const HypergeometricSpec spec = balanced_pfq_spec(HalfIntegerAlpha(2), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eval_terminating_pfq(spec));
}
BENCHMARK(BM_BalancedPfq)->Arg(10)->Arg(100)->Arg(500);

static void BM_MomentTable(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(moment_table(MomentFamily::Unbalanced, HalfIntegerAlpha(2),
                                          static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_MomentTable)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

static void BM_LegendreCoefficients(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const MomentSequence seq = moment_table(MomentFamily::Unbalanced, HalfIntegerAlpha(2), n);
  for (auto _ : state) benchmark::DoNotOptimize(legendre_coefficients(seq, n));
}
BENCHMARK(BM_LegendreCoefficients)->Arg(100)->Arg(300)->Unit(benchmark::kMillisecond);

static void BM_DensityEval(benchmark::State& state) {
  const unsigned n = static_cast<unsigned>(state.range(0));
  const MomentSequence seq = moment_table(MomentFamily::Unbalanced, HalfIntegerAlpha(2), n);
  const DensityEstimate d(legendre_coefficients(seq, n), 300);
  ScopedDigits guard(300);
  const BigReal x("-0.001");
  for (auto _ : state) benchmark::DoNotOptimize(density_eval(d, x));
}
BENCHMARK(BM_DensityEval)->Arg(100)->Arg(500)->Unit(benchmark::kMicrosecond);

static void BM_SeparabilitySeries(benchmark::State& state) {
  const ExactRational eps = pow(ExactRational(10), -30);
  for (auto _ : state) benchmark::DoNotOptimize(separability_probability(HalfIntegerAlpha(2), eps));
}
BENCHMARK(BM_SeparabilitySeries)->Unit(benchmark::kMillisecond);

static void BM_RebitDensity(benchmark::State& state) {
  ScopedDigits guard(50);
  const BigReal y("-0.01");
  for (auto _ : state) benchmark::DoNotOptimize(rebit_density(y, 50));
}
BENCHMARK(BM_RebitDensity);
BENCHMARK_MAIN();
