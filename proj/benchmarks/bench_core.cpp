#include <benchmark/benchmark.h>

#include "argbound/arithmetic.hpp"
#include "argbound/envelope.hpp"
#include "argbound/s_functions.hpp"
#include "argbound/zeros.hpp"
#include "argbound/zeta.hpp"

using namespace argbound;

namespace {

const ZeroTable& zeros() {
  static const ZeroTable z = load_zero_table(ARGBOUND_BENCH_ZEROS);
  return z;
}

void BM_Zeta(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(zeta({0.5, t + 0.123}));
}
BENCHMARK(BM_Zeta)->Arg(100)->Arg(1000)->Arg(3000);

void BM_ZetaLineLogDeriv(benchmark::State& state) {
  const ZetaLine line(static_cast<double>(state.range(0)) + 0.123);
  double sigma = 0.6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(line.log_deriv(sigma));
    sigma = sigma > 2.0 ? 0.6 : sigma + 0.01;
  }
}
BENCHMARK(BM_ZetaLineLogDeriv)->Arg(100)->Arg(3000);

void BM_ArgumentS(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0)) + 0.123;
  for (auto _ : state) benchmark::DoNotOptimize(argument_s(t));
}
BENCHMARK(BM_ArgumentS)->Arg(100)->Arg(1000)->Arg(3000)->Unit(benchmark::kMicrosecond);

void BM_IMSingle(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const QuadratureConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(i_m_single(m, 500.321, cfg, zeros()));
}
BENCHMARK(BM_IMSingle)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_IteratedTo(benchmark::State& state) {
  const double t = static_cast<double>(state.range(0));
  const QuadratureConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(s_m_iterated(3, t, cfg, zeros()));
}
BENCHMARK(BM_IteratedTo)->Arg(100)->Arg(500)->Unit(benchmark::kMillisecond);

void BM_Sieve(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_mangoldt(state.range(0)));
}
BENCHMARK(BM_Sieve)->Arg(10'000)->Arg(1'000'000)->Unit(benchmark::kMicrosecond);

void BM_DirichletSum(benchmark::State& state) {
  const MollifierParams p(static_cast<double>(state.range(0)));
  const MangoldtTable tbl = build_mangoldt(p.sum_bound());
  for (auto _ : state) benchmark::DoNotOptimize(dirichlet_sum(p, {p.sigma1(), 1000.0}, tbl));
}
BENCHMARK(BM_DirichletSum)->Arg(10)->Arg(100);

void BM_KernelQuadrature(benchmark::State& state) {
  const KernelParams kp{3, 0.3, 0.05};
  for (auto _ : state) benchmark::DoNotOptimize(k_gamma_quadrature(kp));
}
BENCHMARK(BM_KernelQuadrature);

}  // namespace

BENCHMARK_MAIN();
