#include <benchmark/benchmark.h>

#include <complex>

#include "hacs/coherent.hpp"
#include "hacs/generators.hpp"
#include "hacs/hydrogen.hpp"
#include "hacs/robertson.hpp"
#include "hacs/specfun.hpp"

using namespace hacs;
using cd = std::complex<double>;

static void BM_CommutatorClosureOsc8(benchmark::State& state) {
  auto fam = gen::build_family(gen::Realization::osc8);
  for (auto _ : state) benchmark::DoNotOptimize(gen::check_commutators(fam));
}
BENCHMARK(BM_CommutatorClosureOsc8);

static void BM_PsiDiscrete(benchmark::State& state) {
  hyd::DiscreteLabel l{2, 1, -1};
  hyd::Point3 x{0.8, -0.3, 0.6};
  for (auto _ : state) benchmark::DoNotOptimize(hyd::psi_discrete(l, x));
}
BENCHMARK(BM_PsiDiscrete);

static void BM_PsiContinuous(benchmark::State& state) {
  hyd::ContinuousLabel l{0.8, 1.3, 1};
  hyd::Point3 x{0.8, -0.3, 0.6};
  for (auto _ : state) benchmark::DoNotOptimize(hyd::psi_continuous(l, x));
}
BENCHMARK(BM_PsiContinuous);

static void BM_Hyp1f1Series(benchmark::State& state) {
  cd a(0.5, -0.8), z(0.0, -6.25);
  for (auto _ : state) benchmark::DoNotOptimize(sf::hyp1f1(a, 1, z));
}
BENCHMARK(BM_Hyp1f1Series);

static void BM_Hyp1f1Asymptotic(benchmark::State& state) {
  cd a(0.5, -0.8), z(0.0, -49.0);
  for (auto _ : state) benchmark::DoNotOptimize(sf::hyp1f1(a, 1, z));
}
BENCHMARK(BM_Hyp1f1Asymptotic);

static void BM_SeriesSection(benchmark::State& state) {
  cd l1(0.3, 0.2), l2(-0.25, 0.1);
  hyd::Point3 x{0.8, -0.3, 0.6};
  int n = int(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cs::cs_discrete_series(l1, l2, x, n));
}
BENCHMARK(BM_SeriesSection)->Arg(20)->Arg(40);

static void BM_NormQuadrature(benchmark::State& state) {
  auto u = cs::u_of_series(cd(0.3, 0.2), cd(-0.25, 0.1));
  for (auto _ : state) benchmark::DoNotOptimize(cs::cs_norm_quadrature(u));
}
BENCHMARK(BM_NormQuadrature);

static void BM_MellinIdentity(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(cs::verify_mellin(0.5, 1, 0.9, 1.4));
}
BENCHMARK(BM_MellinIdentity);

static void BM_ClosedMoments(benchmark::State& state) {
  cs::CVec3 u{cd(0.15, 0.1), cd(-0.2, 0.05), cd(0.1, -0.1)};
  for (auto _ : state) benchmark::DoNotOptimize(rob::closed_moments(u));
}
BENCHMARK(BM_ClosedMoments);

static void BM_CovarianceCompact(benchmark::State& state) {
  cs::CVec3 u{cd(0.2, 0.0), cd(0.0, 0.1), cd(-0.15, 0.0)};
  hyd::Point3 x{0.6, -0.4, 0.8};
  for (auto _ : state) benchmark::DoNotOptimize(cs::covariance_check_L50(u, x));
}
BENCHMARK(BM_CovarianceCompact);

BENCHMARK_MAIN();
