#include <benchmark/benchmark.h>

#include "anomaly/genus.hpp"
#include "anomaly/kvirt.hpp"
#include "anomaly/modforms.hpp"
#include "anomaly/theta.hpp"
#include "anomaly/verify.hpp"

using namespace anomaly;

static void BM_JacobiCheck(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(jacobi_check(order));
}
BENCHMARK(BM_JacobiCheck)->Arg(40)->Arg(80)->Arg(160);

static void BM_ThetaFactor(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_theta_factor(FactorKind::A, order, 6));
}
BENCHMARK(BM_ThetaFactor)->Arg(48)->Arg(80)->Unit(benchmark::kMillisecond);

static void BM_BasisElement(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(basis_element(Group::GammaUpper, k, k / 2, 8 * (2 * k + 4)));
}
BENCHMARK(BM_BasisElement)->DenseRange(2, 6, 2);

static void BM_ProdOverRoots(benchmark::State& state) {
  const int W = static_cast<int>(state.range(0));
  const auto f = build_theta_factor(FactorKind::T2, 80, W);
  const auto table = make_table(W / 2, 0, false);
  for (auto _ : state) benchmark::DoNotOptimize(prod_over_roots(f, {Family::TM, W}, table, W));
}
BENCHMARK(BM_ProdOverRoots)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

static void BM_LambdaSeries(benchmark::State& state) {
  const auto ctx = make_context(SettingKind::Spinc4k, 2, 3);
  const auto e = ctx.tangent() - ctx.trivial(8);
  for (auto _ : state) benchmark::DoNotOptimize(vb_lambda_t(e, 8, -1, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_LambdaSeries)->Arg(32)->Arg(64);

static void BM_Verify(benchmark::State& state, const char* id, int k, int l) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_theorem(id, k, l));
}
BENCHMARK_CAPTURE(BM_Verify, spin_3_1_k3_l4, "3.1", 3, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Verify, spinc_4_2_k2_l3, "4.2", 2, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Verify, spinc_4_8_k2_l2, "4.8", 2, 2)->Unit(benchmark::kMillisecond);

static void BM_DivisibilityAudit(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(divisibility_check("3.8", 1, 6));
}
BENCHMARK(BM_DivisibilityAudit)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
