#include <benchmark/benchmark.h>

#include "wsg/divisor.hpp"
#include "wsg/gamma.hpp"
#include "wsg/oracle.hpp"
#include "wsg/h_box.hpp"

namespace {

void BM_EnumerateGammaHermitian(benchmark::State& state) {
  const auto params = wsg::CurveParams::hermitian_like(5, 3);
  for (auto _ : state) benchmark::DoNotOptimize(wsg::enumerate_gamma(params, state.range(0)));
}
BENCHMARK(BM_EnumerateGammaHermitian)->DenseRange(2, 6);

void BM_Gaps(benchmark::State& state) {
  const wsg::CurveParams params(5, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wsg::gaps(params));
}
BENCHMARK(BM_Gaps)->Arg(7)->Arg(126)->Arg(3126);

void BM_DiscrepancyCertificate(benchmark::State& state) {
  const wsg::CurveParams params(5, 7);
  const auto indices = wsg::enumerate_gamma_indices(params, 3);
  for (auto _ : state)
    for (const auto& idx : indices)
      benchmark::DoNotOptimize(wsg::verify_discrepancy_certificate(params, 3, idx));
}
BENCHMARK(BM_DiscrepancyCertificate);

void BM_OracleBox(benchmark::State& state) {
  const wsg::CurveParams params(5, 7);
  const wsg::Int m = state.range(0);
  const auto bound = wsg::default_bound(params, m);
  for (auto _ : state) benchmark::DoNotOptimize(wsg::oracle_box_semigroup(params, m, bound));
}
BENCHMARK(BM_OracleBox)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_ClosureBox(benchmark::State& state) {
  const wsg::CurveParams params(5, 7);
  const wsg::Int m = state.range(0);
  const auto bound = wsg::default_bound(params, m);
  for (auto _ : state) benchmark::DoNotOptimize(wsg::generate_h_box(params, m, bound));
}
BENCHMARK(BM_ClosureBox)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
