#include <benchmark/benchmark.h>

#include "opde/appell.hpp"
#include "opde/golden.hpp"
#include "opde/monic.hpp"
#include "opde/relations.hpp"

namespace {

using namespace opde;

const AppellParams kParams{Rational(2), Rational(3)};

void BM_BuildMonic(benchmark::State& state) {
  const HypergeometricPDE pde = appell_pde(kParams);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_monic(pde, N, false));
}
BENCHMARK(BM_BuildMonic)->DenseRange(4, 12, 4)->Unit(benchmark::kMillisecond);

void BM_BuildMonicCrossChecked(benchmark::State& state) {
  const HypergeometricPDE pde = appell_pde(kParams);
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(build_monic(pde, N, true));
}
BENCHMARK(BM_BuildMonicCrossChecked)->DenseRange(4, 8, 4)->Unit(benchmark::kMillisecond);

void BM_TtrrResidual(benchmark::State& state) {
  const MonicFamily fam = build_monic(appell_pde(kParams), 9);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const TtrrSet t = general_ttrr(fam.family, n);
    benchmark::DoNotOptimize(ttrr_residual(fam.family, t, Axis::x));
  }
}
BENCHMARK(BM_TtrrResidual)->DenseRange(2, 8, 3)->Unit(benchmark::kMicrosecond);

void BM_StructureMatrices(benchmark::State& state) {
  const HypergeometricPDE pde = appell_pde(kParams);
  const MonicFamily fam = build_monic(pde, 9);
  const PhiCase phi = select_phi(pde);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(structure_matrices(fam.family, phi, n));
}
BENCHMARK(BM_StructureMatrices)->DenseRange(2, 8, 3)->Unit(benchmark::kMicrosecond);

void BM_GoldenMatrices(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (GoldenKind k : kGoldenKinds) benchmark::DoNotOptimize(golden_matrix(kParams, n, k));
  }
}
BENCHMARK(BM_GoldenMatrices)->DenseRange(2, 8, 3)->Unit(benchmark::kMicrosecond);

void BM_AppellSeries(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(monic_appell_vector(kParams, N));
}
BENCHMARK(BM_AppellSeries)->DenseRange(2, 8, 3)->Unit(benchmark::kMicrosecond);

void BM_RodriguesVector(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(nonmonic_F_vector(kParams, N));
}
BENCHMARK(BM_RodriguesVector)->DenseRange(2, 6, 2)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
