#include <benchmark/benchmark.h>

#include "subrad/analysis.hpp"
#include "subrad/coupling.hpp"
#include "subrad/dynamics.hpp"
#include "subrad/kernel.hpp"
#include "subrad/spectral.hpp"

using namespace subrad;

namespace {

CouplingMatrix chain(int n, int m, double spacing) {
  return CouplingMatrix::assemble(HilbertSpace(n, m),
                                  Lattice::rectangular({1, 1, n}, spacing));
}

void BM_RankRoundTrip(benchmark::State& state) {
  const HilbertSpace space(static_cast<int>(state.range(0)), 3);
  const std::size_t dim = space.dim();
  for (auto _ : state) {
    for (std::size_t i = 1; i <= dim; i += 7)
      benchmark::DoNotOptimize(space.rank(space.unrank(i)));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>((dim + 6) / 7));
}
BENCHMARK(BM_RankRoundTrip)->Arg(16)->Arg(27);

void BM_KernelPair(benchmark::State& state) {
  double xi = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pair_decay_rate(xi, 0.4));
    benchmark::DoNotOptimize(pair_frequency_shift(xi, 0.4));
    xi += 1e-6;
  }
}
BENCHMARK(BM_KernelPair);

void BM_Assemble(benchmark::State& state) {
  const int n = 16;
  const int m = static_cast<int>(state.range(0));
  const HilbertSpace space(n, m);
  const Lattice lat = Lattice::rectangular({1, 1, n}, 0.25);
  for (auto _ : state)
    benchmark::DoNotOptimize(CouplingMatrix::assemble(space, lat));
  state.SetLabel("dim=" + std::to_string(space.dim()));
}
BENCHMARK(BM_Assemble)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_EigenvaluesOnly(benchmark::State& state) {
  const CouplingMatrix a = chain(16, 2, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues_only(a));
}
BENCHMARK(BM_EigenvaluesOnly)->Unit(benchmark::kMillisecond);

void BM_Diagonalize(benchmark::State& state) {
  const CouplingMatrix a = chain(16, 2, 0.1);
  for (auto _ : state) benchmark::DoNotOptimize(diagonalize(a));
}
BENCHMARK(BM_Diagonalize)->Unit(benchmark::kMillisecond);

void BM_EvolveEigen(benchmark::State& state) {
  const CouplingMatrix a = chain(16, 2, 0.1);
  const Spectrum spec = diagonalize(a);
  const AmplitudeState c0 = initial_phase_imprinted(a.space(), 45);
  const auto grid = time_grid(60.0, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evolve_eigen(spec, c0, grid));
}
BENCHMARK(BM_EvolveEigen)->Arg(200)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_KrylovStep(benchmark::State& state) {
  const CouplingMatrix a = chain(16, 2, 0.1);
  const AmplitudeState c0 = initial_phase_imprinted(a.space(), 45);
  const std::vector<double> grid = {1.0};
  for (auto _ : state)
    benchmark::DoNotOptimize(
        evolve_krylov(a, c0, grid, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_KrylovStep)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_ModeWeights(benchmark::State& state) {
  const CouplingMatrix a = chain(16, 2, 0.1);
  const Spectrum spec = sort_modes(diagonalize(a), ModeSort::decay_ascending);
  for (auto _ : state)
    benchmark::DoNotOptimize(mode_weights(spec, a.space(), 45));
}
BENCHMARK(BM_ModeWeights)->Unit(benchmark::kMicrosecond);

void BM_ScanImprint(benchmark::State& state) {
  const CouplingMatrix a = chain(12, 2, 0.25);
  const Spectrum spec = sort_modes(diagonalize(a), ModeSort::decay_ascending);
  for (auto _ : state)
    benchmark::DoNotOptimize(scan_imprint_index(spec, a.space(), 1));
}
BENCHMARK(BM_ScanImprint)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
