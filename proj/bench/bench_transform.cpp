// Serial reference vs OpenMP kernels for grid evaluation and Gram matrices.
// Threads are taken from OMP_NUM_THREADS / POLYFOCK_THREADS as usual.

#include <benchmark/benchmark.h>

#include "polyfock/signal.hpp"
#include "polyfock/transform.hpp"

using namespace polyfock;

namespace {

const transform::PhaseSpaceGrid kGrid{-3.0, 3.0, 96, -3.0, 3.0, 96};

void BM_ForwardGridSerial(benchmark::State& state) {
  const transform::ExtendedBargmann t({static_cast<int>(state.range(0))});
  const auto f = signal::gaussian_signal(0.3, 1.2);
  for (auto _ : state) benchmark::DoNotOptimize(t.forward_grid_serial(f, kGrid));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kGrid.size()));
}

void BM_ForwardGridParallel(benchmark::State& state) {
  const transform::ExtendedBargmann t({static_cast<int>(state.range(0))});
  const auto f = signal::gaussian_signal(0.3, 1.2);
  for (auto _ : state) benchmark::DoNotOptimize(t.forward_grid(f, kGrid));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(kGrid.size()));
}

// A dense planar rule, as used for kernel and norm checks, so the work is
// dominated by transform evaluations at the nodes.
void BM_GramSerial(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const transform::ExtendedBargmann t({m});
  const quadrature::PlanarRule rule(quadrature::gauss_laguerre(40), 4 * (m + 10) + 8);
  for (auto _ : state) benchmark::DoNotOptimize(t.gram_matrix_serial(rule, 10));
}

void BM_GramParallel(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  const transform::ExtendedBargmann t({m});
  const quadrature::PlanarRule rule(quadrature::gauss_laguerre(40), 4 * (m + 10) + 8);
  for (auto _ : state) benchmark::DoNotOptimize(t.gram_matrix(rule, 10));
}

}  // namespace

BENCHMARK(BM_ForwardGridSerial)->Arg(0)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ForwardGridParallel)->Arg(0)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GramSerial)->Arg(0)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_GramParallel)->Arg(0)->Arg(6)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
