#include <benchmark/benchmark.h>

#include "fujita/norms.hpp"
#include "fujita/solver.hpp"
#include "fujita/spectral.hpp"
#include "support.hpp"

using namespace fujita;

namespace {

GridSpec bench_grid(const benchmark::State& state) {
  return make_grid(static_cast<std::size_t>(state.range(0)), 20.0, static_cast<std::size_t>(state.range(1)));
}

void BM_Semigroup(benchmark::State& state) {
  const GridSpec g = bench_grid(state);
  const Field f = testing::random_field(g, 1);
  for (auto _ : state) benchmark::DoNotOptimize(semigroup_apply(f, 0.5, 0.1));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.total_points()));
}
BENCHMARK(BM_Semigroup)->Args({1, 4096})->Args({1, 65536})->Args({2, 256})->Args({2, 1024});

void BM_StepperStep(benchmark::State& state) {
  const GridSpec g = bench_grid(state);
  ModelParams m = make_model(g, 0.5, 2.0, -0.5);
  m.forcing = PurePower{-0.5};
  m.w = testing::gaussian(g, 0.1, 1.0);
  m.u0 = testing::gaussian(g, 0.1, 2.0);
  const Stepper s(m);
  double t = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.step(m.u0, t, 1e-3));
    t += 1e-3;  // defeats the cached forcing multipliers
  }
}
BENCHMARK(BM_StepperStep)->Args({1, 4096})->Args({1, 65536})->Args({2, 256});

void BM_LorentzNorm(benchmark::State& state) {
  const GridSpec g = bench_grid(state);
  const Field f = testing::random_field(g, 2);
  for (auto _ : state) benchmark::DoNotOptimize(lorentz_norm(f, 2.5, 1.7));
}
BENCHMARK(BM_LorentzNorm)->Args({1, 4096})->Args({2, 256});

void BM_WeakNorm(benchmark::State& state) {
  const GridSpec g = bench_grid(state);
  const Field f = testing::random_field(g, 3);
  for (auto _ : state) benchmark::DoNotOptimize(weak_norm(f, 2.5));
}
BENCHMARK(BM_WeakNorm)->Args({1, 4096})->Args({2, 256});

}  // namespace

BENCHMARK_MAIN();
