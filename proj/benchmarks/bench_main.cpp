#include <benchmark/benchmark.h>

#include <cmath>

#include "fovir/mittag_leffler.hpp"
#include "fovir/sweep.hpp"

using namespace fovir;

namespace {

// Model trajectory at a given horizon; range(0) is t_end in days, range(1) is
// 100 * alpha. Memory makes alpha < 1 quadratic in the step count.
void BM_Integrate(benchmark::State& state) {
  SolverConfig cfg;
  cfg.t_end = static_cast<double>(state.range(0));
  const double alpha = state.range(1) / 100.0;
  for (auto _ : state) {
    auto tr = simulate(ModelParams{}, ProliferationKind::F1, alpha, default_initial_state(), cfg);
    benchmark::DoNotOptimize(tr.states.back());
  }
  state.counters["steps"] = static_cast<double>(cfg.step_count());
}
BENCHMARK(BM_Integrate)
    ->Args({10, 100})
    ->Args({100, 100})
    ->Args({5, 92})
    ->Args({10, 92})
    ->Args({20, 92})
    ->Unit(benchmark::kMillisecond);

void BM_R0Surface(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Axis x = default_axis(Param::Beta, n);
  const Axis y = default_axis(Param::Mu, n);
  for (auto _ : state) {
    auto g = r0_surface(ModelParams{}, x, y);
    benchmark::DoNotOptimize(g.values.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n));
}
BENCHMARK(BM_R0Surface)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_MittagLeffler(benchmark::State& state) {
  const double alpha = state.range(0) / 100.0;
  const double z = -static_cast<double>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(mittag_leffler(alpha, z));
}
BENCHMARK(BM_MittagLeffler)->Args({50, 1})->Args({92, 1})->Args({92, 20})->Args({100, 40});

}  // namespace

BENCHMARK_MAIN();
