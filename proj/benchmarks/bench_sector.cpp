#include "ramcut/qcalc/constants.hpp"
#include "ramcut/sector/evolve.hpp"
#include "ramcut/sector/rng.hpp"
#include "ramcut/sector/simulate.hpp"

#include <benchmark/benchmark.h>

namespace {

void BM_PhiloxDraws(benchmark::State& state) {
  ramcut::sector::StreamRng rng(1, 2);
  for (auto _ : state) benchmark::DoNotOptimize(rng.next_u64());
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_PhiloxDraws);

void BM_Simulate(benchmark::State& state) {
  ramcut::sector::SimulationConfig config;
  config.d = static_cast<unsigned>(state.range(0));
  config.q = 3;
  config.horizon = 1000;
  config.trajectories = 1000;
  config.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(ramcut::sector::simulate(config));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(config.horizon * config.trajectories));
}
BENCHMARK(BM_Simulate)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_EvolveExact(benchmark::State& state) {
  const auto origin = ramcut::sector::SectorPoint::origin(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ramcut::sector::evolve_exact(3, 2, origin, static_cast<unsigned>(state.range(0)), 1000));
  }
}
BENCHMARK(BM_EvolveExact)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);

void BM_DriftConstants(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(ramcut::qcalc::drift_constants(static_cast<unsigned>(state.range(0)), 7));
  }
}
BENCHMARK(BM_DriftConstants)->DenseRange(3, 9, 3);

}  // namespace
