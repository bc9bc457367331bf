#include "ramcut/graphlab/families.hpp"
#include "ramcut/graphlab/spectral.hpp"
#include "ramcut/graphlab/walk.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace ramcut::graphlab;

void BM_ExactWalk(benchmark::State& state) {
  const auto g = hypercube(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    ExactWalk walk(g, 0, true);
    for (int t = 0; t < 20; ++t) walk.step();
    benchmark::DoNotOptimize(walk.denominator());
  }
}
BENCHMARK(BM_ExactWalk)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_FloatWalk(benchmark::State& state) {
  const auto g = cycle_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    FloatWalk walk(g, 0, true);
    for (int t = 0; t < 1000; ++t) walk.step();
    benchmark::DoNotOptimize(walk.distribution().data());
  }
}
BENCHMARK(BM_FloatWalk)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);

void BM_DenseSpectrum(benchmark::State& state) {
  const auto g = ladder_spliced_cubic(static_cast<std::size_t>(state.range(0)) / 2,
                                      static_cast<std::size_t>(state.range(0)) / 2, 1);
  for (auto _ : state) benchmark::DoNotOptimize(spectral_report(g));
}
BENCHMARK(BM_DenseSpectrum)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);

void BM_LanczosSpectrum(benchmark::State& state) {
  const auto g = hypercube(static_cast<unsigned>(state.range(0)));
  SpectralOptions options;
  options.dense_cap = 0;
  for (auto _ : state) benchmark::DoNotOptimize(spectral_report(g, options));
}
BENCHMARK(BM_LanczosSpectrum)->Arg(12)->Unit(benchmark::kMillisecond);

}  // namespace
