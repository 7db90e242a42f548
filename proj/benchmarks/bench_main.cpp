#include <benchmark/benchmark.h>

#include "medcurv/asymptotics.hpp"
#include "medcurv/ball.hpp"
#include "medcurv/curvature.hpp"

using namespace medcurv;

namespace {

void BM_EnumerateHeisenberg(benchmark::State& state) {
  const auto spec = spec_from_shorthand("heis3");
  const int R = static_cast<int>(state.range(0));
  std::size_t size = 0;
  for (auto _ : state) {
    const auto t = enumerate_ball(spec, R);
    size = t.size();
    benchmark::DoNotOptimize(size);
  }
  state.counters["elements"] = static_cast<double>(size);
  state.counters["elements_per_s"] =
      benchmark::Counter(static_cast<double>(size) * static_cast<double>(state.iterations()), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_EnumerateHeisenberg)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_EnumerateFree(benchmark::State& state) {
  const auto spec = spec_from_shorthand("free:2");
  const int R = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ball(spec, R).size());
}
BENCHMARK(BM_EnumerateFree)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

void BM_TargetedCentrePower(benchmark::State& state) {
  const auto spec = spec_from_shorthand("heis3");
  const auto x = spec.g().power(spec.g().parse("(0,0,1)"), state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(norm_targeted(spec, x, 40));
}
BENCHMARK(BM_TargetedCentrePower)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_CensusHeisenberg(benchmark::State& state) {
  const auto spec = spec_from_shorthand("heis3");
  const int R = static_cast<int>(state.range(0));
  const auto t = enumerate_ball(spec, R + 2);
  for (auto _ : state) benchmark::DoNotOptimize(census(t, R).spheres.size());
}
BENCHMARK(BM_CensusHeisenberg)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_AnnulusHeisenberg(benchmark::State& state) {
  const auto t = enumerate_ball(spec_from_shorthand("heis3"), 10);
  for (auto _ : state) benchmark::DoNotOptimize(annulus_sum(t, 3, 8).lhs);
}
BENCHMARK(BM_AnnulusHeisenberg)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
