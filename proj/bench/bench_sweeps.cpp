// Serial reference kernels vs the OpenMP path on the default suites.
#include <benchmark/benchmark.h>

#include "hjc/sweep.hpp"

namespace {

using hjc::sweep::Exec;

Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::Serial : Exec::Parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial"
                                     : "omp x" + std::to_string(hjc::sweep::parallel_threads()));
}

void BM_BerrySweep(benchmark::State& state) {
  auto pts = hjc::sweep::berry_random(hjc::AlgebraTag::O, 400, 7);
  for (auto _ : state) {
    auto r = hjc::sweep::berry_sweep(pts, hjc::kDefaultTolerances, exec_of(state));
    benchmark::DoNotOptimize(r);
  }
  label(state);
}

void BM_AlgebraCheck(benchmark::State& state) {
  auto samples = hjc::sweep::draw_algebra_samples(hjc::AlgebraTag::O, 1000, 7);
  for (auto _ : state) {
    auto r = hjc::sweep::algebra_check(hjc::AlgebraTag::O, samples, exec_of(state));
    benchmark::DoNotOptimize(r);
  }
  label(state);
}

void BM_JCSweep(benchmark::State& state) {
  const std::vector<double> thetas{-1.0, -0.5, -0.1, 0.1, 0.5, 1.0, 2.0};
  for (auto _ : state) {
    auto r = hjc::sweep::jc_sweep(thetas, 32, hjc::kDefaultTolerances, exec_of(state));
    benchmark::DoNotOptimize(r);
  }
  label(state);
}

void BM_EvolveSeries(benchmark::State& state) {
  auto p = hjc::JCParams::from_physical(2.0, 2.5, 1.0, 40);
  const auto times = hjc::sweep::time_grid(10.0, 50);
  for (auto _ : state) {
    auto r = hjc::sweep::evolve_series(p, times, 0, exec_of(state));
    benchmark::DoNotOptimize(r);
  }
  label(state);
}

}  // namespace

BENCHMARK(BM_AlgebraCheck)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BerrySweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JCSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvolveSeries)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
