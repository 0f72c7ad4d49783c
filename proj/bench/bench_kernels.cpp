// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "qfchub/tunability.hpp"

namespace {

qfchub::TuningConstraints sweep_constraints() {
  qfchub::TuningConstraints c;
  c.mode = qfchub::ConstraintMode::separation(20.0);
  return c;
}

void BM_HubSweepSerial(benchmark::State& state) {
  const auto c = sweep_constraints();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qfchub::reference::hub_sweep(400.0, 1000.0, 5.0, 1540.0, 40.0, 48.0,
                                                          qfchub::default_material(), c));
  }
}
BENCHMARK(BM_HubSweepSerial)->Unit(benchmark::kMillisecond);

void BM_HubSweepParallel(benchmark::State& state) {
  const auto c = sweep_constraints();
  for (auto _ : state) {
    benchmark::DoNotOptimize(qfchub::hub_sweep(400.0, 1000.0, 5.0, 1540.0, 40.0, 48.0,
                                               qfchub::default_material(), c,
                                               static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_HubSweepParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SpectrumSerial(benchmark::State& state) {
  const auto d = qfchub::design_device(780.0, 1540.0, 40.0, 48.0, qfchub::default_material());
  for (auto _ : state) {
    benchmark::DoNotOptimize(qfchub::reference::pm_spectrum(780.0, 1540.0, d, 20.0, 1.0));
  }
}
BENCHMARK(BM_SpectrumSerial)->Unit(benchmark::kMillisecond);

void BM_SpectrumParallel(benchmark::State& state) {
  const auto d = qfchub::design_device(780.0, 1540.0, 40.0, 48.0, qfchub::default_material());
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qfchub::pm_spectrum(780.0, 1540.0, d, 20.0, 1.0, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_SpectrumParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
