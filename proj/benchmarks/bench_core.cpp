#include <benchmark/benchmark.h>

#include <numbers>

#include "rotomode/field.hpp"
#include "rotomode/fock.hpp"
#include "rotomode/interference.hpp"
#include "rotomode/protocols.hpp"
#include "rotomode/transforms.hpp"

namespace {

using namespace rotomode;

void BM_BuildPairAndExpect(benchmark::State& state) {
  const TransverseIndex bessel = TransverseIndex::bessel(2.0);
  for (auto _ : state) {
    ModeBasis basis;
    const ModePair g = build_g_pair(basis, 100.0, 1.0, 2, +1, bessel);
    const FockState one = create(FockState::vacuum(basis, 2), g.plus).state;
    benchmark::DoNotOptimize(expect(one, ObservableKind::Sz));
  }
}
BENCHMARK(BM_BuildPairAndExpect);

void BM_SnapshotGrid(benchmark::State& state) {
  const TransverseIndex bessel = TransverseIndex::bessel(0.05);
  ModeBasis basis;
  const ModePair f = build_f_pair(basis, 1.0, 0.01, bessel);
  GridSpec grid;
  grid.n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(snapshot(basis, f.plus, grid, 0.0));
  }
  state.SetItemsProcessed(state.iterations() * grid.n * grid.n);
}
BENCHMARK(BM_SnapshotGrid)->Arg(65)->Arg(129);

void BM_PatternRotationEstimate(benchmark::State& state) {
  const TransverseIndex bessel = TransverseIndex::bessel(0.05);
  ModeBasis basis;
  const ModePair f = build_f_pair(basis, 1.0, 0.01, bessel);
  GridSpec grid;
  grid.n = 129;
  const double dt = std::numbers::pi / (5.0 * 0.01);
  const FieldSnapshot s0 = snapshot(basis, f.plus, grid, 0.0);
  const FieldSnapshot s1 = snapshot(basis, f.plus, grid, dt);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        estimate_pattern_rotation(s0, s1, IntensityComponent::X));
  }
}
BENCHMARK(BM_PatternRotationEstimate);

void BM_HomBruteForce(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(hom_bruteforce_b(1.0, 0.01, 0, +1, 40.0));
  }
}
BENCHMARK(BM_HomBruteForce);

void BM_Bb84Trials(benchmark::State& state) {
  Bb84Config config;
  config.transverse = TransverseIndex::bessel(0.02);
  config.trials = state.range(0);
  config.eavesdrop = Bb84Config::Eavesdrop::InterceptResend;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bb84_simulate(config));
  }
  state.SetItemsProcessed(state.iterations() * config.trials);
}
BENCHMARK(BM_Bb84Trials)->Arg(10000)->Arg(100000);

}  // namespace

BENCHMARK_MAIN();
