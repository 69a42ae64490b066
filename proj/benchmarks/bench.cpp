#include <benchmark/benchmark.h>

#include "interlace/driving.hpp"
#include "interlace/dynamics.hpp"
#include "interlace/skorokhod.hpp"
#include "interlace/stats.hpp"
#include "interlace/warren.hpp"

using namespace interlace;

namespace {

void BM_RunDynamics(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto driving = poisson_driver(n, 1.0, 200.0, {1, 0});
  for (auto _ : state) {
    auto traj = run_dynamics(packed_pattern(n), driving, driving.horizon);
    benchmark::DoNotOptimize(traj);
  }
  state.SetItemsProcessed(state.iterations() * driving.events.size());
}
BENCHMARK(BM_RunDynamics)->Arg(2)->Arg(4)->Arg(8);

void BM_DiscreteSkMap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto driving = poisson_driver(n, 1.0, 200.0, {1, 0});
  for (auto _ : state) {
    auto traj = discrete_sk_map(driving, packed_pattern(n));
    benchmark::DoNotOptimize(traj);
  }
  state.SetItemsProcessed(state.iterations() * driving.events.size());
}
BENCHMARK(BM_DiscreteSkMap)->Arg(2)->Arg(4)->Arg(8);

void BM_GammaReflect(benchmark::State& state) {
  const auto driving = poisson_driver(1, 1.0, static_cast<double>(state.range(0)), {2, 0});
  const PiecewisePath psi = slot_driver_path(driving, {1, 1}, 0.0);
  const TimeDependentInterval interval{PiecewisePath::constant(0.0),
                                       PiecewisePath::constant(10.0)};
  for (auto _ : state) {
    auto phi = gamma_reflect(interval, psi);
    benchmark::DoNotOptimize(phi);
  }
  state.SetItemsProcessed(state.iterations() * psi.breakpoints.size());
}
BENCHMARK(BM_GammaReflect)->Arg(100)->Arg(1000)->Arg(10000);

void BM_WarrenSample(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t stream = 0;
  for (auto _ : state) {
    auto traj = warren_sample(n, 1.0, 1e-3, SeedSpec{3, stream++});
    benchmark::DoNotOptimize(traj);
  }
  state.SetItemsProcessed(state.iterations() * 1000 * slot_count(n));
}
BENCHMARK(BM_WarrenSample)->Arg(2)->Arg(3)->Arg(6);

void BM_GueCorners(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream rng({4, 0});
  for (auto _ : state) {
    auto p = gue_corners_sample(n, 1.0, rng);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_GueCorners)->Arg(3)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
