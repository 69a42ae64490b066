#pragma once

#include <cstdint>
#include <nlohmann/json_fwd.hpp>
#include <string>
#include <vector>

#include "interlace/dynamics.hpp"
#include "interlace/gt_pattern.hpp"
#include "interlace/rng.hpp"

namespace interlace {

enum class DriverKind { Poisson, Bernoulli, Lazy };

DriverKind driver_kind_from_string(const std::string& name);
std::string to_string(DriverKind kind);

// Diffusive change of coordinates (t, x) -> (t / n, (x - slope * t) / scale)
// with t the original (sped-up) time.
struct ScalingPreset {
  double speed = 1.0;   // n
  double slope = 0.0;   // centering a_n(t) = slope * t
  double scale = 1.0;   // b_n > 0
};

// Real-valued trajectory obtained by rescaling an integer one.
struct RealTrajectory {
  int size = 0;
  std::vector<double> times;
  std::vector<std::vector<double>> states;  // flat slot order per time
};

RealTrajectory rescale_trajectory(const Trajectory& traj, const ScalingPreset& preset);

// Classical-invariance-principle presets. `param` is the driver parameter
// (rate, p or q). poisson: slope = rate, scale = sqrt(rate * n);
// bernoulli: slope = p, scale = sqrt(p (1-p) n); lazy: slope = 0,
// scale = sqrt(2 q n).
ScalingPreset preset_scaling(DriverKind kind, double n, double param);

struct ConvergenceEntry {
  double speed = 0.0;  // n
  LevelIndex slot;
  double time = 0.0;
  double ks = 0.0;
  std::size_t dynamics_samples = 0;
  std::size_t warren_samples = 0;
};

struct ConvergenceReport {
  DriverKind driver = DriverKind::Poisson;
  double driver_param = 1.0;
  int size = 0;
  std::vector<double> speeds;
  std::vector<double> times;
  std::size_t replicas = 0;
  SeedSpec seed;
  double grid_step = 1e-3;
  std::vector<ConvergenceEntry> entries;
};

// For each n: simulate `replicas` driven trajectories from the packed start
// over horizon n * max(times), rescale with the driver's preset, and compare
// each slot marginal at each time against `replicas` draws of the grid
// Warren sampler via the two-sample KS statistic. The reference sampler is
// started from the rescaled packed configuration (offsets of order 1/b_n),
// so both samples share the same finite-n starting state.
ConvergenceReport convergence_pipeline(DriverKind kind, double param,
                                       const std::vector<double>& speeds, int n,
                                       const std::vector<double>& times, std::size_t replicas,
                                       SeedSpec seed, double grid_step = 1e-3);

nlohmann::json report_to_json(const ConvergenceReport& report);

}  // namespace interlace
