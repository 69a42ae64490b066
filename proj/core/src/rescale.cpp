#include "interlace/rescale.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>

#include "interlace/errors.hpp"
#include "interlace/stats.hpp"
#include "interlace/warren.hpp"

namespace interlace {

DriverKind driver_kind_from_string(const std::string& name) {
  if (name == "poisson") return DriverKind::Poisson;
  if (name == "bernoulli") return DriverKind::Bernoulli;
  if (name == "lazy") return DriverKind::Lazy;
  throw DomainError("unknown driver kind '" + name + "'");
}

std::string to_string(DriverKind kind) {
  switch (kind) {
    case DriverKind::Poisson: return "poisson";
    case DriverKind::Bernoulli: return "bernoulli";
    case DriverKind::Lazy: return "lazy";
  }
  throw DomainError("unknown driver kind");
}

RealTrajectory rescale_trajectory(const Trajectory& traj, const ScalingPreset& preset) {
  if (preset.scale <= 0.0) throw DomainError("rescale: scale b must be positive");
  if (preset.speed <= 0.0) throw DomainError("rescale: speed n must be positive");
  RealTrajectory out;
  out.size = traj.states.empty() ? 0 : traj.states.front().size();
  out.times.reserve(traj.times.size());
  out.states.reserve(traj.states.size());
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    const double t = traj.times[k];
    out.times.push_back(t / preset.speed);
    std::vector<double> row(traj.states[k].slots());
    for (std::size_t m = 0; m < row.size(); ++m)
      row[m] = (static_cast<double>(traj.states[k].values()[m]) - preset.slope * t) / preset.scale;
    out.states.push_back(std::move(row));
  }
  return out;
}

ScalingPreset preset_scaling(DriverKind kind, double n, double param) {
  if (n < 1.0) throw DomainError("preset_scaling: n must be >= 1");
  ScalingPreset preset;
  preset.speed = n;
  switch (kind) {
    case DriverKind::Poisson:
      if (param <= 0.0) throw DomainError("preset_scaling: poisson rate must be positive");
      preset.slope = param;
      preset.scale = std::sqrt(param * n);
      break;
    case DriverKind::Bernoulli:
      if (param <= 0.0 || param >= 1.0)
        throw DomainError("preset_scaling: bernoulli p must lie strictly in (0, 1)");
      preset.slope = param;
      preset.scale = std::sqrt(param * (1.0 - param) * n);
      break;
    case DriverKind::Lazy:
      if (param <= 0.0 || param > 0.5)
        throw DomainError("preset_scaling: lazy q must lie in (0, 1/2]");
      preset.slope = 0.0;
      preset.scale = std::sqrt(2.0 * param * n);
      break;
  }
  return preset;
}

namespace {

DrivingPath make_driver(DriverKind kind, double param, int n, double speed, double t_max,
                        SeedSpec seed) {
  switch (kind) {
    case DriverKind::Poisson:
      return poisson_driver(n, param, speed * t_max, seed);
    case DriverKind::Bernoulli:
      return bernoulli_driver(n, param, static_cast<long long>(std::ceil(speed * t_max)), seed);
    case DriverKind::Lazy:
      return lazy_walk_driver(n, param, static_cast<long long>(std::ceil(speed * t_max)), seed);
  }
  throw DomainError("unknown driver kind");
}

}  // namespace

ConvergenceReport convergence_pipeline(DriverKind kind, double param,
                                       const std::vector<double>& speeds, int n,
                                       const std::vector<double>& times, std::size_t replicas,
                                       SeedSpec seed, double grid_step) {
  if (speeds.empty()) throw DomainError("convergence_pipeline: empty n list");
  if (times.empty()) throw DomainError("convergence_pipeline: empty time list");
  if (replicas == 0) throw DomainError("convergence_pipeline: replicas must be positive");
  const double t_max = *std::max_element(times.begin(), times.end());

  ConvergenceReport report;
  report.driver = kind;
  report.driver_param = param;
  report.size = n;
  report.speeds = speeds;
  report.times = times;
  report.replicas = replicas;
  report.seed = seed;
  report.grid_step = grid_step;

  const std::size_t slots = slot_count(n);
  const std::size_t n_times = times.size();

  const DiscretePattern packed0 = packed_pattern(n);
  for (std::size_t ni = 0; ni < speeds.size(); ++ni) {
    const double speed = speeds[ni];
    const ScalingPreset preset = preset_scaling(kind, speed, param);

    // Reference marginals: the limit sampler started from the rescaled
    // initial configuration. The start offsets are O(1/b_n); carrying them
    // on both sides keeps the comparison between same-start laws, so the KS
    // statistic measures the dynamics' convergence rather than the
    // vanishing-but-nonzero initial displacement.
    ContinuousPattern w_start(n);
    for (std::size_t m = 0; m < slots; ++m)
      w_start.values()[m] = static_cast<double>(packed0.values()[m]) / preset.scale;
    std::vector<std::vector<double>> warren_marginals(slots * n_times);
    {
      const SeedSpec warren_seed = seed.sub(0).sub(ni);
      for (std::size_t r = 0; r < replicas; ++r) {
        const WarrenTrajectory w = warren_sample(n, w_start, t_max, grid_step, warren_seed.sub(r));
        for (std::size_t ti = 0; ti < n_times; ++ti) {
          const std::size_t idx = static_cast<std::size_t>(std::llround(times[ti] / grid_step));
          for (std::size_t m = 0; m < slots; ++m)
            warren_marginals[m * n_times + ti].push_back(w.slots[m].values.at(idx));
        }
      }
    }

    std::vector<std::vector<double>> dyn_marginals(slots * n_times);
    const SeedSpec dyn_seed = seed.sub(1 + ni);
    for (std::size_t r = 0; r < replicas; ++r) {
      const DrivingPath driver = make_driver(kind, param, n, speed, t_max, dyn_seed.sub(r));
      const Trajectory traj = run_dynamics(packed0, driver, driver.horizon);
      for (std::size_t ti = 0; ti < n_times; ++ti) {
        const double t_orig = speed * times[ti];
        const DiscretePattern& p = traj.at_time(t_orig);
        for (std::size_t m = 0; m < slots; ++m)
          dyn_marginals[m * n_times + ti].push_back(
              (static_cast<double>(p.values()[m]) - preset.slope * t_orig) / preset.scale);
      }
    }
    for (std::size_t m = 0; m < slots; ++m)
      for (std::size_t ti = 0; ti < n_times; ++ti) {
        const auto& a = dyn_marginals[m * n_times + ti];
        const auto& b = warren_marginals[m * n_times + ti];
        report.entries.push_back({speed, slot_from_offset(m), times[ti], empirical_ks(a, b),
                                  a.size(), b.size()});
      }
  }
  return report;
}

nlohmann::json report_to_json(const ConvergenceReport& report) {
  nlohmann::json j;
  j["schema"] = "interlace.convergence/1";
  j["driver"] = to_string(report.driver);
  j["driver_param"] = report.driver_param;
  j["N"] = report.size;
  j["n_values"] = report.speeds;
  j["times"] = report.times;
  j["replicas"] = report.replicas;
  j["seed"] = report.seed.master;
  j["stream"] = report.seed.stream;
  j["grid_step"] = report.grid_step;
  nlohmann::json entries = nlohmann::json::array();
  for (const ConvergenceEntry& e : report.entries) {
    entries.push_back({{"n", e.speed},
                       {"level", e.slot.level},
                       {"index", e.slot.pos},
                       {"time", e.time},
                       {"ks", e.ks},
                       {"dynamics_samples", e.dynamics_samples},
                       {"warren_samples", e.warren_samples}});
  }
  j["entries"] = std::move(entries);
  return j;
}

}  // namespace interlace
