#pragma once

#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "interlace/driving.hpp"
#include "interlace/dynamics.hpp"

namespace interlace {

// Right-continuous piecewise-constant path: `initial` holds on [0, first
// breakpoint), each breakpoint (t, v) sets the value from t on. Boundary
// paths may be identically or piecewise +-infinity; driving paths are
// finite.
struct PiecewisePath {
  double initial = 0.0;
  std::vector<std::pair<double, double>> breakpoints;  // times strictly increasing, >= 0

  double value_at(double t) const;
  double value_before(double t) const;  // left limit
  PiecewisePath shifted(double offset) const;

  static PiecewisePath constant(double v) { return PiecewisePath{v, {}}; }

  friend bool operator==(const PiecewisePath&, const PiecewisePath&) = default;
};

constexpr double kMinusInf = -std::numeric_limits<double>::infinity();
constexpr double kPlusInf = std::numeric_limits<double>::infinity();

struct TimeDependentInterval {
  PiecewisePath lower;  // valued in [-inf, inf)
  PiecewisePath upper;  // valued in (-inf, inf]
};

// Extended Skorokhod map in a time-dependent interval, for piecewise
// constant inputs: event-ordered clamp recursion over the merged breakpoint
// times. phi(0) = clamp(psi(0), l(0), r(0)); at each later merged time t,
// phi(t) = clamp(phi(t-) + dpsi(t), l(t), r(t)).
PiecewisePath gamma_reflect(const TimeDependentInterval& interval, const PiecewisePath& psi);

// Verdict of the constrained-path condition check. `condition` names the
// first failed condition ("containment", "monotonicity-lower",
// "monotonicity-upper"); `time` is where it failed.
struct Prop6Report {
  bool pass = true;
  std::string condition;
  double time = 0.0;
};

// Checks, at the resolution of merged breakpoints, that phi = psi + eta
// stays in [l, r] and that eta only increases while phi sits strictly below
// the upper boundary and only decreases while strictly above the lower one
// (with eta(0-) = 0). `horizon`, when finite, bounds the scan; breakpoints
// beyond it are a structural error.
Prop6Report check_prop6(const TimeDependentInterval& interval, const PiecewisePath& psi,
                        const PiecewisePath& phi, double horizon = kPlusInf);

// Level-by-level Skorokhod construction of the driven dynamics: level 1 is
// the level-1 driver started at its initial value; each higher slot is the
// reflection of its driver in the interval cut out by the already-built
// level below (upper boundary offset by -1). Agrees exactly with
// run_dynamics on the same inputs.
Trajectory discrete_sk_map(const DrivingPath& driving, const DiscretePattern& initial);

// Cumulative path of one slot's driving events, started at `start`.
PiecewisePath slot_driver_path(const DrivingPath& driving, LevelIndex slot, double start);

}  // namespace interlace
