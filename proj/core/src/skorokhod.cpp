#include "interlace/skorokhod.hpp"

#include <algorithm>
#include <cmath>

#include "interlace/errors.hpp"

namespace interlace {

double PiecewisePath::value_at(double t) const {
  // Last breakpoint with time <= t.
  auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), t,
                             [](double tt, const auto& bp) { return tt < bp.first; });
  if (it == breakpoints.begin()) return initial;
  return std::prev(it)->second;
}

double PiecewisePath::value_before(double t) const {
  auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), t,
                             [](const auto& bp, double tt) { return bp.first < tt; });
  if (it == breakpoints.begin()) return initial;
  return std::prev(it)->second;
}

PiecewisePath PiecewisePath::shifted(double offset) const {
  PiecewisePath out = *this;
  out.initial += offset;
  for (auto& [t, v] : out.breakpoints) v += offset;
  return out;
}

namespace {

std::vector<double> merged_times(std::initializer_list<const PiecewisePath*> paths) {
  std::vector<double> times;
  for (const PiecewisePath* p : paths)
    for (const auto& [t, v] : p->breakpoints) times.push_back(t);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

double clamp_to(double x, double lo, double hi) { return std::min(std::max(x, lo), hi); }

}  // namespace

PiecewisePath gamma_reflect(const TimeDependentInterval& interval, const PiecewisePath& psi) {
  const PiecewisePath& l = interval.lower;
  const PiecewisePath& r = interval.upper;
  const auto times = merged_times({&l, &r, &psi});

  const double l0 = l.value_at(0.0), r0 = r.value_at(0.0);
  if (l0 > r0) throw DomainError("gamma_reflect: l(0) > r(0)");
  PiecewisePath phi;
  double cur = clamp_to(psi.value_at(0.0), l0, r0);
  double psi_prev = psi.value_at(0.0);
  phi.initial = cur;

  for (double t : times) {
    if (t <= 0.0) continue;  // t = 0 jumps are folded into phi(0)
    const double lo = l.value_at(t), hi = r.value_at(t);
    if (lo > hi)
      throw DomainError("gamma_reflect: l(t) > r(t) at t = " + std::to_string(t));
    const double psi_t = psi.value_at(t);
    const double next = clamp_to(cur + (psi_t - psi_prev), lo, hi);
    if (next != cur) phi.breakpoints.push_back({t, next});
    cur = next;
    psi_prev = psi_t;
  }
  return phi;
}

Prop6Report check_prop6(const TimeDependentInterval& interval, const PiecewisePath& psi,
                        const PiecewisePath& phi, double horizon) {
  const PiecewisePath& l = interval.lower;
  const PiecewisePath& r = interval.upper;
  auto times = merged_times({&l, &r, &psi, &phi});
  if (std::isfinite(horizon)) {
    if (!times.empty() && times.back() > horizon)
      throw StructuralError("check_prop6: a path has breakpoints beyond the common horizon");
  }
  // Scan time 0 plus every merged breakpoint. eta is constant between
  // breakpoints, so the window conditions reduce to per-jump sign checks.
  std::vector<double> scan{0.0};
  for (double t : times)
    if (t > 0.0) scan.push_back(t);

  double eta_prev = 0.0;  // eta(0-) = 0
  for (double t : scan) {
    const double lo = l.value_at(t), hi = r.value_at(t);
    const double f = phi.value_at(t);
    if (f < lo || f > hi) return {false, "containment", t};
    const double eta = f - psi.value_at(t);
    const double jump = eta - eta_prev;
    if (f < hi && jump < 0.0) return {false, "monotonicity-lower", t};
    if (f > lo && jump > 0.0) return {false, "monotonicity-upper", t};
    eta_prev = eta;
  }
  return {true, "", 0.0};
}

PiecewisePath slot_driver_path(const DrivingPath& driving, LevelIndex slot, double start) {
  PiecewisePath path;
  path.initial = start;
  double cur = start;
  for (const DrivingEvent& e : driving.events) {
    if (!(e.slot == slot)) continue;
    cur += e.increment;
    path.breakpoints.push_back({e.time, cur});
  }
  return path;
}

Trajectory discrete_sk_map(const DrivingPath& driving, const DiscretePattern& initial) {
  if (auto v = validate_discrete(initial); !v.ok())
    throw DomainError("discrete_sk_map: invalid initial pattern: " +
                      v.violations.front().describe());
  if (initial.size() != driving.size)
    throw StructuralError("discrete_sk_map: pattern has " + std::to_string(initial.size()) +
                          " levels, driving path " + std::to_string(driving.size));
  const int n = initial.size();

  std::vector<PiecewisePath> paths(slot_count(n));
  paths[flat_offset({1, 1})] = slot_driver_path(driving, {1, 1}, initial.at(1, 1));
  for (int k = 2; k <= n; ++k) {
    for (int i = 1; i <= k; ++i) {
      TimeDependentInterval interval{
          i > 1 ? paths[flat_offset({k - 1, i - 1})] : PiecewisePath::constant(kMinusInf),
          i < k ? paths[flat_offset({k - 1, i})].shifted(-1.0) : PiecewisePath::constant(kPlusInf),
      };
      const PiecewisePath psi =
          slot_driver_path(driving, {k, i}, static_cast<double>(initial.at(i, k)));
      paths[flat_offset({k, i})] = gamma_reflect(interval, psi);
    }
  }

  // Sample every slot path at t = 0 and each driving discontinuity time.
  std::vector<double> times{0.0};
  for (const DrivingEvent& e : driving.events)
    if (e.time > 0.0 && (times.empty() || e.time != times.back())) times.push_back(e.time);
  times.erase(std::unique(times.begin(), times.end()), times.end());

  Trajectory traj;
  for (double t : times) {
    DiscretePattern p(n);
    for (std::size_t k = 0; k < paths.size(); ++k)
      p.values()[k] = std::llround(paths[k].value_at(t));
    traj.times.push_back(t);
    traj.states.push_back(std::move(p));
  }
  return traj;
}

}  // namespace interlace
