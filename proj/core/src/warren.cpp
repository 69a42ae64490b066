#include "interlace/warren.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "interlace/errors.hpp"

namespace interlace {

ContinuousPattern WarrenTrajectory::cross_section(std::size_t k) const {
  ContinuousPattern p(size);
  for (std::size_t m = 0; m < slots.size(); ++m) p.values()[m] = slots[m].values.at(k);
  return p;
}

std::vector<GridPath> brownian_grid(std::size_t count, double h, double T, SeedSpec seed) {
  if (h <= 0.0) throw DomainError("brownian_grid: step h must be positive");
  if (T < 0.0) throw DomainError("brownian_grid: horizon T must be nonnegative");
  const std::size_t steps = static_cast<std::size_t>(std::llround(T / h));
  const double scale = std::sqrt(h);
  std::vector<GridPath> paths(count);
  for (std::size_t k = 0; k < count; ++k) {
    RandomStream rng(seed.sub(k));
    GridPath& p = paths[k];
    p.step = h;
    p.values.resize(steps + 1);
    p.values[0] = 0.0;
    for (std::size_t m = 1; m <= steps; ++m) p.values[m] = p.values[m - 1] + scale * rng.normal();
  }
  return paths;
}

WarrenTrajectory continuum_sk_map(const std::vector<GridPath>& drivers,
                                  const ContinuousPattern& initial) {
  const int n = initial.size();
  if (drivers.size() != slot_count(n))
    throw StructuralError("continuum_sk_map: " + std::to_string(drivers.size()) +
                          " drivers for " + std::to_string(slot_count(n)) + " slots");
  if (auto v = validate_continuous(initial); !v.ok())
    throw DomainError("continuum_sk_map: invalid initial pattern: " +
                      v.violations.front().describe());
  const std::size_t points = drivers.front().points();
  const double h = drivers.front().step;
  for (const GridPath& d : drivers)
    if (d.points() != points || d.step != h)
      throw StructuralError("continuum_sk_map: drivers disagree on grid (step, length)");

  constexpr double inf = std::numeric_limits<double>::infinity();
  WarrenTrajectory traj;
  traj.size = n;
  traj.slots.assign(slot_count(n), GridPath{h, std::vector<double>(points)});

  // Level 1: driver shifted to the initial value.
  {
    const GridPath& d = drivers[flat_offset({1, 1})];
    GridPath& w = traj.slots[flat_offset({1, 1})];
    const double start = initial.at(1, 1);
    for (std::size_t m = 0; m < points; ++m) w.values[m] = start + d.values[m];
  }

  for (int k = 2; k <= n; ++k) {
    for (int i = 1; i <= k; ++i) {
      const GridPath& d = drivers[flat_offset({k, i})];
      GridPath& w = traj.slots[flat_offset({k, i})];
      const double* lo = i > 1 ? traj.slots[flat_offset({k - 1, i - 1})].values.data() : nullptr;
      const double* hi = i < k ? traj.slots[flat_offset({k - 1, i})].values.data() : nullptr;
      w.values[0] = initial.at(i, k);
      for (std::size_t m = 1; m < points; ++m) {
        double x = w.values[m - 1] + (d.values[m] - d.values[m - 1]);
        x = std::min(std::max(x, lo ? lo[m] : -inf), hi ? hi[m] : inf);
        w.values[m] = x;
      }
    }
  }
  return traj;
}

WarrenTrajectory warren_sample(int n, const ContinuousPattern& initial, double T, double h,
                               SeedSpec seed) {
  return continuum_sk_map(brownian_grid(slot_count(n), h, T, seed), initial);
}

WarrenTrajectory warren_sample(int n, double T, double h, SeedSpec seed) {
  return warren_sample(n, ContinuousPattern(n), T, h, seed);
}

double collision_fraction(const WarrenTrajectory& traj, double tol) {
  const std::size_t points = traj.grid_points();
  if (points <= 1) return 0.0;
  std::size_t hits = 0;
  for (std::size_t m = 1; m < points; ++m) {
    bool collided = false;
    for (int k = 2; k <= traj.size && !collided; ++k)
      for (int i = 1; i < k; ++i) {
        const double a = traj.slots[flat_offset({k, i})].values[m];
        const double b = traj.slots[flat_offset({k, i + 1})].values[m];
        if (std::abs(a - b) <= tol) {
          collided = true;
          break;
        }
      }
    if (collided) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(points - 1);
}

void write_grid_csv(std::ostream& os, const WarrenTrajectory& traj, std::size_t stride,
                    const std::vector<std::string>& comments) {
  if (stride == 0) throw DomainError("write_grid_csv: stride must be positive");
  for (const std::string& c : comments) os << "# " << c << '\n';
  os << "time,level,index,value\n";
  char tbuf[40], vbuf[40];
  const auto slots = all_slots(traj.size);
  for (std::size_t m = 0; m < traj.grid_points(); m += stride) {
    std::snprintf(tbuf, sizeof(tbuf), "%.17g", traj.step() * static_cast<double>(m));
    for (const LevelIndex s : slots) {
      std::snprintf(vbuf, sizeof(vbuf), "%.17g", traj.slots[flat_offset(s)].values[m]);
      os << tbuf << ',' << s.level << ',' << s.pos << ',' << vbuf << '\n';
    }
  }
}

}  // namespace interlace
