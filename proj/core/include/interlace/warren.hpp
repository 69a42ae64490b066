#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "interlace/gt_pattern.hpp"
#include "interlace/rng.hpp"

namespace interlace {

// Real-valued path sampled on the uniform grid 0, h, 2h, ..., T.
struct GridPath {
  double step = 0.0;
  std::vector<double> values;

  std::size_t points() const { return values.size(); }
  double time_of(std::size_t k) const { return step * static_cast<double>(k); }

  friend bool operator==(const GridPath&, const GridPath&) = default;
};

// Grid discretization of the reflected interlacing Brownian system: one
// GridPath per slot, interlacing at every grid time.
struct WarrenTrajectory {
  int size = 0;                 // N
  std::vector<GridPath> slots;  // flat order

  std::size_t grid_points() const { return slots.empty() ? 0 : slots.front().points(); }
  double step() const { return slots.empty() ? 0.0 : slots.front().step; }

  // Cross-section at grid index k.
  ContinuousPattern cross_section(std::size_t k) const;
};

// `count` independent Brownian paths on the grid: Gaussian increments of
// variance h, started at 0.
std::vector<GridPath> brownian_grid(std::size_t count, double h, double T, SeedSpec seed);

// Level-by-level grid clamp: level 1 is its driver shifted to start at the
// initial value; each higher slot steps by its driver increment and is
// clamped into the interval cut out by the already-built level below,
// boundaries taken at the end-of-step grid time.
WarrenTrajectory continuum_sk_map(const std::vector<GridPath>& drivers,
                                  const ContinuousPattern& initial);

// Composes brownian_grid with continuum_sk_map.
WarrenTrajectory warren_sample(int n, const ContinuousPattern& initial, double T, double h,
                               SeedSpec seed);

// warren_sample from the all-zeros pattern.
WarrenTrajectory warren_sample(int n, double T, double h, SeedSpec seed);

// Fraction of grid times (after 0) at which two same-level values coincide
// within `tol`. Collision diagnostic; expected to shrink as h -> 0.
double collision_fraction(const WarrenTrajectory& traj, double tol = 1e-9);

// Grid trajectory CSV: header "time,level,index,value"; every stride-th grid
// time is emitted.
void write_grid_csv(std::ostream& os, const WarrenTrajectory& traj, std::size_t stride = 1,
                    const std::vector<std::string>& comments = {});

}  // namespace interlace
