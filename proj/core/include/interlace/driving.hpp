#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "interlace/gt_pattern.hpp"
#include "interlace/rng.hpp"

namespace interlace {

// One unit jump of one driving coordinate.
struct DrivingEvent {
  double time = 0.0;
  LevelIndex slot;
  int increment = +1;  // -1 or +1

  friend bool operator==(const DrivingEvent&, const DrivingEvent&) = default;
};

// A cadlag unit-step path per slot: piecewise constant, jumps at the listed
// events. Event times are nondecreasing and no two events share (time, slot).
struct DrivingPath {
  int size = 0;                       // N
  std::vector<long long> initial;     // flat slot order, slot_count(size) entries
  std::vector<DrivingEvent> events;   // time-sorted
  double horizon = 0.0;

  friend bool operator==(const DrivingPath&, const DrivingPath&) = default;
};

// Independent rate-`rate` Poisson clock per slot; every jump is +1.
DrivingPath poisson_driver(int n, double rate, double horizon, SeedSpec seed);

// Per slot, i.i.d. Bernoulli(p) increments at integer times 1..steps,
// extrapolated to a piecewise-constant cadlag path.
DrivingPath bernoulli_driver(int n, double p, long long steps, SeedSpec seed);

// Per slot and integer time: +1 with probability q, -1 with probability q,
// else no move. Exercises negative increments.
DrivingPath lazy_walk_driver(int n, double q, long long steps, SeedSpec seed);

// Event-list CSV: leading comment block "# horizon T" and one "# init j i v"
// per slot, then header "time,level,index,increment" and one row per event.
std::string serialize_driving(const DrivingPath& path);
DrivingPath ingest_path(std::istream& source);
DrivingPath ingest_path(const std::string& text);

// Validates an assembled path against the regularity rules (sorted times,
// unit increments, no duplicate (time, slot), horizon bounds). Throws.
void validate_driving(const DrivingPath& path);

}  // namespace interlace
