#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "interlace/driving.hpp"
#include "interlace/gt_pattern.hpp"

namespace interlace {

// State of the block/push dynamics at one instant.
struct DynamicsState {
  DiscretePattern pattern;
  double clock = 0.0;
};

enum class SlotOutcome {
  Idle,
  MovedUp,
  MovedDown,
  PushedUp,    // pushed +1 by the lower-left neighbour on the level below
  PushedDown,  // pushed -1 by the neighbour directly below
  Blocked,
};

struct SlotUpdate {
  SlotOutcome outcome = SlotOutcome::Idle;
  LevelIndex partner;        // pusher/blocker, valid iff has_partner
  bool has_partner = false;
};

struct UpdateRecord {
  double time = 0.0;
  std::vector<SlotUpdate> slots;  // flat order
};

// Piecewise-constant right-continuous record of the dynamics: states[0] is
// the state at time 0, every later entry the state right after one update.
struct Trajectory {
  std::vector<double> times;
  std::vector<DiscretePattern> states;

  const DiscretePattern& at_time(double t) const;

  friend bool operator==(const Trajectory&, const Trajectory&) = default;
};

// One sequential update at time t. Levels are swept in order 1..N; within a
// level each slot reads only the already-updated level below and its own
// pre-update value, so the within-level order does not matter. Steps per
// slot, short-circuiting in this order: push up, push down, then the slot's
// own driver increment (with blocking).
std::pair<DynamicsState, UpdateRecord> apply_event(const DynamicsState& state,
                                                   std::span<const int> increments, double t);

// Runs the dynamics over the driving path's discontinuity times up to
// `horizon`, grouping simultaneous events into one sequential update. Only
// the driver's increments matter; its initial values are ignored.
Trajectory run_dynamics(const DiscretePattern& initial, const DrivingPath& driving,
                        double horizon);

// Trajectory CSV: header "time,level,index,value", full pattern at t = 0 and
// after each update. `comment` lines are emitted first, prefixed with "# ".
void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                          const std::vector<std::string>& comments = {});

}  // namespace interlace
