#include "interlace/dynamics.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "interlace/errors.hpp"

namespace interlace {

const DiscretePattern& Trajectory::at_time(double t) const {
  if (times.empty()) throw StructuralError("empty trajectory");
  // Last state with time <= t.
  auto it = std::upper_bound(times.begin(), times.end(), t);
  if (it == times.begin()) throw DomainError("trajectory queried before its start time");
  return states[static_cast<std::size_t>(it - times.begin()) - 1];
}

std::pair<DynamicsState, UpdateRecord> apply_event(const DynamicsState& state,
                                                   std::span<const int> increments, double t) {
  const DiscretePattern& prev = state.pattern;
  const int n = prev.size();
  if (increments.size() != prev.slots())
    throw StructuralError("apply_event: got " + std::to_string(increments.size()) +
                          " increments for " + std::to_string(prev.slots()) + " slots");
  if (t < state.clock)
    throw ContractError("apply_event: time " + std::to_string(t) + " precedes clock " +
                        std::to_string(state.clock));
  for (int inc : increments)
    if (inc < -1 || inc > 1)
      throw RegularityError("apply_event: increment magnitude exceeds 1");
  if (auto v = validate_discrete(prev); !v.ok())
    throw ContractError("apply_event: invalid input state: " + v.violations.front().describe());

  DiscretePattern next = prev;
  UpdateRecord record;
  record.time = t;
  record.slots.assign(prev.slots(), SlotUpdate{});

  // Level 1 copies its driver increment.
  {
    const LevelIndex s{1, 1};
    const int inc = increments[flat_offset(s)];
    next.set(s, prev.at(s) + inc);
    auto& u = record.slots[flat_offset(s)];
    u.outcome = inc > 0 ? SlotOutcome::MovedUp : inc < 0 ? SlotOutcome::MovedDown : SlotOutcome::Idle;
  }

  for (int k = 2; k <= n; ++k) {
    for (int i = 1; i <= k; ++i) {
      const LevelIndex s{k, i};
      const long long old = prev.at(s);
      auto& u = record.slots[flat_offset(s)];

      const bool push_up = i > 1 && old == next.at(i - 1, k - 1) - 1;
      const bool push_down = i < k && old == next.at(i, k - 1);
      if (push_up && push_down)
        throw ContractError("push-up and push-down both fire at (i=" + std::to_string(i) +
                            ", j=" + std::to_string(k) + "); level below is not interlacing");

      if (push_up) {
        next.set(s, old + 1);
        u = {SlotOutcome::PushedUp, LevelIndex{k - 1, i - 1}, true};
        continue;
      }
      if (push_down) {
        next.set(s, old - 1);
        u = {SlotOutcome::PushedDown, LevelIndex{k - 1, i}, true};
        continue;
      }
      const int inc = increments[flat_offset(s)];
      if (inc == +1) {
        if (i < k && next.at(i, k - 1) == old + 1) {
          next.set(s, old);
          u = {SlotOutcome::Blocked, LevelIndex{k - 1, i}, true};
        } else {
          next.set(s, old + 1);
          u.outcome = SlotOutcome::MovedUp;
        }
      } else if (inc == -1) {
        if (i > 1 && next.at(i - 1, k - 1) == old) {
          next.set(s, old);
          u = {SlotOutcome::Blocked, LevelIndex{k - 1, i - 1}, true};
        } else {
          next.set(s, old - 1);
          u.outcome = SlotOutcome::MovedDown;
        }
      } else {
        next.set(s, old);
        u.outcome = SlotOutcome::Idle;
      }
    }
  }

  if (auto v = validate_discrete(next); !v.ok())
    throw ContractError("apply_event: update broke interlacing: " + v.violations.front().describe());
  return {DynamicsState{std::move(next), t}, std::move(record)};
}

Trajectory run_dynamics(const DiscretePattern& initial, const DrivingPath& driving,
                        double horizon) {
  if (horizon > driving.horizon)
    throw DomainError("run_dynamics: horizon " + std::to_string(horizon) +
                      " exceeds the driving path's horizon " + std::to_string(driving.horizon));
  if (auto v = validate_discrete(initial); !v.ok())
    throw DomainError("run_dynamics: invalid initial pattern: " + v.violations.front().describe());
  if (initial.size() != driving.size)
    throw StructuralError("run_dynamics: pattern has " + std::to_string(initial.size()) +
                          " levels, driving path " + std::to_string(driving.size));

  Trajectory traj;
  traj.times.push_back(0.0);
  traj.states.push_back(initial);
  DynamicsState state{initial, 0.0};
  std::vector<int> increments(initial.slots(), 0);

  std::size_t k = 0;
  const auto& events = driving.events;
  while (k < events.size() && events[k].time <= horizon) {
    const double t = events[k].time;
    std::fill(increments.begin(), increments.end(), 0);
    while (k < events.size() && events[k].time == t) {
      increments[flat_offset(events[k].slot)] += events[k].increment;
      ++k;
    }
    try {
      auto [next, record] = apply_event(state, increments, t);
      state = std::move(next);
    } catch (const ContractError& e) {
      throw ContractError(std::string(e.what()) + " (at t=" + std::to_string(t) + ")");
    }
    traj.times.push_back(t);
    traj.states.push_back(state.pattern);
  }
  return traj;
}

void write_trajectory_csv(std::ostream& os, const Trajectory& traj,
                          const std::vector<std::string>& comments) {
  for (const std::string& c : comments) os << "# " << c << '\n';
  os << "time,level,index,value\n";
  char buf[40];
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    std::snprintf(buf, sizeof(buf), "%.17g", traj.times[k]);
    const DiscretePattern& p = traj.states[k];
    for (const LevelIndex s : all_slots(p.size()))
      os << buf << ',' << s.level << ',' << s.pos << ',' << p.at(s) << '\n';
  }
}

}  // namespace interlace
