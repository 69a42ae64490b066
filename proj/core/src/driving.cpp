#include "interlace/driving.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "interlace/errors.hpp"

namespace interlace {

namespace {

void sort_events(std::vector<DrivingEvent>& events) {
  std::stable_sort(events.begin(), events.end(), [](const DrivingEvent& a, const DrivingEvent& b) {
    if (a.time != b.time) return a.time < b.time;
    return flat_offset(a.slot) < flat_offset(b.slot);
  });
}

DrivingPath make_path(int n, double horizon, std::vector<DrivingEvent> events) {
  sort_events(events);
  DrivingPath path;
  path.size = n;
  path.initial.assign(slot_count(n), 0);
  path.events = std::move(events);
  path.horizon = horizon;
  return path;
}

void check_levels(int n) {
  if (n < 1) throw DomainError("driver needs N >= 1, got " + std::to_string(n));
}

}  // namespace

DrivingPath poisson_driver(int n, double rate, double horizon, SeedSpec seed) {
  check_levels(n);
  if (rate <= 0.0) throw DomainError("poisson driver needs rate > 0");
  if (horizon < 0.0) throw DomainError("poisson driver needs horizon >= 0");
  std::vector<DrivingEvent> events;
  const auto slots = all_slots(n);
  for (std::size_t k = 0; k < slots.size(); ++k) {
    RandomStream rng(seed.sub(k));
    double t = rng.exponential(rate);
    while (t <= horizon) {
      events.push_back({t, slots[k], +1});
      t += rng.exponential(rate);
    }
  }
  return make_path(n, horizon, std::move(events));
}

DrivingPath bernoulli_driver(int n, double p, long long steps, SeedSpec seed) {
  check_levels(n);
  if (p < 0.0 || p > 1.0) throw DomainError("bernoulli driver needs p in [0, 1]");
  if (steps < 0) throw DomainError("bernoulli driver needs steps >= 0");
  std::vector<DrivingEvent> events;
  const auto slots = all_slots(n);
  for (std::size_t k = 0; k < slots.size(); ++k) {
    RandomStream rng(seed.sub(k));
    for (long long s = 1; s <= steps; ++s) {
      if (rng.uniform01() < p) events.push_back({static_cast<double>(s), slots[k], +1});
    }
  }
  return make_path(n, static_cast<double>(steps), std::move(events));
}

DrivingPath lazy_walk_driver(int n, double q, long long steps, SeedSpec seed) {
  check_levels(n);
  if (q < 0.0 || q > 0.5) throw DomainError("lazy walk driver needs q in [0, 1/2]");
  if (steps < 0) throw DomainError("lazy walk driver needs steps >= 0");
  std::vector<DrivingEvent> events;
  const auto slots = all_slots(n);
  for (std::size_t k = 0; k < slots.size(); ++k) {
    RandomStream rng(seed.sub(k));
    for (long long s = 1; s <= steps; ++s) {
      const double u = rng.uniform01();
      if (u < q)
        events.push_back({static_cast<double>(s), slots[k], +1});
      else if (u < 2.0 * q)
        events.push_back({static_cast<double>(s), slots[k], -1});
    }
  }
  return make_path(n, static_cast<double>(steps), std::move(events));
}

void validate_driving(const DrivingPath& path) {
  if (path.size < 1) throw StructuralError("driving path has no levels");
  if (path.initial.size() != slot_count(path.size))
    throw StructuralError("driving path initial values: expected " +
                          std::to_string(slot_count(path.size)) + " entries, got " +
                          std::to_string(path.initial.size()));
  if (path.horizon < 0.0) throw StructuralError("driving path horizon is negative");
  double prev_time = 0.0;
  for (std::size_t k = 0; k < path.events.size(); ++k) {
    const DrivingEvent& e = path.events[k];
    if (e.increment != 1 && e.increment != -1)
      throw RegularityError("event " + std::to_string(k) + " at t=" + std::to_string(e.time) +
                            " has increment " + std::to_string(e.increment) +
                            "; unit increments required");
    if (e.slot.level < 1 || e.slot.level > path.size || e.slot.pos < 1 || e.slot.pos > e.slot.level)
      throw FormatError("event " + std::to_string(k) + " names slot (i=" +
                        std::to_string(e.slot.pos) + ", j=" + std::to_string(e.slot.level) +
                        ") outside the " + std::to_string(path.size) + "-level array");
    if (e.time < 0.0 || e.time > path.horizon)
      throw FormatError("event " + std::to_string(k) + " at t=" + std::to_string(e.time) +
                        " lies outside [0, horizon]");
    if (k > 0) {
      if (e.time < prev_time)
        throw FormatError("event times not sorted at row " + std::to_string(k));
      if (e.time == prev_time) {
        // Scan the tie group for a duplicate slot.
        for (std::size_t m = k; m-- > 0 && path.events[m].time == e.time;) {
          if (path.events[m].slot == e.slot)
            throw FormatError("duplicate event for slot (i=" + std::to_string(e.slot.pos) +
                              ", j=" + std::to_string(e.slot.level) + ") at t=" +
                              std::to_string(e.time));
        }
      }
    }
    prev_time = e.time;
  }
}

namespace {

std::string fmt_time(double t) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", t);
  return buf;
}

}  // namespace

std::string serialize_driving(const DrivingPath& path) {
  std::ostringstream os;
  os << "# horizon " << fmt_time(path.horizon) << '\n';
  for (const LevelIndex s : all_slots(path.size))
    os << "# init " << s.level << ' ' << s.pos << ' ' << path.initial[flat_offset(s)] << '\n';
  os << "time,level,index,increment\n";
  for (const DrivingEvent& e : path.events)
    os << fmt_time(e.time) << ',' << e.slot.level << ',' << e.slot.pos << ',' << e.increment
       << '\n';
  return os.str();
}

DrivingPath ingest_path(std::istream& source) {
  DrivingPath path;
  bool have_horizon = false;
  bool have_header = false;
  std::vector<std::pair<LevelIndex, long long>> inits;
  int max_level = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(source, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream ls(line.substr(1));
      std::string word;
      ls >> word;
      if (word == "horizon") {
        if (!(ls >> path.horizon)) throw FormatError("line " + std::to_string(lineno) + ": bad horizon");
        have_horizon = true;
      } else if (word == "init") {
        int j, i;
        long long v;
        if (!(ls >> j >> i >> v))
          throw FormatError("line " + std::to_string(lineno) + ": bad init entry");
        inits.push_back({LevelIndex{j, i}, v});
        max_level = std::max(max_level, j);
      }
      continue;
    }
    if (!have_header) {
      if (line != "time,level,index,increment")
        throw FormatError("line " + std::to_string(lineno) +
                          ": expected header 'time,level,index,increment'");
      have_header = true;
      continue;
    }
    std::istringstream ls(line);
    double t;
    int j, i, inc;
    char c1, c2, c3;
    if (!(ls >> t >> c1 >> j >> c2 >> i >> c3 >> inc) || c1 != ',' || c2 != ',' || c3 != ',')
      throw FormatError("line " + std::to_string(lineno) + ": bad event row '" + line + "'");
    path.events.push_back({t, LevelIndex{j, i}, inc});
    max_level = std::max(max_level, j);
  }
  if (!have_header) throw FormatError("driving file: missing event header");
  if (!have_horizon) throw FormatError("driving file: missing '# horizon' line");
  path.size = max_level;
  path.initial.assign(slot_count(max_level), 0);
  for (const auto& [slot, v] : inits) {
    if (slot.level < 1 || slot.pos < 1 || slot.pos > slot.level)
      throw FormatError("driving file: bad init slot (i=" + std::to_string(slot.pos) + ", j=" +
                        std::to_string(slot.level) + ")");
    path.initial[flat_offset(slot)] = v;
  }
  if (inits.size() != slot_count(max_level))
    throw StructuralError("driving file: expected " + std::to_string(slot_count(max_level)) +
                          " init entries for " + std::to_string(max_level) + " levels, got " +
                          std::to_string(inits.size()));
  validate_driving(path);
  return path;
}

DrivingPath ingest_path(const std::string& text) {
  std::istringstream is(text);
  return ingest_path(is);
}

}  // namespace interlace
