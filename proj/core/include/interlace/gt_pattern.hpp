#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "interlace/errors.hpp"

namespace interlace {

// Slot (i, j) in a triangular particle array: level j in [1, N], position
// i in [1, j]. Level 1 is the single bottom particle.
struct LevelIndex {
  int level = 1;  // j
  int pos = 1;    // i

  friend bool operator==(const LevelIndex&, const LevelIndex&) = default;
};

// Number of slots in a triangular array with n levels.
constexpr std::size_t slot_count(int n) {
  return static_cast<std::size_t>(n) * (n + 1) / 2;
}

// Flat storage order: level-major, position-minor.
// (1,1) -> 0, (1,2) -> 1, (2,2) -> 2, (1,3) -> 3, ...
constexpr std::size_t flat_offset(LevelIndex s) {
  return static_cast<std::size_t>(s.level - 1) * s.level / 2 + (s.pos - 1);
}

LevelIndex slot_from_offset(std::size_t offset);

// All slots of an N-level array in flat order.
std::vector<LevelIndex> all_slots(int n);

// One violated interlacing inequality. `where` is the slot (i, j) whose
// constraint against level j-1 failed; `left`, `mid`, `right` are the
// coordinates x_{i-1}^j, x_{i-1}^{j-1}, x_i^j involved.
struct Violation {
  enum class Kind {
    LowerOrder,  // x_{i-1}^j vs x_{i-1}^{j-1} failed
    UpperOrder,  // x_{i-1}^{j-1} vs x_i^j failed
  };
  LevelIndex where;  // (i, j) with i in [2, j]
  Kind kind;
  double left;
  double mid;
  double right;

  std::string describe() const;
};

struct ValidationResult {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

namespace detail {

template <typename T>
class BasicPattern {
 public:
  BasicPattern() = default;

  explicit BasicPattern(int n) : size_(check_size(n)), values_(slot_count(n), T{}) {}

  BasicPattern(int n, std::vector<T> values) : size_(check_size(n)), values_(std::move(values)) {
    if (values_.size() != slot_count(size_)) {
      throw StructuralError("pattern with " + std::to_string(size_) + " levels needs " +
                            std::to_string(slot_count(size_)) + " values, got " +
                            std::to_string(values_.size()));
    }
  }

  int size() const { return size_; }
  std::size_t slots() const { return values_.size(); }

  T at(LevelIndex s) const { return values_[checked_offset(s)]; }
  T at(int i, int j) const { return at(LevelIndex{j, i}); }
  void set(LevelIndex s, T v) { values_[checked_offset(s)] = v; }
  void set(int i, int j, T v) { set(LevelIndex{j, i}, v); }

  const std::vector<T>& values() const { return values_; }
  std::vector<T>& values() { return values_; }

  friend bool operator==(const BasicPattern&, const BasicPattern&) = default;

 private:
  static int check_size(int n) {
    if (n < 1) throw DomainError("pattern size must be >= 1, got " + std::to_string(n));
    return n;
  }

  std::size_t checked_offset(LevelIndex s) const {
    if (s.level < 1 || s.level > size_ || s.pos < 1 || s.pos > s.level) {
      throw StructuralError("slot (i=" + std::to_string(s.pos) + ", j=" + std::to_string(s.level) +
                            ") out of range for size " + std::to_string(size_));
    }
    return flat_offset(s);
  }

  int size_ = 0;
  std::vector<T> values_;
};

}  // namespace detail

// Integer-coordinate pattern; valid states obey the strict/weak interlacing
// x_{i-1}^j < x_{i-1}^{j-1} <= x_i^j between consecutive levels.
using DiscretePattern = detail::BasicPattern<long long>;

// Real-coordinate pattern; valid states obey the weak interlacing
// x_{i-1}^j <= x_{i-1}^{j-1} <= x_i^j.
using ContinuousPattern = detail::BasicPattern<double>;

// Checks every interlacing inequality; reports all violations, not just the
// first one.
ValidationResult validate_discrete(const DiscretePattern& p);

// Weak-inequality variant; `slack` allows rounding noise from grid schemes.
ValidationResult validate_continuous(const ContinuousPattern& p, double slack = 0.0);

// Minimal valid configuration anchored at value(1,1) = 0: value(i,j) = i - j.
DiscretePattern packed_pattern(int n);

ContinuousPattern to_continuous(const DiscretePattern& p);

// Text form: one line per level, space-separated coordinates, level 1 first.
std::string format_pattern(const DiscretePattern& p);
std::string format_pattern(const ContinuousPattern& p);
DiscretePattern parse_discrete_pattern(const std::string& text);
ContinuousPattern parse_continuous_pattern(const std::string& text);

}  // namespace interlace
