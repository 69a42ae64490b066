#pragma once

#include <stdexcept>
#include <string>

namespace interlace {

// Parameter outside the documented domain (negative rate, N = 0, ...).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input text that does not parse or is ill-ordered (bad CSV, unsorted times).
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A path that parses but breaks the unit-step / cadlag rules.
struct RegularityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shape mismatch: wrong entry counts, mismatched grids or horizons.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A caller handed an operation a state that violates its contract.
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace interlace
