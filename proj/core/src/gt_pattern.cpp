#include "interlace/gt_pattern.hpp"

#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

namespace interlace {

LevelIndex slot_from_offset(std::size_t offset) {
  // Invert j(j-1)/2 + (i-1).
  int j = static_cast<int>((std::sqrt(8.0 * static_cast<double>(offset) + 1.0) + 1.0) / 2.0);
  while (slot_count(j) <= offset) ++j;
  while (j > 1 && slot_count(j - 1) > offset) --j;
  int i = static_cast<int>(offset - slot_count(j - 1)) + 1;
  return LevelIndex{j, i};
}

std::vector<LevelIndex> all_slots(int n) {
  std::vector<LevelIndex> out;
  out.reserve(slot_count(n));
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= j; ++i) out.push_back(LevelIndex{j, i});
  return out;
}

std::string Violation::describe() const {
  std::ostringstream os;
  os << "interlacing violated at (i=" << where.pos << ", j=" << where.level << "): ";
  if (kind == Kind::LowerOrder) {
    os << "x(" << where.pos - 1 << "," << where.level << ") = " << left << " vs x(" << where.pos - 1
       << "," << where.level - 1 << ") = " << mid;
  } else {
    os << "x(" << where.pos - 1 << "," << where.level - 1 << ") = " << mid << " vs x(" << where.pos
       << "," << where.level << ") = " << right;
  }
  return os.str();
}

namespace {

template <typename P, typename LowerFail, typename UpperFail>
ValidationResult validate_impl(const P& p, LowerFail lower_fail, UpperFail upper_fail) {
  ValidationResult result;
  for (int j = 2; j <= p.size(); ++j) {
    for (int i = 2; i <= j; ++i) {
      const double left = static_cast<double>(p.at(i - 1, j));
      const double mid = static_cast<double>(p.at(i - 1, j - 1));
      const double right = static_cast<double>(p.at(i, j));
      if (lower_fail(left, mid))
        result.violations.push_back({LevelIndex{j, i}, Violation::Kind::LowerOrder, left, mid, right});
      if (upper_fail(mid, right))
        result.violations.push_back({LevelIndex{j, i}, Violation::Kind::UpperOrder, left, mid, right});
    }
  }
  return result;
}

}  // namespace

ValidationResult validate_discrete(const DiscretePattern& p) {
  // x_{i-1}^j < x_{i-1}^{j-1} <= x_i^j
  return validate_impl(
      p, [](double a, double b) { return !(a < b); }, [](double b, double c) { return !(b <= c); });
}

ValidationResult validate_continuous(const ContinuousPattern& p, double slack) {
  return validate_impl(
      p, [slack](double a, double b) { return !(a <= b + slack); },
      [slack](double b, double c) { return !(b <= c + slack); });
}

DiscretePattern packed_pattern(int n) {
  DiscretePattern p(n);
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= j; ++i) p.set(i, j, i - j);
  return p;
}

ContinuousPattern to_continuous(const DiscretePattern& p) {
  ContinuousPattern out(p.size());
  for (std::size_t k = 0; k < p.slots(); ++k)
    out.values()[k] = static_cast<double>(p.values()[k]);
  return out;
}

namespace {

std::string fmt_value(long long v) { return std::to_string(v); }

std::string fmt_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

template <typename P>
std::string format_impl(const P& p) {
  std::ostringstream os;
  for (int j = 1; j <= p.size(); ++j) {
    for (int i = 1; i <= j; ++i) {
      if (i > 1) os << ' ';
      os << fmt_value(p.at(i, j));
    }
    os << '\n';
  }
  return os.str();
}

template <typename P, typename Parse>
P parse_impl(const std::string& text, Parse parse_one) {
  std::istringstream is(text);
  std::vector<std::vector<typename decltype(parse_one(""))::value_type>> levels;
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    std::vector<typename decltype(parse_one(""))::value_type> row;
    std::string tok;
    while (ls >> tok) {
      auto v = parse_one(tok);
      if (!v) throw FormatError("pattern text: cannot parse coordinate '" + tok + "'");
      row.push_back(*v);
    }
    levels.push_back(std::move(row));
  }
  if (levels.empty()) throw FormatError("pattern text: no levels");
  const int n = static_cast<int>(levels.size());
  P p(n);
  for (int j = 1; j <= n; ++j) {
    if (static_cast<int>(levels[j - 1].size()) != j)
      throw StructuralError("pattern text: level " + std::to_string(j) + " has " +
                            std::to_string(levels[j - 1].size()) + " entries, expected " +
                            std::to_string(j));
    for (int i = 1; i <= j; ++i) p.set(i, j, levels[j - 1][i - 1]);
  }
  return p;
}

}  // namespace

std::string format_pattern(const DiscretePattern& p) { return format_impl(p); }
std::string format_pattern(const ContinuousPattern& p) { return format_impl(p); }

DiscretePattern parse_discrete_pattern(const std::string& text) {
  return parse_impl<DiscretePattern>(text, [](const std::string& tok) -> std::optional<long long> {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (used != tok.size()) return std::nullopt;
    return v;
  });
}

ContinuousPattern parse_continuous_pattern(const std::string& text) {
  return parse_impl<ContinuousPattern>(text, [](const std::string& tok) -> std::optional<double> {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (used != tok.size()) return std::nullopt;
    return v;
  });
}

}  // namespace interlace
