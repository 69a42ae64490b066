#include "interlace/stats.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>

#include "interlace/errors.hpp"

namespace interlace {

ContinuousPattern gue_corners_sample(int n, double t, RandomStream& rng) {
  if (n < 1) throw DomainError("gue_corners_sample: N must be >= 1");
  if (t <= 0.0) throw DomainError("gue_corners_sample: t must be positive");

  // Standard Hermitian draw, then a global sqrt(t) scale; eigenvalues are
  // homogeneous of degree 1, so the same seed at different t gives scaled
  // copies of one sample.
  Eigen::MatrixXcd m(n, n);
  const double off = std::sqrt(0.5);
  for (int r = 0; r < n; ++r) {
    m(r, r) = std::complex<double>(rng.normal(), 0.0);
    for (int c = r + 1; c < n; ++c) {
      const std::complex<double> z(off * rng.normal(), off * rng.normal());
      m(r, c) = z;
      m(c, r) = std::conj(z);
    }
  }
  m *= std::sqrt(t);

  ContinuousPattern p(n);
  for (int k = 1; k <= n; ++k) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m.topLeftCorner(k, k),
                                                           Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();  // ascending
    for (int i = 1; i <= k; ++i) p.set(i, k, ev(i - 1));
  }
  return p;
}

ContinuousPattern gue_corners_sample(int n, double t, SeedSpec seed) {
  RandomStream rng(seed);
  return gue_corners_sample(n, t, rng);
}

double empirical_ks(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw DomainError("empirical_ks: empty sample set");
  std::vector<double> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  const double na = static_cast<double>(sa.size()), nb = static_cast<double>(sb.size());
  std::size_t ia = 0, ib = 0;
  double sup = 0.0;
  while (ia < sa.size() && ib < sb.size()) {
    const double x = std::min(sa[ia], sb[ib]);
    while (ia < sa.size() && sa[ia] == x) ++ia;
    while (ib < sb.size() && sb[ib] == x) ++ib;
    sup = std::max(sup, std::abs(static_cast<double>(ia) / na - static_cast<double>(ib) / nb));
  }
  return sup;
}

double empirical_ks(const SampleSet& a, const SampleSet& b) {
  return empirical_ks(std::span<const double>(a.values), std::span<const double>(b.values));
}

Moments moment_summary(std::span<const double> values) {
  if (values.empty()) throw DomainError("moment_summary: empty sample set");
  Moments m;
  m.count = values.size();
  m.min = std::numeric_limits<double>::infinity();
  m.max = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (double v : values) {
    sum += v;
    m.min = std::min(m.min, v);
    m.max = std::max(m.max, v);
  }
  m.mean = sum / static_cast<double>(m.count);
  if (m.count > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - m.mean) * (v - m.mean);
    m.variance = ss / static_cast<double>(m.count - 1);
  }
  return m;
}

Moments moment_summary(const SampleSet& a) {
  return moment_summary(std::span<const double>(a.values));
}

void write_sample_dump(std::ostream& os, std::span<const ContinuousPattern> patterns,
                       const std::vector<std::string>& comments) {
  for (const std::string& c : comments) os << "# " << c << '\n';
  os << "replica,level,index,value\n";
  char buf[40];
  for (std::size_t r = 0; r < patterns.size(); ++r) {
    const ContinuousPattern& p = patterns[r];
    for (const LevelIndex s : all_slots(p.size())) {
      std::snprintf(buf, sizeof(buf), "%.17g", p.at(s));
      os << r << ',' << s.level << ',' << s.pos << ',' << buf << '\n';
    }
  }
}

std::vector<ContinuousPattern> read_sample_dump(std::istream& is) {
  std::string line;
  bool have_header = false;
  std::map<std::size_t, std::vector<std::pair<LevelIndex, double>>> rows;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!have_header) {
      if (line != "replica,level,index,value")
        throw FormatError("sample dump line " + std::to_string(lineno) +
                          ": expected header 'replica,level,index,value'");
      have_header = true;
      continue;
    }
    std::istringstream ls(line);
    std::size_t r;
    int j, i;
    double v;
    char c1, c2, c3;
    if (!(ls >> r >> c1 >> j >> c2 >> i >> c3 >> v) || c1 != ',' || c2 != ',' || c3 != ',')
      throw FormatError("sample dump line " + std::to_string(lineno) + ": bad row");
    rows[r].push_back({LevelIndex{j, i}, v});
  }
  if (!have_header) throw FormatError("sample dump: missing header");
  std::vector<ContinuousPattern> out;
  for (auto& [r, entries] : rows) {
    int n = 0;
    for (const auto& [s, v] : entries) n = std::max(n, s.level);
    if (entries.size() != slot_count(n))
      throw StructuralError("sample dump: replica " + std::to_string(r) + " has " +
                            std::to_string(entries.size()) + " rows, expected " +
                            std::to_string(slot_count(n)));
    ContinuousPattern p(n);
    for (const auto& [s, v] : entries) p.set(s, v);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace interlace
