#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "interlace/gt_pattern.hpp"
#include "interlace/rng.hpp"

namespace interlace {

// A labelled bag of scalar observations (one marginal).
struct SampleSet {
  std::string label;
  std::vector<double> values;
};

// One draw from the corner (minors) process of a Gaussian Hermitian matrix
// scaled by sqrt(t): level k holds the ascending eigenvalues of the top-left
// k x k corner. Diagonal entries have variance 1; off-diagonal real and
// imaginary parts variance 1/2, so the 1 x 1 corner is N(0, t).
ContinuousPattern gue_corners_sample(int n, double t, RandomStream& rng);
ContinuousPattern gue_corners_sample(int n, double t, SeedSpec seed);

// Exact two-sample Kolmogorov-Smirnov statistic sup_x |F_a(x) - F_b(x)|.
double empirical_ks(std::span<const double> a, std::span<const double> b);
double empirical_ks(const SampleSet& a, const SampleSet& b);

struct Moments {
  double mean = 0.0;
  double variance = 0.0;  // unbiased (divisor count - 1); 0 for a single point
  double min = 0.0;
  double max = 0.0;
  std::size_t count = 0;
};

Moments moment_summary(std::span<const double> values);
Moments moment_summary(const SampleSet& a);

// Sample dump CSV: header "replica,level,index,value", one row per slot of
// each pattern.
void write_sample_dump(std::ostream& os, std::span<const ContinuousPattern> patterns,
                       const std::vector<std::string>& comments = {});
std::vector<ContinuousPattern> read_sample_dump(std::istream& is);

}  // namespace interlace
