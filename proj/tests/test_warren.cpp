#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "interlace/errors.hpp"
#include "interlace/stats.hpp"
#include "interlace/warren.hpp"

using namespace interlace;

TEST_CASE("brownian grid basics") {
  CHECK_THROWS_AS(brownian_grid(1, 0.0, 1.0, {1, 0}), DomainError);
  CHECK_THROWS_AS(brownian_grid(1, -0.1, 1.0, {1, 0}), DomainError);

  const auto flat = brownian_grid(3, 0.01, 0.0, {1, 0});
  REQUIRE(flat.size() == 3);
  for (const GridPath& p : flat) {
    CHECK(p.points() == 1);
    CHECK(p.values[0] == 0.0);
  }

  CHECK(brownian_grid(2, 1e-3, 1.0, {5, 9}) == brownian_grid(2, 1e-3, 1.0, {5, 9}));
  CHECK(brownian_grid(2, 1e-3, 1.0, {5, 9}) != brownian_grid(2, 1e-3, 1.0, {5, 10}));
}

TEST_CASE("endpoint variance of the grid Brownian motion is 1 at t = 1") {
  const std::size_t reps = 10000;
  double sum = 0.0, sumsq = 0.0;
  for (std::size_t r = 0; r < reps; ++r) {
    const auto paths = brownian_grid(1, 1e-3, 1.0, SeedSpec{17, r});
    const double x = paths[0].values.back();
    sum += x;
    sumsq += x * x;
  }
  const double mean = sum / reps;
  const double var = sumsq / reps - mean * mean;
  CHECK(var > 0.97);
  CHECK(var < 1.03);
}

TEST_CASE("single-level map returns the driver exactly") {
  const auto drivers = brownian_grid(1, 1e-2, 1.0, {23, 0});
  const auto traj = continuum_sk_map(drivers, ContinuousPattern(1));
  CHECK(traj.slots[0].values == drivers[0].values);
}

TEST_CASE("one clamped step") {
  // Slot (1,2) starts at 0.5, its driver rises 0.4, the level-1 boundary
  // caps it at 0.7.
  std::vector<GridPath> drivers(3);
  for (auto& d : drivers) d = GridPath{1.0, {0.0, 0.0}};
  drivers[flat_offset({2, 1})].values = {0.0, 0.4};
  const ContinuousPattern start(2, {0.7, 0.5, 0.7});
  const auto traj = continuum_sk_map(drivers, start);
  CHECK(traj.slots[flat_offset({2, 1})].values[1] == doctest::Approx(0.7));
  CHECK(traj.slots[flat_offset({1, 1})].values[1] == 0.7);
}

TEST_CASE("degenerate boundaries pin the middle slot") {
  std::vector<GridPath> drivers(6);
  for (auto& d : drivers) d = GridPath{1.0, {0.0, 0.0}};
  drivers[flat_offset({3, 2})].values = {0.0, 5.0};
  // Level 2 slots both start at c = 1 and stay; slot (2,3) is pinned to 1.
  ContinuousPattern start(3, {1.0, 1.0, 1.0, 1.0, 1.0, 1.0});
  const auto traj = continuum_sk_map(drivers, start);
  CHECK(traj.slots[flat_offset({3, 2})].values[1] == 1.0);
}

TEST_CASE("mismatched grids are a structural error") {
  std::vector<GridPath> drivers{GridPath{1.0, {0.0, 0.0}}, GridPath{0.5, {0.0, 0.0}},
                                GridPath{1.0, {0.0, 0.0}}};
  CHECK_THROWS_AS(continuum_sk_map(drivers, ContinuousPattern(2)), StructuralError);
  CHECK_THROWS_AS(continuum_sk_map(drivers, ContinuousPattern(3)), StructuralError);
}

TEST_CASE("warren sampler is deterministic and interlaces everywhere") {
  const auto a = warren_sample(3, 1.0, 1e-2, {31, 4});
  const auto b = warren_sample(3, 1.0, 1e-2, {31, 4});
  for (std::size_t m = 0; m < a.slots.size(); ++m) CHECK(a.slots[m].values == b.slots[m].values);

  for (std::size_t k = 0; k < a.grid_points(); ++k)
    CHECK(validate_continuous(a.cross_section(k), 1e-12).ok());
}

TEST_CASE("one-sided slots respect their single boundary") {
  const auto traj = warren_sample(4, 1.0, 1e-2, {37, 1});
  for (std::size_t m = 0; m < traj.grid_points(); ++m) {
    for (int k = 2; k <= 4; ++k) {
      CHECK(traj.slots[flat_offset({k, 1})].values[m] <=
            traj.slots[flat_offset({k - 1, 1})].values[m] + 1e-12);
      CHECK(traj.slots[flat_offset({k, k})].values[m] >=
            traj.slots[flat_offset({k - 1, k - 1})].values[m] - 1e-12);
    }
  }
}

TEST_CASE("level-1 marginal at t = 1 is standard normal") {
  const std::size_t reps = 10000;
  std::vector<double> endpoints(reps), reference(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    const auto traj = warren_sample(1, 1.0, 1e-3, SeedSpec{41, r});
    endpoints[r] = traj.slots[0].values.back();
  }
  RandomStream rng({42, 0});
  for (std::size_t r = 0; r < reps; ++r) reference[r] = rng.normal();
  CHECK(empirical_ks(endpoints, reference) <= 0.03);
}

TEST_CASE("mean top-level gap at t = 1 for two levels") {
  const std::size_t reps = 10000;
  double sum = 0.0;
  for (std::size_t r = 0; r < reps; ++r) {
    const auto traj = warren_sample(2, 1.0, 1e-3, SeedSpec{43, r});
    sum += traj.slots[flat_offset({2, 2})].values.back() -
           traj.slots[flat_offset({2, 1})].values.back();
  }
  const double mean = sum / reps;
  // 4 / sqrt(pi), up to grid bias and Monte Carlo noise.
  CHECK(mean > 2.21);
  CHECK(mean < 2.31);
}

TEST_CASE("collision fraction is monitored and shrinks with the step") {
  double coarse = 0.0, fine = 0.0;
  const int reps = 5;
  for (int r = 0; r < reps; ++r) {
    coarse += collision_fraction(warren_sample(3, 1.0, 1e-2, SeedSpec{47, static_cast<std::uint64_t>(r)}), 1e-9);
    fine += collision_fraction(warren_sample(3, 1.0, 1e-3, SeedSpec{47, static_cast<std::uint64_t>(r)}), 1e-9);
  }
  coarse /= reps;
  fine /= reps;
  CHECK(coarse >= 0.0);
  CHECK(coarse <= 1.0);
  // Monitored trend, generous slack.
  CHECK(fine <= coarse + 0.05);
}

TEST_CASE("grid CSV shape and stride") {
  const auto traj = warren_sample(2, 0.01, 1e-3, {51, 0});
  std::ostringstream os;
  write_grid_csv(os, traj, 5, {"config {}"});
  const std::string text = os.str();
  CHECK(text.rfind("# config {}\ntime,level,index,value\n", 0) == 0);
  // 11 grid points, stride 5 -> rows at indices 0, 5, 10.
  std::size_t rows = 0;
  for (char c : text) rows += c == '\n';
  CHECK(rows == 2 + 3 * slot_count(2));
  CHECK_THROWS_AS(write_grid_csv(os, traj, 0), DomainError);
}
