#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "interlace/gt_pattern.hpp"
#include "oracles.hpp"

using namespace interlace;

TEST_CASE("flat offsets invert for every slot up to N = 8") {
  for (int n = 1; n <= 8; ++n) {
    std::size_t expected = 0;
    for (const LevelIndex s : all_slots(n)) {
      CHECK(flat_offset(s) == expected);
      CHECK(slot_from_offset(expected) == s);
      ++expected;
    }
    CHECK(expected == slot_count(n));
  }
}

TEST_CASE("validate_discrete accepts the packed N = 3 configuration") {
  const DiscretePattern p(3, {0, -1, 0, -2, -1, 0});
  CHECK(validate_discrete(p).ok());
}

TEST_CASE("equal columns violate the strict part of the discrete interlacing") {
  const DiscretePattern p(2, {0, 0, 0});
  const auto result = validate_discrete(p);
  REQUIRE(result.violations.size() == 1);
  const Violation& v = result.violations.front();
  CHECK(v.where == LevelIndex{2, 2});
  CHECK(v.kind == Violation::Kind::LowerOrder);
}

TEST_CASE("single particle has no constraints") {
  CHECK(validate_discrete(DiscretePattern(1, {5})).ok());
}

TEST_CASE("continuous validation admits equality but not order breaches") {
  CHECK(validate_continuous(ContinuousPattern(2, {0.0, 0.0, 0.0})).ok());
  CHECK_FALSE(validate_continuous(ContinuousPattern(2, {0.0, 0.5, 1.0})).ok());
  CHECK(validate_continuous(ContinuousPattern(2, {1.5, -3.0, 2.7})).ok());
}

TEST_CASE("violations are reported exhaustively") {
  // Both inequalities broken at (2,2) plus one at (2,3).
  const DiscretePattern p(3, {0, 5, -7, -2, -1, 0});
  const auto result = validate_discrete(p);
  CHECK(result.violations.size() >= 2);
}

TEST_CASE("packed patterns") {
  CHECK(packed_pattern(1) == DiscretePattern(1, {0}));
  CHECK(packed_pattern(2) == DiscretePattern(2, {0, -1, 0}));
  CHECK(packed_pattern(3) == DiscretePattern(3, {0, -1, 0, -2, -1, 0}));
  for (int n = 1; n <= 8; ++n) CHECK(validate_discrete(packed_pattern(n)).ok());
  CHECK_THROWS_AS(packed_pattern(0), DomainError);
}

TEST_CASE("wrong entry count is a structural error, not an interlacing one") {
  CHECK_THROWS_AS(DiscretePattern(3, {0, -1, 0}), StructuralError);
  CHECK_THROWS_AS((void)DiscretePattern(2).at(3, 3), StructuralError);
}

TEST_CASE("strict discrete interlacing implies the weak continuous one") {
  std::mt19937_64 gen(41);
  for (int rep = 0; rep < 200; ++rep) {
    const auto p = oracle::random_pattern(1 + rep % 6, gen);
    REQUIRE(validate_discrete(p).ok());
    CHECK(validate_continuous(to_continuous(p)).ok());
  }
}

TEST_CASE("valid patterns are nondecreasing within each level") {
  std::mt19937_64 gen(42);
  for (int rep = 0; rep < 200; ++rep) {
    const auto p = oracle::random_pattern(2 + rep % 5, gen);
    for (int j = 2; j <= p.size(); ++j)
      for (int i = 2; i <= j; ++i) CHECK(p.at(i - 1, j) <= p.at(i, j));
  }
}

TEST_CASE("pattern text round trip") {
  std::mt19937_64 gen(43);
  for (int rep = 0; rep < 50; ++rep) {
    const auto p = oracle::random_pattern(1 + rep % 6, gen);
    CHECK(parse_discrete_pattern(format_pattern(p)) == p);
  }
  const ContinuousPattern c(2, {0.25, -1.125, 3.5});
  CHECK(parse_continuous_pattern(format_pattern(c)) == c);
}

TEST_CASE("pattern text rejects ragged and garbled input") {
  CHECK_THROWS_AS(parse_discrete_pattern("0\n-1 0 1\n"), StructuralError);
  CHECK_THROWS_AS(parse_discrete_pattern("zero\n"), FormatError);
  CHECK_THROWS_AS(parse_discrete_pattern(""), FormatError);
}
