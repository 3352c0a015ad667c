#include "projlin/montecarlo.hpp"

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "projlin/error.hpp"
#include "projlin/expectation.hpp"
#include "projlin/random_tree.hpp"

namespace projlin {
namespace {

RootedTree heads(std::vector<Vertex> h) { return from_head_vector(h); }

TEST(EstimateTest, SingleEdgeIsExact) {
  const MCEstimate e = estimate_expected_D(heads({0, 1}), 50, 9);
  EXPECT_EQ(e.z, 50u);
  EXPECT_EQ(e.seed, 9u);
  EXPECT_DOUBLE_EQ(e.mean_D, 1.0);
}

TEST(EstimateTest, StarConverges) {
  const MCEstimate e = estimate_expected_D(heads({0, 1, 1, 1, 1}), 100000, 1);
  EXPECT_NEAR(e.mean_D, 8.0, 0.05);
}

TEST(EstimateTest, DeterministicGivenSeed) {
  std::mt19937_64 rng(4);
  const RootedTree t = random_labeled_tree(60, rng);
  EXPECT_EQ(estimate_expected_D(t, 1000, 42).mean_D, estimate_expected_D(t, 1000, 42).mean_D);
  EXPECT_NE(estimate_expected_D(t, 1000, 42).mean_D, estimate_expected_D(t, 1000, 43).mean_D);
}

TEST(EstimateTest, ZeroSamplesRejected) {
  EXPECT_THROW(estimate_expected_D(heads({0, 1}), 0, 1), Error);
}

// Error shrinks roughly like 1/sqrt(z) over a batch of random trees.
TEST(EstimateTest, ErrorShrinksWithSamples) {
  std::mt19937_64 rng(10);
  double small = 0.0;
  double large = 0.0;
  for (int i = 0; i < 50; ++i) {
    const RootedTree t = random_labeled_tree(5 + rng() % 30, rng);
    const Rational exact = expected_D_projective(t);
    small += std::abs(relative_error(estimate_expected_D(t, 10, i).mean_D, exact));
    large += std::abs(relative_error(estimate_expected_D(t, 10000, i).mean_D, exact));
  }
  EXPECT_LT(large, small / 5);
}

TEST(RelativeErrorTest, Values) {
  EXPECT_NEAR(relative_error(8.04, Rational(8)), 0.005, 1e-12);
  EXPECT_DOUBLE_EQ(relative_error(4.5, Rational(9, 2)), 0.0);
  EXPECT_DOUBLE_EQ(relative_error(3.0, Rational(9, 2)), -1.0 / 3);
  try {
    relative_error(1.0, Rational(0));
    FAIL() << "expected ZeroExact";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kZeroExact);
  }
}

TEST(RelativeErrorTest, Antisymmetric) {
  for (double x : {0.1, 0.5, 2.0}) {
    EXPECT_DOUBLE_EQ(relative_error(10 + x, Rational(10)), -relative_error(10 - x, Rational(10)));
  }
}

TEST(AggregateTest, GroupsBySize) {
  const std::vector<ErrorRecord> records{{5, -0.2}, {3, 0.1}, {3, 0.3}};
  const auto stats = aggregate_errors(records);
  ASSERT_EQ(stats.size(), 2u);
  EXPECT_EQ(stats[0].n, 3u);
  EXPECT_EQ(stats[0].samples, 2u);
  EXPECT_DOUBLE_EQ(stats[0].mean_err, 0.2);
  EXPECT_DOUBLE_EQ(stats[0].min_err, 0.1);
  EXPECT_DOUBLE_EQ(stats[0].max_err, 0.3);
  EXPECT_GE(stats[0].ci_low, 0.1);
  EXPECT_LE(stats[0].ci_high, 0.3);
  EXPECT_EQ(stats[1].n, 5u);
  EXPECT_DOUBLE_EQ(stats[1].ci_low, -0.2);
  EXPECT_DOUBLE_EQ(stats[1].ci_high, -0.2);
}

TEST(AggregateTest, Empty) {
  EXPECT_THROW(aggregate_errors(std::vector<ErrorRecord>{}), Error);
}

TEST(AggregateTest, GroupIntervalIndependentOfOtherGroups) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> noise(0.0, 0.01);
  std::vector<ErrorRecord> only;
  for (int i = 0; i < 100; ++i) only.push_back({7, noise(rng)});
  std::vector<ErrorRecord> mixed = only;
  for (int i = 0; i < 100; ++i) mixed.push_back({4, noise(rng)});
  const auto a = aggregate_errors(only);
  const auto b = aggregate_errors(mixed);
  EXPECT_EQ(a[0].ci_low, b[1].ci_low);
  EXPECT_EQ(a[0].ci_high, b[1].ci_high);
}

TEST(BootstrapTest, IntervalContainsMeanAndIsOrdered) {
  std::mt19937_64 data(3);
  std::normal_distribution<double> noise(1.0, 2.0);
  std::vector<double> values(500);
  double sum = 0.0;
  for (double& v : values) sum += v = noise(data);
  std::mt19937_64 rng(5);
  const Interval ci = bootstrap_mean_interval(values, {}, rng);
  EXPECT_LT(ci.low, sum / 500);
  EXPECT_GT(ci.high, sum / 500);
  // width close to 2 * 2.576 * sigma / sqrt(m)
  EXPECT_NEAR(ci.high - ci.low, 2 * 2.576 * 2.0 / std::sqrt(500.0), 0.1);
}

// 99% intervals over 1000 replications of 1000 draws each.
TEST(BootstrapTest, Coverage) {
  std::mt19937_64 data(2718);
  std::normal_distribution<double> noise(0.0, 0.01);
  int covered = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    std::vector<double> values(1000);
    for (double& v : values) v = noise(data);
    BootstrapOptions opts;
    opts.seed = static_cast<std::uint64_t>(rep);
    std::mt19937_64 rng(opts.seed);
    const Interval ci = bootstrap_mean_interval(values, opts, rng);
    covered += ci.low <= 0.0 && 0.0 <= ci.high;
  }
  EXPECT_GE(covered, 985);
}

}  // namespace
}  // namespace projlin
