#ifndef PROJLIN_MONTECARLO_HPP_
#define PROJLIN_MONTECARLO_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "projlin/numeric.hpp"
#include "projlin/tree.hpp"

namespace projlin {

struct MCEstimate {
  std::uint64_t z = 0;
  double mean_D = 0.0;
  std::uint64_t seed = 0;
};

// Average sum of edge lengths over z uniformly random projective
// arrangements. Deterministic given the seed; O(z n).
MCEstimate estimate_expected_D(const RootedTree& tree, std::uint64_t z, std::uint64_t seed);

// (estimate - exact) / exact. Throws ZeroExact unless exact > 0.
double relative_error(double estimate, const Rational& exact);

struct ErrorRecord {
  std::size_t n = 0;
  double rel_err = 0.0;
};

struct ErrorStats {
  std::size_t n = 0;
  std::size_t samples = 0;
  double mean_err = 0.0;
  double min_err = 0.0;
  double max_err = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
};

struct BootstrapOptions {
  std::size_t resamples = 1000;
  double confidence = 0.99;
  std::uint64_t seed = 0x5eed;
};

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

// Percentile bootstrap interval for the mean of `values`.
Interval bootstrap_mean_interval(std::span<const double> values, const BootstrapOptions& options,
                                 std::mt19937_64& rng);

// Groups records by n (ascending) and summarizes each group. Every group's
// bootstrap uses its own generator derived from options.seed and n, so a
// group's interval does not depend on which other sizes are present.
std::vector<ErrorStats> aggregate_errors(std::span<const ErrorRecord> records,
                                         const BootstrapOptions& options = {});

}  // namespace projlin

#endif  // PROJLIN_MONTECARLO_HPP_
