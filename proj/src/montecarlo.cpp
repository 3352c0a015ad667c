#include "projlin/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "projlin/arrangement.hpp"
#include "projlin/error.hpp"

namespace projlin {

namespace {

// Linear interpolation between order statistics of a sorted sample.
double quantile(const std::vector<double>& sorted, double q) {
  if (sorted.size() == 1) return sorted.front();
  const double h = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

}  // namespace

MCEstimate estimate_expected_D(const RootedTree& tree, std::uint64_t z, std::uint64_t seed) {
  if (z == 0) throw Error(ErrorKind::kOutOfRange, "at least one sample is needed");
  std::mt19937_64 rng(seed);
  ProjectiveSampler sampler(tree);
  unsigned __int128 total = 0;
  for (std::uint64_t i = 0; i < z; ++i) total += sampler.sample_sum_edge_lengths(rng);
  return {z, static_cast<double>(total) / static_cast<double>(z), seed};
}

double relative_error(double estimate, const Rational& exact) {
  if (exact <= 0) {
    throw Error(ErrorKind::kZeroExact, "relative error is undefined for an exact value of " +
                                           format_rational(exact));
  }
  const double reference = to_double(exact);
  return (estimate - reference) / reference;
}

Interval bootstrap_mean_interval(std::span<const double> values, const BootstrapOptions& options,
                                 std::mt19937_64& rng) {
  if (values.empty()) throw Error(ErrorKind::kOutOfRange, "bootstrap of an empty sample");
  const std::size_t m = values.size();
  const std::size_t resamples = std::max<std::size_t>(options.resamples, 1);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  std::vector<double> means(resamples);
  for (double& mean : means) {
    double sum = 0.0;
    for (std::size_t i = 0; i < m; ++i) sum += values[pick(rng)];
    mean = sum / static_cast<double>(m);
  }
  std::sort(means.begin(), means.end());
  const double tail = (1.0 - options.confidence) / 2.0;
  return {quantile(means, tail), quantile(means, 1.0 - tail)};
}

std::vector<ErrorStats> aggregate_errors(std::span<const ErrorRecord> records,
                                         const BootstrapOptions& options) {
  if (records.empty()) throw Error(ErrorKind::kOutOfRange, "no error records to aggregate");
  std::map<std::size_t, std::vector<double>> groups;
  for (const ErrorRecord& r : records) groups[r.n].push_back(r.rel_err);

  std::vector<ErrorStats> out;
  out.reserve(groups.size());
  for (const auto& [n, errors] : groups) {
    ErrorStats stats;
    stats.n = n;
    stats.samples = errors.size();
    double sum = 0.0;
    for (double e : errors) sum += e;
    stats.mean_err = sum / static_cast<double>(errors.size());
    auto [lo, hi] = std::minmax_element(errors.begin(), errors.end());
    stats.min_err = *lo;
    stats.max_err = *hi;
    std::mt19937_64 rng(options.seed ^ (0x9e3779b97f4a7c15ULL * (n + 1)));
    const Interval ci = bootstrap_mean_interval(errors, options, rng);
    stats.ci_low = ci.low;
    stats.ci_high = ci.high;
    out.push_back(stats);
  }
  return out;
}

}  // namespace projlin
