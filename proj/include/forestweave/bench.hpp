#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "forestweave/generators.hpp"

namespace forestweave {

struct BenchConfig {
  std::vector<std::size_t> orders;  // host sizes n
  std::size_t d = 16;
  std::size_t p = 4;
  std::size_t repeat = 1;
  std::uint64_t seed = 1;
  GraphModel model = GraphModel::MinDegreePad;
};

struct BenchRow {
  std::size_t n, d, p;
  std::uint64_t seed;
  double millis;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  /// (n, median millis) per order.
  std::vector<std::pair<std::size_t, double>> medians;
  /// Least-squares slope of log(median) against log(n); needs two orders.
  std::optional<double> slope;
};

/// d split as evenly as possible over p trees, larger parts first.
std::vector<std::size_t> even_sizes(std::size_t d, std::size_t p);

/// For every n, generates one instance from `seed` and times embed_forest
/// `repeat` times. Generation is not timed.
BenchResult run_bench(const BenchConfig& config);

std::optional<double> loglog_slope(const std::vector<std::pair<std::size_t, double>>& points);

/// Header "n,d,p,seed,millis" and one line per row.
std::string bench_csv(const BenchResult& r);

}  // namespace forestweave
