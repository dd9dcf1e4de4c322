#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tspanner {

struct BenchRow {
  int n = 0;
  int min_t = 0;
  double spanner_ms = 0;     // median tree_t_spanner at t = min_t
  double minstretch_ms = 0;  // median min_stretch
};

struct BenchReport {
  std::vector<BenchRow> rows;

  /// Consecutive-size time ratios.
  std::vector<double> spanner_ratios() const;
  std::vector<double> minstretch_ratios() const;
};

/// Times both entry points on random maximal outerplanar graphs (one graph per
/// size, seeded from `seed`), reporting the median of `repeats` runs.
BenchReport run_bench(const std::vector<int>& sizes, int repeats, std::uint64_t seed);

std::string bench_to_json(const BenchReport& report);

}  // namespace tspanner
