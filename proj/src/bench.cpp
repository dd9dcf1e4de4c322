#include "tspanner/bench.hpp"

#include <algorithm>
#include <chrono>
#include <json.hpp>
#include <stdexcept>

#include "tspanner/outerplanar.hpp"
#include "tspanner/solver.hpp"

namespace tspanner {

namespace {

template <typename Fn>
double time_ms(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

double median(std::vector<double> samples) {
  std::sort(samples.begin(), samples.end());
  return samples[samples.size() / 2];
}

std::vector<double> ratios(const std::vector<BenchRow>& rows, double BenchRow::*field) {
  std::vector<double> out;
  for (std::size_t i = 1; i < rows.size(); ++i) out.push_back(rows[i].*field / rows[i - 1].*field);
  return out;
}

}  // namespace

std::vector<double> BenchReport::spanner_ratios() const { return ratios(rows, &BenchRow::spanner_ms); }
std::vector<double> BenchReport::minstretch_ratios() const { return ratios(rows, &BenchRow::minstretch_ms); }

BenchReport run_bench(const std::vector<int>& sizes, int repeats, std::uint64_t seed) {
  if (repeats < 1) throw std::invalid_argument("repeats must be positive");
  const std::size_t k = sizes.size();
  std::vector<Graph> graphs;
  graphs.reserve(k);
  for (std::size_t i = 0; i < k; ++i) graphs.push_back(random_outerplanar(sizes[i], Fraction{1, 1}, seed + i));

  // One untimed warm-up per size, then repeats interleaved across sizes so
  // background load drift hits every size alike.
  std::vector<int> found(k);
  for (std::size_t i = 0; i < k; ++i) found[i] = min_stretch(graphs[i]).t;
  std::vector<std::vector<double>> minstretch(k), spanner(k);
  for (int r = 0; r < repeats; ++r) {
    for (std::size_t i = 0; i < k; ++i) {
      minstretch[i].push_back(time_ms([&] {
        if (min_stretch(graphs[i]).t != found[i]) throw std::logic_error("minimum stretch not reproducible");
      }));
      spanner[i].push_back(time_ms([&] {
        if (!tree_t_spanner(graphs[i], found[i]).exists) throw std::logic_error("minimum stretch not reproducible");
      }));
    }
  }

  BenchReport report;
  for (std::size_t i = 0; i < k; ++i) {
    report.rows.push_back({.n = sizes[i],
                           .min_t = found[i],
                           .spanner_ms = median(spanner[i]),
                           .minstretch_ms = median(minstretch[i])});
  }
  return report;
}

std::string bench_to_json(const BenchReport& report) {
  nlohmann::json doc;
  auto rows = nlohmann::json::array();
  for (const BenchRow& r : report.rows) {
    rows.push_back({{"n", r.n}, {"min_t", r.min_t}, {"tree_t_spanner_ms", r.spanner_ms},
                    {"minstretch_ms", r.minstretch_ms}});
  }
  doc["rows"] = std::move(rows);
  doc["tree_t_spanner_ratios"] = report.spanner_ratios();
  doc["minstretch_ratios"] = report.minstretch_ratios();
  return doc.dump(2) + "\n";
}

}  // namespace tspanner
