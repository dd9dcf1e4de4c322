#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tspanner/graph.hpp"

namespace tspanner {

struct BlockReport {
  int vertices = 0;
  int edges = 0;
  /// Bound handed to the S-partition stage (t - 1); 0 for bridges.
  Weight bound = 0;
  bool feasible = true;
};

struct SpannerResult {
  bool exists = false;
  int t_queried = 0;
  /// Host edge ids of the spanning tree, sorted; empty when !exists.
  std::vector<EdgeId> tree;
  std::optional<StretchCertificate> certificate;
  std::vector<BlockReport> blocks;
  std::vector<std::pair<std::string, double>> timings_ms;
};

/// Tree t-spanner of one 2-connected outerplanar block (or a single edge),
/// in block-local edge ids. Empty when none exists. Throws NotOuterplanar.
std::optional<SpanningTree> solve_block(const Graph& block, int t);

/// Solves every block at t and merges the block trees. Throws
/// Error(Disconnected) and NotOuterplanar.
SpannerResult tree_t_spanner(const Graph& g, int t);

struct MinStretchResult {
  int t = 1;
  SpannerResult result;
};

/// Binary search for the smallest feasible t of each block over
/// [2, block size - 1]; the graph's value is the largest block value.
MinStretchResult min_stretch(const Graph& g);

}  // namespace tspanner
