#pragma once

// Helpers shared by the S-partition and supply-demand modules.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tspanner/graph.hpp"
#include "tspanner/spartition.hpp"

namespace tspanner::detail {

/// Checks that `parts` partition the tree nodes into connected pieces and
/// fills label[v] with the part index of v.
std::optional<std::pair<PartitionViolation, int>> check_connected_partition(
    const Graph& tree, const std::vector<std::vector<Vertex>>& parts, std::vector<int>& label);

/// Visits every way of deleting `cuts` tree edges (lexicographic over edge-id
/// combinations) with the resulting component labels and component count.
/// Stops early when visit returns true; returns whether it stopped.
bool for_each_cut(const Graph& tree, int cuts,
                  const std::function<bool(const std::vector<int>& label, int components)>& visit);

/// Groups nodes by label into sorted parts.
std::vector<std::vector<Vertex>> parts_from_labels(const std::vector<int>& label, int count);

bool is_tree(const Graph& g);

/// Splits text into non-empty, non-comment lines, each tokenized on spaces
/// and paired with its 1-based line number.
std::vector<std::pair<int, std::vector<std::string>>> tokenize_lines(const std::string& text);

long long parse_integer(const std::string& token, int line);

}  // namespace tspanner::detail
