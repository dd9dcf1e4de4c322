#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tspanner/graph.hpp"
#include "tspanner/spartition.hpp"

namespace tspanner {

/// Supply-demand tree partition instance. value[v] is s(v) for supply nodes
/// and d(v) for demand nodes.
struct SDInstance {
  Graph tree;
  std::vector<std::uint8_t> is_supply;
  std::vector<Weight> value;
  /// Filled by reduce_to_sd: origin[v] is the S-partition node that v stands
  /// for (itself for demand nodes, its special node for supply nodes).
  std::vector<Vertex> origin;
};

/// Parts are listed in increasing order of their supply node.
struct SDPartition {
  std::vector<std::vector<Vertex>> parts;
};

/// Demand nodes keep the S-partition ids 0..k-1; the pendant supply of the
/// i-th special node gets id k+i, with supply equal to the bound.
SDInstance reduce_to_sd(const SPartitionInstance& inst);

/// Throws Error(PreconditionViolated) on malformed instances.
void validate(const SDInstance& inst);

struct SDSolveResult {
  std::optional<SDPartition> partition;
  /// Supply node whose budget was first exceeded when infeasible.
  Vertex failed_at = kNoVertex;

  bool feasible() const { return partition.has_value(); }
};

/// Linear-time greedy over a post-order rooted at the lowest-id supply node.
SDSolveResult solve_sd(const SDInstance& inst);

/// Feasibility only; same pass as solve_sd without materializing parts.
bool sd_feasible(const SDInstance& inst);

Verdict verify_sd(const SDInstance& inst, const SDPartition& partition);

/// Recovers a tree S-partition from a partition of a reduce_to_sd instance.
/// Throws Error(PreconditionViolated) when `inst` lacks the reduction shape.
SPartition sd_to_spartition(const SDInstance& inst, const SDPartition& partition);

/// Exhaustive search over connected partitions. Throws Error(InstanceTooLarge).
std::optional<SDPartition> brute_force_sd(const SDInstance& inst, int cap = kDefaultBruteForceCap);

/// Text form: `k` / k pairs `S v` or `D v` on one line / k-1 lines `a b`.
std::string format_sd_instance(const SDInstance& inst);
SDInstance parse_sd_instance(const std::string& text);

}  // namespace tspanner
