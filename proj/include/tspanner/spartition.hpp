#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tspanner/graph.hpp"
#include "tspanner/outerplanar.hpp"

namespace tspanner {

/// Tree S-partition instance: split `tree` into connected parts, each holding
/// exactly one special node and total weight at most `bound`.
struct SPartitionInstance {
  Graph tree;
  std::vector<Weight> weight;
  std::vector<Vertex> special;  // sorted, nonempty
  Weight bound = 0;

  bool is_special(Vertex v) const;
};

struct SPartition {
  std::vector<std::vector<Vertex>> parts;
};

/// Dual tree with w(v_f) = |E(f)| - 2, S = E-faces and bound t - 1.
SPartitionInstance reduce_to_spartition(const OuterplaneEmbedding& emb, int t);
SPartitionInstance reduce_to_spartition(const WeakDual& dual, int t);

/// Throws Error(PreconditionViolated) unless the tree is a tree, weights are
/// nonnegative, and the special set is a nonempty set of valid node ids.
void validate(const SPartitionInstance& inst);

enum class PartitionViolation {
  NotAPartition,
  DisconnectedPart,
  NoSpecialInPart,
  TwoSpecialsInPart,
  CostExceeded,
  NoSupplyInPart,
  TwoSuppliesInPart,
  CapacityExceeded,
};

const char* to_string(PartitionViolation v);

/// Ok when `violation` is empty; otherwise the first failing part (or -1 when
/// the parts do not form a partition).
struct Verdict {
  std::optional<PartitionViolation> violation;
  int part = -1;

  bool ok() const { return !violation.has_value(); }
};

Verdict verify_spartition(const SPartitionInstance& inst, const SPartition& partition);

inline constexpr int kDefaultBruteForceCap = 15;

/// Exhaustive search over the ways to cut |S|-1 tree edges, in lexicographic
/// order of the cut set. Throws Error(InstanceTooLarge) above `cap` nodes.
std::optional<SPartition> brute_force_spartition(const SPartitionInstance& inst, int cap = kDefaultBruteForceCap);

/// Text form: `k bound` / k weights / special ids / k-1 lines `a b`.
std::string format_spartition_instance(const SPartitionInstance& inst);
SPartitionInstance parse_spartition_instance(const std::string& text);

}  // namespace tspanner
