#include "tspanner/spartition.hpp"

#include <algorithm>
#include <sstream>

#include "tree_partition.hpp"
#include "tspanner/error.hpp"

namespace tspanner {

bool SPartitionInstance::is_special(Vertex v) const {
  return std::binary_search(special.begin(), special.end(), v);
}

const char* to_string(PartitionViolation v) {
  switch (v) {
    case PartitionViolation::NotAPartition: return "NotAPartition";
    case PartitionViolation::DisconnectedPart: return "DisconnectedPart";
    case PartitionViolation::NoSpecialInPart: return "NoSpecialInPart";
    case PartitionViolation::TwoSpecialsInPart: return "TwoSpecialsInPart";
    case PartitionViolation::CostExceeded: return "CostExceeded";
    case PartitionViolation::NoSupplyInPart: return "NoSupplyInPart";
    case PartitionViolation::TwoSuppliesInPart: return "TwoSuppliesInPart";
    case PartitionViolation::CapacityExceeded: return "CapacityExceeded";
  }
  return "?";
}

SPartitionInstance reduce_to_spartition(const WeakDual& dual, int t) {
  if (t < 1) throw Error(Errc::PreconditionViolated, "stretch bound must be at least 1");
  return SPartitionInstance{dual.tree, dual.weight, dual.special, static_cast<Weight>(t) - 1};
}

SPartitionInstance reduce_to_spartition(const OuterplaneEmbedding& emb, int t) {
  return reduce_to_spartition(weak_dual(emb), t);
}

void validate(const SPartitionInstance& inst) {
  const int k = inst.tree.num_vertices();
  if (!detail::is_tree(inst.tree)) throw Error(Errc::PreconditionViolated, "instance graph is not a tree");
  if (static_cast<int>(inst.weight.size()) != k) throw Error(Errc::PreconditionViolated, "weight count mismatch");
  if (std::any_of(inst.weight.begin(), inst.weight.end(), [](Weight w) { return w < 0; })) {
    throw Error(Errc::PreconditionViolated, "negative weight");
  }
  if (inst.special.empty()) throw Error(Errc::PreconditionViolated, "special set is empty");
  if (!std::is_sorted(inst.special.begin(), inst.special.end()) ||
      std::adjacent_find(inst.special.begin(), inst.special.end()) != inst.special.end() ||
      inst.special.front() < 0 || inst.special.back() >= k) {
    throw Error(Errc::PreconditionViolated, "special ids must be sorted, distinct and in range");
  }
  if (inst.bound < 0) throw Error(Errc::PreconditionViolated, "negative bound");
}

Verdict verify_spartition(const SPartitionInstance& inst, const SPartition& partition) {
  std::vector<int> label;
  if (auto bad = detail::check_connected_partition(inst.tree, partition.parts, label)) {
    return {bad->first, bad->second};
  }
  for (std::size_t i = 0; i < partition.parts.size(); ++i) {
    int specials = 0;
    Weight cost = 0;
    for (Vertex v : partition.parts[i]) {
      specials += inst.is_special(v) ? 1 : 0;
      cost += inst.weight[v];
    }
    const int part = static_cast<int>(i);
    if (specials == 0) return {PartitionViolation::NoSpecialInPart, part};
    if (specials > 1) return {PartitionViolation::TwoSpecialsInPart, part};
    if (cost > inst.bound) return {PartitionViolation::CostExceeded, part};
  }
  return {};
}

std::optional<SPartition> brute_force_spartition(const SPartitionInstance& inst, int cap) {
  const int k = inst.tree.num_vertices();
  if (k > cap) throw Error(Errc::InstanceTooLarge, "brute force capped at " + std::to_string(cap) + " nodes");
  const int parts = static_cast<int>(inst.special.size());
  std::optional<SPartition> found;
  detail::for_each_cut(inst.tree, parts - 1, [&](const std::vector<int>& label, int count) {
    std::vector<int> specials(count, 0);
    std::vector<Weight> cost(count, 0);
    for (Vertex v = 0; v < k; ++v) {
      cost[label[v]] += inst.weight[v];
      if (inst.is_special(v)) ++specials[label[v]];
    }
    for (int c = 0; c < count; ++c) {
      if (specials[c] != 1 || cost[c] > inst.bound) return false;
    }
    // Order parts by their special node.
    std::vector<std::vector<Vertex>> by_label = detail::parts_from_labels(label, count);
    SPartition result;
    for (Vertex s : inst.special) result.parts.push_back(std::move(by_label[label[s]]));
    found = std::move(result);
    return true;
  });
  return found;
}

std::string format_spartition_instance(const SPartitionInstance& inst) {
  std::ostringstream out;
  const int k = inst.tree.num_vertices();
  out << k << ' ' << inst.bound << '\n';
  for (int v = 0; v < k; ++v) out << (v ? " " : "") << inst.weight[v];
  out << '\n';
  for (std::size_t i = 0; i < inst.special.size(); ++i) out << (i ? " " : "") << inst.special[i];
  out << '\n';
  for (const Edge& e : inst.tree.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

SPartitionInstance parse_spartition_instance(const std::string& text) {
  auto lines = detail::tokenize_lines(text);
  if (lines.size() < 3) throw ParseError(lines.empty() ? 1 : lines.back().first, "truncated instance");
  const auto& [header_line, header] = lines[0];
  if (header.size() != 2) throw ParseError(header_line, "expected `k bound`");
  const auto k = detail::parse_integer(header[0], header_line);
  const auto bound = detail::parse_integer(header[1], header_line);
  if (k < 1) throw ParseError(header_line, "node count must be positive");

  SPartitionInstance inst;
  inst.bound = bound;
  const auto& [weight_line, weights] = lines[1];
  if (static_cast<long long>(weights.size()) != k) throw ParseError(weight_line, "expected k weights");
  for (const auto& w : weights) inst.weight.push_back(detail::parse_integer(w, weight_line));
  const auto& [special_line, specials] = lines[2];
  for (const auto& s : specials) inst.special.push_back(static_cast<Vertex>(detail::parse_integer(s, special_line)));
  std::sort(inst.special.begin(), inst.special.end());

  if (static_cast<long long>(lines.size()) != 3 + k - 1) {
    throw ParseError(lines.back().first, "expected k-1 edge lines");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 3; i < lines.size(); ++i) {
    const auto& [line, tokens] = lines[i];
    if (tokens.size() != 2) throw ParseError(line, "expected `a b`");
    edges.push_back({static_cast<Vertex>(detail::parse_integer(tokens[0], line)),
                     static_cast<Vertex>(detail::parse_integer(tokens[1], line))});
  }
  try {
    inst.tree = Graph(static_cast<int>(k), edges);
    validate(inst);
  } catch (const Error& e) {
    throw ParseError(lines.back().first, e.what());
  }
  return inst;
}

}  // namespace tspanner
