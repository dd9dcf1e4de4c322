#include "tspanner/sdpartition.hpp"

#include <algorithm>
#include <sstream>

#include "tree_partition.hpp"
#include "tspanner/error.hpp"

namespace tspanner {

SDInstance reduce_to_sd(const SPartitionInstance& inst) {
  const int k = inst.tree.num_vertices();
  const int specials = static_cast<int>(inst.special.size());
  std::vector<Edge> edges(inst.tree.edges().begin(), inst.tree.edges().end());
  edges.reserve(k - 1 + specials);

  SDInstance out;
  out.is_supply.assign(k + specials, 0);
  out.value.resize(k + specials);
  out.origin.resize(k + specials);
  for (Vertex v = 0; v < k; ++v) {
    out.value[v] = inst.weight[v];
    out.origin[v] = v;
  }
  for (int i = 0; i < specials; ++i) {
    const Vertex pendant = k + i;
    edges.push_back({inst.special[i], pendant});
    out.is_supply[pendant] = 1;
    out.value[pendant] = inst.bound;
    out.origin[pendant] = inst.special[i];
  }
  out.tree = Graph(k + specials, edges);
  return out;
}

void validate(const SDInstance& inst) {
  const int n = inst.tree.num_vertices();
  if (!detail::is_tree(inst.tree)) throw Error(Errc::PreconditionViolated, "instance graph is not a tree");
  if (static_cast<int>(inst.is_supply.size()) != n || static_cast<int>(inst.value.size()) != n) {
    throw Error(Errc::PreconditionViolated, "per-node array size mismatch");
  }
  if (std::none_of(inst.is_supply.begin(), inst.is_supply.end(), [](std::uint8_t s) { return s != 0; })) {
    throw Error(Errc::PreconditionViolated, "no supply node");
  }
  if (std::any_of(inst.value.begin(), inst.value.end(), [](Weight w) { return w < 0; })) {
    throw Error(Errc::PreconditionViolated, "negative supply or demand");
  }
}

namespace {

struct Greedy {
  std::vector<Vertex> order;   // BFS from the root
  std::vector<Vertex> parent;
  std::vector<std::uint8_t> pending;
  std::vector<Weight> amount;  // residual supply, or demand still to be carried
  std::vector<Vertex> carrier; // child whose part a Residual demand node joined
  Vertex failed_at = kNoVertex;
};

bool run_greedy(const SDInstance& inst, Greedy& state, bool record) {
  validate(inst);
  const Graph& tree = inst.tree;
  const int n = tree.num_vertices();
  const Vertex root = static_cast<Vertex>(
      std::find(inst.is_supply.begin(), inst.is_supply.end(), std::uint8_t{1}) - inst.is_supply.begin());

  state.order.clear();
  state.order.reserve(n);
  state.parent.assign(n, kNoVertex);
  state.pending.assign(n, 0);
  state.amount.assign(n, 0);
  if (record) state.carrier.assign(n, kNoVertex);
  state.order.push_back(root);
  for (std::size_t head = 0; head < state.order.size(); ++head) {
    const Vertex v = state.order[head];
    for (const Incidence& inc : tree.neighbors(v)) {
      if (inc.neighbor == state.parent[v]) continue;
      state.parent[inc.neighbor] = v;
      state.order.push_back(inc.neighbor);
    }
  }

  for (auto it = state.order.rbegin(); it != state.order.rend(); ++it) {
    const Vertex v = *it;
    Weight carried = 0;
    Vertex best = kNoVertex;
    for (const Incidence& inc : tree.neighbors(v)) {
      const Vertex c = inc.neighbor;
      if (c == state.parent[v]) continue;
      if (state.pending[c]) {
        carried += state.amount[c];
      } else if (best == kNoVertex || state.amount[c] > state.amount[best] ||
                 (state.amount[c] == state.amount[best] && c < best)) {
        best = c;
      }
    }
    if (inst.is_supply[v]) {
      // Residual children close as their own parts; pending ones join v.
      const Weight left = inst.value[v] - carried;
      if (left < 0) {
        state.failed_at = v;
        return false;
      }
      state.amount[v] = left;
    } else {
      const Weight need = inst.value[v] + carried;
      if (best != kNoVertex && state.amount[best] >= need) {
        state.amount[v] = state.amount[best] - need;
        if (record) state.carrier[v] = best;
      } else {
        state.pending[v] = 1;
        state.amount[v] = need;
      }
    }
  }
  return true;
}

}  // namespace

SDSolveResult solve_sd(const SDInstance& inst) {
  Greedy state;
  SDSolveResult result;
  if (!run_greedy(inst, state, true)) {
    result.failed_at = state.failed_at;
    return result;
  }
  const int n = inst.tree.num_vertices();
  // Closed nodes inherit the supply of their carrier chain (children first);
  // pending nodes inherit from their parent (parents first).
  std::vector<Vertex> owner(n, kNoVertex);
  for (auto it = state.order.rbegin(); it != state.order.rend(); ++it) {
    const Vertex v = *it;
    if (inst.is_supply[v]) {
      owner[v] = v;
    } else if (!state.pending[v]) {
      owner[v] = owner[state.carrier[v]];
    }
  }
  for (Vertex v : state.order) {
    if (state.pending[v]) owner[v] = owner[state.parent[v]];
  }

  std::vector<int> part_of_supply(n, -1);
  SDPartition partition;
  for (Vertex v = 0; v < n; ++v) {
    if (inst.is_supply[v]) {
      part_of_supply[v] = static_cast<int>(partition.parts.size());
      partition.parts.emplace_back();
    }
  }
  for (Vertex v = 0; v < n; ++v) partition.parts[part_of_supply[owner[v]]].push_back(v);
  result.partition = std::move(partition);
  return result;
}

bool sd_feasible(const SDInstance& inst) {
  Greedy state;
  return run_greedy(inst, state, false);
}

Verdict verify_sd(const SDInstance& inst, const SDPartition& partition) {
  std::vector<int> label;
  if (auto bad = detail::check_connected_partition(inst.tree, partition.parts, label)) {
    return {bad->first, bad->second};
  }
  for (std::size_t i = 0; i < partition.parts.size(); ++i) {
    int supplies = 0;
    Weight supply = 0;
    Weight demand = 0;
    for (Vertex v : partition.parts[i]) {
      if (inst.is_supply[v]) {
        ++supplies;
        supply += inst.value[v];
      } else {
        demand += inst.value[v];
      }
    }
    const int part = static_cast<int>(i);
    if (supplies == 0) return {PartitionViolation::NoSupplyInPart, part};
    if (supplies > 1) return {PartitionViolation::TwoSuppliesInPart, part};
    if (demand > supply) return {PartitionViolation::CapacityExceeded, part};
  }
  return {};
}

SPartition sd_to_spartition(const SDInstance& inst, const SDPartition& partition) {
  const Graph& tree = inst.tree;
  const int n = tree.num_vertices();
  if (static_cast<int>(inst.origin.size()) != n) {
    throw Error(Errc::PreconditionViolated, "instance carries no origin map");
  }
  std::vector<std::uint8_t> has_supply_neighbor(n, 0);
  std::optional<Weight> uniform;
  for (Vertex v = 0; v < n; ++v) {
    if (!inst.is_supply[v]) {
      if (inst.origin[v] != v) throw Error(Errc::PreconditionViolated, "demand node origin must be itself");
      continue;
    }
    if (tree.degree(v) != 1) throw Error(Errc::PreconditionViolated, "supply node is not a leaf");
    const Vertex u = tree.neighbors(v)[0].neighbor;
    if (inst.is_supply[u] || inst.origin[v] != u) {
      throw Error(Errc::PreconditionViolated, "supply node must hang off its special node");
    }
    if (has_supply_neighbor[u]) throw Error(Errc::PreconditionViolated, "node with two supply neighbours");
    has_supply_neighbor[u] = 1;
    if (uniform && *uniform != inst.value[v]) throw Error(Errc::PreconditionViolated, "supplies are not uniform");
    uniform = inst.value[v];
  }
  if (!verify_sd(inst, partition).ok()) throw Error(Errc::InvalidPartition, "supply-demand partition is invalid");

  // Step 1: root every part at its supply node.
  std::vector<int> label;
  detail::check_connected_partition(tree, partition.parts, label);
  std::vector<Vertex> part_parent(n, kNoVertex);
  std::vector<Vertex> supplies;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (!inst.is_supply[s]) continue;
    supplies.push_back(s);
    queue.assign(1, s);
    part_parent[s] = s;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (const Incidence& inc : tree.neighbors(v)) {
        const Vertex c = inc.neighbor;
        if (label[c] != label[v] || part_parent[c] != kNoVertex) continue;
        part_parent[c] = v;
        queue.push_back(c);
      }
    }
  }

  // Step 2: a lone supply node adopts its neighbour together with the
  // neighbour's subtree.
  for (const auto& part : partition.parts) {
    if (part.size() == 1) {
      const Vertex s = part.front();
      part_parent[tree.neighbors(s)[0].neighbor] = s;
    }
  }

  // Step 3: regroup along the updated parent pointers and drop supplies.
  SPartition out;
  out.parts.reserve(supplies.size());
  for (Vertex s : supplies) {
    std::vector<Vertex> members;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (const Incidence& inc : tree.neighbors(v)) {
        const Vertex c = inc.neighbor;
        if (c != part_parent[v] && part_parent[c] == v && c != v) {
          queue.push_back(c);
          members.push_back(inst.origin[c]);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.parts.push_back(std::move(members));
  }
  return out;
}

std::optional<SDPartition> brute_force_sd(const SDInstance& inst, int cap) {
  validate(inst);
  const int n = inst.tree.num_vertices();
  if (n > cap) throw Error(Errc::InstanceTooLarge, "brute force capped at " + std::to_string(cap) + " nodes");
  std::vector<Vertex> supplies;
  for (Vertex v = 0; v < n; ++v) {
    if (inst.is_supply[v]) supplies.push_back(v);
  }
  std::optional<SDPartition> found;
  detail::for_each_cut(inst.tree, static_cast<int>(supplies.size()) - 1,
                       [&](const std::vector<int>& label, int count) {
                         std::vector<int> supply_count(count, 0);
                         std::vector<Weight> budget(count, 0);
                         for (Vertex v = 0; v < n; ++v) {
                           if (inst.is_supply[v]) {
                             ++supply_count[label[v]];
                             budget[label[v]] += inst.value[v];
                           } else {
                             budget[label[v]] -= inst.value[v];
                           }
                         }
                         for (int c = 0; c < count; ++c) {
                           if (supply_count[c] != 1 || budget[c] < 0) return false;
                         }
                         auto by_label = detail::parts_from_labels(label, count);
                         SDPartition result;
                         for (Vertex s : supplies) result.parts.push_back(std::move(by_label[label[s]]));
                         found = std::move(result);
                         return true;
                       });
  return found;
}

std::string format_sd_instance(const SDInstance& inst) {
  std::ostringstream out;
  const int n = inst.tree.num_vertices();
  out << n << '\n';
  for (Vertex v = 0; v < n; ++v) out << (v ? " " : "") << (inst.is_supply[v] ? 'S' : 'D') << ' ' << inst.value[v];
  out << '\n';
  for (const Edge& e : inst.tree.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

SDInstance parse_sd_instance(const std::string& text) {
  auto lines = detail::tokenize_lines(text);
  if (lines.size() < 2) throw ParseError(lines.empty() ? 1 : lines.back().first, "truncated instance");
  const auto& [header_line, header] = lines[0];
  if (header.size() != 1) throw ParseError(header_line, "expected `k`");
  const auto k = detail::parse_integer(header[0], header_line);
  if (k < 1) throw ParseError(header_line, "node count must be positive");

  SDInstance inst;
  const auto& [tag_line, tags] = lines[1];
  if (static_cast<long long>(tags.size()) != 2 * k) throw ParseError(tag_line, "expected k pairs `S v` or `D v`");
  for (long long v = 0; v < k; ++v) {
    const std::string& tag = tags[2 * v];
    if (tag != "S" && tag != "D") throw ParseError(tag_line, "node tag must be S or D, got '" + tag + "'");
    inst.is_supply.push_back(tag == "S" ? 1 : 0);
    inst.value.push_back(detail::parse_integer(tags[2 * v + 1], tag_line));
  }
  if (static_cast<long long>(lines.size()) != 2 + k - 1) throw ParseError(lines.back().first, "expected k-1 edge lines");
  std::vector<Edge> edges;
  for (std::size_t i = 2; i < lines.size(); ++i) {
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
