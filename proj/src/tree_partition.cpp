#include "tree_partition.hpp"

#include <charconv>
#include <sstream>

#include "tspanner/error.hpp"

namespace tspanner::detail {

std::optional<std::pair<PartitionViolation, int>> check_connected_partition(
    const Graph& tree, const std::vector<std::vector<Vertex>>& parts, std::vector<int>& label) {
  const int n = tree.num_vertices();
  label.assign(n, -1);
  std::size_t covered = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (Vertex v : parts[i]) {
      if (v < 0 || v >= n || label[v] >= 0) return std::pair(PartitionViolation::NotAPartition, -1);
      label[v] = static_cast<int>(i);
      ++covered;
    }
  }
  if (covered != static_cast<std::size_t>(n)) return std::pair(PartitionViolation::NotAPartition, -1);

  std::vector<std::uint8_t> seen(n, 0);
  std::vector<Vertex> stack;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) return std::pair(PartitionViolation::NotAPartition, static_cast<int>(i));
    stack.assign(1, parts[i].front());
    seen[parts[i].front()] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : tree.neighbors(v)) {
        if (label[inc.neighbor] != static_cast<int>(i) || seen[inc.neighbor]) continue;
        seen[inc.neighbor] = 1;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
    if (reached != parts[i].size()) return std::pair(PartitionViolation::DisconnectedPart, static_cast<int>(i));
  }
  return std::nullopt;
}

bool for_each_cut(const Graph& tree, int cuts,
                  const std::function<bool(const std::vector<int>& label, int components)>& visit) {
  const int m = tree.num_edges();
  const int n = tree.num_vertices();
  if (cuts < 0 || cuts > m) return false;
  std::vector<int> chosen(cuts);
  for (int i = 0; i < cuts; ++i) chosen[i] = i;
  std::vector<std::uint8_t> removed(m, 0);
  std::vector<int> label(n);
  std::vector<Vertex> stack;
  while (true) {
    std::fill(removed.begin(), removed.end(), 0);
    for (int e : chosen) removed[e] = 1;
    std::fill(label.begin(), label.end(), -1);
    int components = 0;
    for (Vertex s = 0; s < n; ++s) {
      if (label[s] >= 0) continue;
      label[s] = components;
      stack.assign(1, s);
      while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (const Incidence& inc : tree.neighbors(v)) {
          if (removed[inc.edge] || label[inc.neighbor] >= 0) continue;
          label[inc.neighbor] = components;
          stack.push_back(inc.neighbor);
        }
      }
      ++components;
    }
    if (visit(label, components)) return true;

    int i = cuts - 1;
    while (i >= 0 && chosen[i] == m - cuts + i) --i;
    if (i < 0) return false;
    ++chosen[i];
    for (int j = i + 1; j < cuts; ++j) chosen[j] = chosen[j - 1] + 1;
  }
}

std::vector<std::vector<Vertex>> parts_from_labels(const std::vector<int>& label, int count) {
  std::vector<std::vector<Vertex>> parts(count);
  for (std::size_t v = 0; v < label.size(); ++v) parts[label[v]].push_back(static_cast<Vertex>(v));
  return parts;
}

bool is_tree(const Graph& g) { return g.num_vertices() > 0 && g.connected() && g.num_edges() == g.num_vertices() - 1; }

std::vector<std::pair<int, std::vector<std::string>>> tokenize_lines(const std::string& text) {
  std::vector<std::pair<int, std::vector<std::string>>> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream words(line);
    std::vector<std::string> tokens;
    for (std::string w; words >> w;) tokens.push_back(w);
    out.emplace_back(number, std::move(tokens));
  }
  return out;
}

long long parse_integer(const std::string& token, int line) {
  long long value = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + token + "'");
  }
  return value;
}

}  // namespace tspanner::detail
