#include <algorithm>
#include <vector>

#include "tspanner/graph.hpp"

namespace tspanner {

// Iterative Hopcroft-Tarjan over an explicit edge stack.
BlockDecomposition biconnected_components(const Graph& g) {
  const int n = g.num_vertices();
  BlockDecomposition out;
  out.block_of_edge.assign(g.num_edges(), -1);

  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<std::uint8_t> is_cut(n, 0);
  std::vector<int> stamp(n, -1);
  std::vector<EdgeId> edge_stack;
  int clock = 0;

  struct Frame {
    Vertex v;
    EdgeId via;
    int next;
  };
  std::vector<Frame> frames;

  // Blocks are first collected under discovery ids, with unsorted members.
  std::vector<std::vector<Vertex>> found_vertices;
  std::vector<int> found_of_edge(g.num_edges(), -1);
  auto close_block = [&](EdgeId until) {
    const int id = static_cast<int>(found_vertices.size());
    std::vector<Vertex>& members = found_vertices.emplace_back();
    while (true) {
      EdgeId e = edge_stack.back();
      edge_stack.pop_back();
      found_of_edge[e] = id;
      for (Vertex x : {g.edge(e).u, g.edge(e).v}) {
        if (stamp[x] != id) {
          stamp[x] = id;
          members.push_back(x);
        }
      }
      if (e == until) break;
    }
  };

  for (Vertex start = 0; start < n; ++start) {
    if (disc[start] >= 0) continue;
    disc[start] = low[start] = clock++;
    frames.push_back({start, kNoEdge, 0});
    int root_children = 0;
    while (!frames.empty()) {
      Frame& f = frames.back();
      auto adj = g.neighbors(f.v);
      if (f.next < static_cast<int>(adj.size())) {
        const Incidence inc = adj[f.next++];
        if (inc.edge == f.via) continue;
        if (disc[inc.neighbor] < 0) {
          edge_stack.push_back(inc.edge);
          disc[inc.neighbor] = low[inc.neighbor] = clock++;
          if (f.v == start) ++root_children;
          frames.push_back({inc.neighbor, inc.edge, 0});
        } else if (disc[inc.neighbor] < disc[f.v]) {
          edge_stack.push_back(inc.edge);
          low[f.v] = std::min(low[f.v], disc[inc.neighbor]);
        }
        continue;
      }
      const Frame done = f;
      frames.pop_back();
      if (frames.empty()) break;
      Frame& up = frames.back();
      low[up.v] = std::min(low[up.v], low[done.v]);
      if (low[done.v] >= disc[up.v]) {
        if (up.v != start) is_cut[up.v] = 1;
        close_block(done.via);
      }
    }
    if (root_children > 1) is_cut[start] = 1;
  }

  // Renumber by smallest edge and emit members in increasing order with
  // plain scans, keeping the whole pass linear.
  std::vector<int> rank(found_vertices.size(), -1);
  out.blocks.resize(found_vertices.size());
  int next_rank = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    int& r = rank[found_of_edge[e]];
    if (r < 0) r = next_rank++;
    out.block_of_edge[e] = r;
    out.blocks[r].edges.push_back(e);
  }
  std::vector<int> start_of(n + 1, 0);
  for (const auto& members : found_vertices) {
    for (Vertex v : members) ++start_of[v + 1];
  }
  for (Vertex v = 0; v < n; ++v) start_of[v + 1] += start_of[v];
  std::vector<int> blocks_at(start_of[n]);
  {
    std::vector<int> fill(start_of.begin(), start_of.end() - 1);
    for (std::size_t b = 0; b < found_vertices.size(); ++b) {
      for (Vertex v : found_vertices[b]) blocks_at[fill[v]++] = rank[b];
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    for (int k = start_of[v]; k < start_of[v + 1]; ++k) out.blocks[blocks_at[k]].vertices.push_back(v);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.cut_vertices.push_back(v);
  }
  return out;
}

}  // namespace tspanner
