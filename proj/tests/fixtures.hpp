#pragma once

// Shared fixtures and independent oracles for the test suites.

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <span>
#include <vector>

#include "tspanner/graph.hpp"
#include "tspanner/outerplanar.hpp"

namespace fixtures {

using tspanner::Edge;
using tspanner::EdgeId;
using tspanner::Graph;
using tspanner::Vertex;

inline Graph make(int n, std::vector<Edge> edges) { return Graph(n, edges); }

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
  return make(n, e);
}

inline Graph d4() { return make(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}}); }
inline Graph fan5() { return make(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {0, 3}}); }
inline Graph hex6() {
  return make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 2}, {2, 4}, {0, 4}});
}
inline Graph bowtie() { return make(5, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}}); }
inline Graph k4() { return make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }
inline Graph k23() { return make(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }
inline Graph path(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return make(n, e);
}

/// Distance between u and v using only `tree` edges (plain BFS).
inline int bfs_tree_distance(const Graph& g, std::span<const EdgeId> tree, Vertex u, Vertex v) {
  std::vector<std::vector<Vertex>> adj(g.num_vertices());
  for (EdgeId e : tree) {
    adj[g.edge(e).u].push_back(g.edge(e).v);
    adj[g.edge(e).v].push_back(g.edge(e).u);
  }
  std::vector<int> dist(g.num_vertices(), -1);
  std::vector<Vertex> queue{u};
  dist[u] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex w : adj[queue[head]]) {
      if (dist[w] < 0) {
        dist[w] = dist[queue[head]] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist[v];
}

/// max over non-tree edges of the BFS tree distance; 1 when there are none.
inline int bfs_stretch(const Graph& g, std::span<const EdgeId> tree) {
  std::vector<char> in(g.num_edges(), 0);
  for (EdgeId e : tree) in[e] = 1;
  int best = 1;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!in[e]) best = std::max(best, bfs_tree_distance(g, tree, g.edge(e).u, g.edge(e).v));
  }
  return best;
}

/// Minimum stretch over all spanning trees (enumeration oracle).
inline int brute_min_stretch(const Graph& g) {
  int best = std::numeric_limits<int>::max();
  tspanner::for_each_spanning_tree(g, [&](std::span<const EdgeId> tree) { best = std::min(best, bfs_stretch(g, tree)); });
  return best;
}

/// Outerplanar iff adding a vertex adjacent to everything keeps it planar.
inline bool boost_outerplanar(const Graph& g) {
  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  const int n = g.num_vertices();
  BoostGraph bg(n + 1);
  for (const Edge& e : g.edges()) boost::add_edge(e.u, e.v, bg);
  for (int v = 0; v < n; ++v) boost::add_edge(v, n, bg);
  return boost::boyer_myrvold_planarity_test(bg);
}

/// Random spanning tree: random-order Kruskal.
inline std::vector<EdgeId> random_spanning_tree(const Graph& g, std::mt19937_64& rng) {
  std::vector<EdgeId> order(g.num_edges());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Vertex> root(g.num_vertices());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](Vertex x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  std::vector<EdgeId> tree;
  for (EdgeId e : order) {
    Vertex a = find(g.edge(e).u);
    Vertex b = find(g.edge(e).v);
    if (a != b) {
      root[a] = b;
      tree.push_back(e);
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

/// Random relabelling of vertices and shuffling of the edge list.
inline Graph scramble(const Graph& g, std::mt19937_64& rng, std::vector<Vertex>* relabel_out = nullptr) {
  std::vector<Vertex> relabel(g.num_vertices());
  std::iota(relabel.begin(), relabel.end(), 0);
  std::shuffle(relabel.begin(), relabel.end(), rng);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.push_back({relabel[e.u], relabel[e.v]});
  std::shuffle(edges.begin(), edges.end(), rng);
  if (relabel_out) *relabel_out = relabel;
  return Graph(g.num_vertices(), edges);
}

/// Connected outerplanar graph on exactly n vertices built by gluing random
/// 2-connected blocks and bridges at random cut vertices, then scrambled.
inline Graph random_connected_outerplanar(int n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  int used = 1;
  while (used < n) {
    const int room = n - used;
    const int extra = std::uniform_int_distribution<int>(1, std::min(room, 6))(rng);
    const Vertex attach = std::uniform_int_distribution<int>(0, used - 1)(rng);
    if (extra == 1) {
      edges.push_back({attach, used});
    } else {
      const int size = extra + 1;
      const int den = 4;
      const int num = std::uniform_int_distribution<int>(0, den)(rng);
      const Graph block = tspanner::random_outerplanar(size, {num, den}, rng());
      auto map = [&](Vertex v) { return v == 0 ? attach : used + v - 1; };
      for (const Edge& e : block.edges()) edges.push_back({map(e.u), map(e.v)});
    }
    used += extra;
  }
  return scramble(Graph(n, edges), rng);
}

/// Random labelled tree on k nodes: random parent attachment, then scrambled.
inline Graph random_tree(int k, std::mt19937_64& rng) {
  std::vector<Edge> e;
  for (int v = 1; v < k; ++v) e.push_back({std::uniform_int_distribution<int>(0, v - 1)(rng), v});
  return scramble(Graph(k, e), rng);
}

/// The regions enclosed by the fundamental cycles of external non-tree edges
/// partition the interior faces, and each non-tree edge lies inside exactly
/// one of them.
inline bool external_cycles_partition_faces(const tspanner::OuterplaneEmbedding& emb,
                                            const tspanner::SpanningTree& tree) {
  const Graph& g = emb.host();
  std::vector<int> region_of(emb.num_faces(), -1);
  int regions = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (tree.contains(e) || emb.edge_class(e) != tspanner::EdgeClass::External) continue;
    for (int f : tspanner::enclosed_region(emb, tspanner::tree_path(tree, g.edge(e).u, g.edge(e).v))) {
      if (region_of[f] >= 0) return false;
      region_of[f] = regions;
    }
    ++regions;
  }
  if (std::count(region_of.begin(), region_of.end(), -1) != 0) return false;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (tree.contains(e)) continue;
    const auto& inc = emb.face_incidence(e);
    if (inc[1] >= 0 && region_of[inc[0]] != region_of[inc[1]]) return false;
  }
  return true;
}

/// Every non-crossing chord subset of the n-gon, as graphs.
inline std::vector<Graph> all_dissections(int n) {
  std::vector<Edge> candidates;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 2; b < n; ++b) {
      if (!(a == 0 && b == n - 1)) candidates.push_back({a, b});
    }
  }
  auto crosses = [](const Edge& x, const Edge& y) {
    return (x.u < y.u && y.u < x.v && x.v < y.v) || (y.u < x.u && x.u < y.v && y.v < x.v);
  };
  std::vector<Graph> out;
  std::vector<Edge> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == candidates.size()) {
      std::vector<Edge> e;
      for (int v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
      e.insert(e.end(), chosen.begin(), chosen.end());
      out.push_back(Graph(n, e));
      return;
    }
    rec(i + 1);
    if (std::none_of(chosen.begin(), chosen.end(), [&](const Edge& c) { return crosses(c, candidates[i]); })) {
      chosen.push_back(candidates[i]);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

}  // namespace fixtures
