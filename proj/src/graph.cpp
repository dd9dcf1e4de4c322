#include "tspanner/graph.hpp"

#include <algorithm>
#include <string>

#include "tspanner/error.hpp"

namespace tspanner {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::Disconnected: return "Disconnected";
    case Errc::NotSpanningTree: return "NotSpanningTree";
    case Errc::InstanceTooLarge: return "InstanceTooLarge";
    case Errc::NotOuterplanar: return "NotOuterplanar";
    case Errc::NotACycle: return "NotACycle";
    case Errc::InvalidPartition: return "InvalidPartition";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::ParseError: return "ParseError";
  }
  return "?";
}

const char* to_string(OuterplanarityReason reason) {
  switch (reason) {
    case OuterplanarityReason::NoDegree2Vertex: return "NoDegree2Vertex";
    case OuterplanarityReason::CrossingChords: return "CrossingChords";
    case OuterplanarityReason::TooManyEdges: return "TooManyEdges";
    case OuterplanarityReason::NotHamiltonian: return "NotHamiltonian";
  }
  return "?";
}

Graph::Graph(int n, std::span<const Edge> pairs) : n_(n) {
  if (n < 0) throw Error(Errc::VertexOutOfRange, "negative vertex count");
  for (const Edge& p : pairs) {
    if (p.u < 0 || p.u >= n || p.v < 0 || p.v >= n) {
      throw Error(Errc::VertexOutOfRange, "edge (" + std::to_string(p.u) + "," + std::to_string(p.v) +
                                              ") outside 0.." + std::to_string(n - 1));
    }
    if (p.u == p.v) throw Error(Errc::LoopEdge, "loop at vertex " + std::to_string(p.u));
  }

  // Drop repeated pairs, keeping the first occurrence: bucket by the smaller
  // endpoint (stable), then stamp the larger one.
  const std::size_t m = pairs.size();
  std::vector<int> start(n_ + 1, 0);
  for (const Edge& p : pairs) ++start[std::min(p.u, p.v) + 1];
  for (int v = 0; v < n_; ++v) start[v + 1] += start[v];
  std::vector<std::size_t> bucketed(m);
  {
    std::vector<int> next(start.begin(), start.end() - 1);
    for (std::size_t i = 0; i < m; ++i) bucketed[next[std::min(pairs[i].u, pairs[i].v)]++] = i;
  }
  std::vector<std::uint8_t> keep(m, 1);
  std::vector<Vertex> stamp(n_, kNoVertex);
  for (Vertex lo = 0; lo < n_; ++lo) {
    for (int k = start[lo]; k < start[lo + 1]; ++k) {
      const std::size_t i = bucketed[k];
      const Vertex hi = std::max(pairs[i].u, pairs[i].v);
      if (stamp[hi] == lo) {
        keep[i] = 0;
      } else {
        stamp[hi] = lo;
      }
    }
  }
  edges_.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (keep[i]) edges_.push_back(pairs[i]);
  }

  offsets_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (int v = 0; v < n_; ++v) offsets_[v + 1] += offsets_[v];
  adjacency_.resize(offsets_[n_]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < num_edges(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[fill[e.u]++] = {e.v, id};
    adjacency_[fill[e.v]++] = {e.u, id};
  }

  if (n_ == 0) return;
  std::vector<std::uint8_t> seen(n_, 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const Incidence& inc : neighbors(v)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  connected_ = reached == n_;
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return std::nullopt;
  if (degree(u) > degree(v)) std::swap(u, v);
  for (const Incidence& inc : neighbors(u)) {
    if (inc.neighbor == v) return inc.edge;
  }
  return std::nullopt;
}

Graph build_graph(int n, std::span<const Edge> pairs) { return Graph(n, pairs); }

void require_connected(const Graph& g) {
  if (!g.connected()) throw Error(Errc::Disconnected, "graph is not connected");
}

Graph edge_subgraph(const Graph& g, std::span<const EdgeId> kept) {
  std::vector<Edge> pairs;
  pairs.reserve(kept.size());
  for (EdgeId e : kept) pairs.push_back(g.edge(e));
  return Graph(g.num_vertices(), pairs);
}

Graph block_graph(const Graph& g, const Block& block) {
  // block.vertices is sorted; binary search keeps this proportional to the
  // block rather than the host.
  auto local = [&](Vertex v) {
    return static_cast<Vertex>(std::lower_bound(block.vertices.begin(), block.vertices.end(), v) - block.vertices.begin());
  };
  std::vector<Edge> pairs;
  pairs.reserve(block.edges.size());
  for (EdgeId e : block.edges) pairs.push_back({local(g.edge(e).u), local(g.edge(e).v)});
  return Graph(static_cast<int>(block.vertices.size()), pairs);
}

}  // namespace tspanner
