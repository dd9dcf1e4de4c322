#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace tspanner {

using Vertex = std::int32_t;
using EdgeId = std::int32_t;
using Weight = std::int64_t;

inline constexpr Vertex kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex x) const { return x == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

/// Simple undirected graph on vertices 0..n-1 with stable edge ids.
///
/// Edge ids are assigned in input order after dropping repeated pairs, and
/// every module refers to edges by id. Adjacency is stored in CSR form; the
/// incidences of a vertex are listed in increasing edge-id order.
class Graph {
 public:
  Graph() = default;

  /// Throws Error(LoopEdge) or Error(VertexOutOfRange). Connectivity is
  /// recorded, not enforced; see connected().
  Graph(int n, std::span<const Edge> pairs);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Incidence> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  bool connected() const { return connected_; }

  /// Scans the adjacency of the lower-degree endpoint.
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Incidence> adjacency_;
  bool connected_ = true;
};

Graph build_graph(int n, std::span<const Edge> pairs);

/// Throws Error(Disconnected) when g is not connected.
void require_connected(const Graph& g);

/// Subgraph on the same vertex set keeping the listed edges. Local edge i is
/// host edge kept[i].
Graph edge_subgraph(const Graph& g, std::span<const EdgeId> kept);

/// Spanning tree of a host graph given as a set of host edge ids, rooted for
/// path and distance queries (binary lifting).
class SpanningTree {
 public:
  /// Throws Error(NotSpanningTree) unless `edges` are n-1 distinct host edges
  /// forming a connected acyclic subgraph.
  SpanningTree(const Graph& host, std::vector<EdgeId> edges, Vertex root = 0);

  int num_vertices() const { return static_cast<int>(parent_.size()); }
  int host_edge_count() const { return static_cast<int>(in_tree_.size()); }

  /// Sorted host edge ids.
  std::span<const EdgeId> edges() const { return edges_; }
  bool contains(EdgeId e) const { return in_tree_[e] != 0; }

  Vertex root() const { return root_; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  EdgeId parent_edge(Vertex v) const { return parent_edge_[v]; }
  int depth(Vertex v) const { return depth_[v]; }

  /// Walks up from both ends: O(d_T(u,v)).
  Vertex lca(Vertex u, Vertex v) const;
  int distance(Vertex u, Vertex v) const { return depth_[u] + depth_[v] - 2 * depth_[lca(u, v)]; }
  /// Vertices in breadth-first order from the root.
  const std::vector<Vertex>& order() const { return order_; }

 private:
  std::vector<EdgeId> edges_;
  std::vector<std::uint8_t> in_tree_;
  Vertex root_ = 0;
  std::vector<Vertex> parent_;
  std::vector<EdgeId> parent_edge_;
  std::vector<int> depth_;
  std::vector<Vertex> order_;
};

/// Vertices of the unique u..v path in t, endpoints included.
std::vector<Vertex> tree_path(const SpanningTree& t, Vertex u, Vertex v);

struct StretchCertificate {
  int t = 1;
  /// Smallest-id non-tree edge achieving t; empty when the graph is a tree.
  std::optional<EdgeId> witness;
  /// Indexed by host edge id: d_T(u,v) for non-tree edges, 1 for tree edges.
  std::vector<int> per_edge;
};

/// Throws Error(NotSpanningTree) when t was not built over a graph of g's shape.
StretchCertificate stretch(const Graph& g, const SpanningTree& t);

struct Block {
  std::vector<Vertex> vertices;  // sorted
  std::vector<EdgeId> edges;     // sorted
};

struct BlockDecomposition {
  /// Ordered by smallest contained edge id.
  std::vector<Block> blocks;
  std::vector<Vertex> cut_vertices;  // sorted
  std::vector<int> block_of_edge;
};

BlockDecomposition biconnected_components(const Graph& g);

/// Induced graph of a block with vertices relabelled by their rank in
/// block.vertices; local edge i is host edge block.edges[i].
Graph block_graph(const Graph& g, const Block& block);

inline constexpr int kDefaultEnumerationCap = 10;

/// Calls visit once per spanning tree (sorted edge ids). Deterministic order.
/// Throws Error(InstanceTooLarge) when n > cap, Error(Disconnected) when g has
/// no spanning tree. Returns the number of trees visited.
std::int64_t for_each_spanning_tree(const Graph& g,
                                    const std::function<void(std::span<const EdgeId>)>& visit,
                                    int cap = kDefaultEnumerationCap);

}  // namespace tspanner
