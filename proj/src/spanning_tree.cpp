#include <algorithm>
#include <bit>
#include <string>

#include "tspanner/error.hpp"
#include "tspanner/graph.hpp"

namespace tspanner {

SpanningTree::SpanningTree(const Graph& host, std::vector<EdgeId> edges, Vertex root)
    : edges_(std::move(edges)), in_tree_(host.num_edges(), 0), root_(root) {
  const int n = host.num_vertices();
  if (n == 0) throw Error(Errc::NotSpanningTree, "empty host graph");
  if (root < 0 || root >= n) throw Error(Errc::NotSpanningTree, "root outside host");
  if (static_cast<int>(edges_.size()) != n - 1) {
    throw Error(Errc::NotSpanningTree,
                "expected " + std::to_string(n - 1) + " edges, got " + std::to_string(edges_.size()));
  }
  for (EdgeId e : edges_) {
    if (e < 0 || e >= host.num_edges()) throw Error(Errc::NotSpanningTree, "edge id outside host");
    if (in_tree_[e]) throw Error(Errc::NotSpanningTree, "repeated edge id " + std::to_string(e));
    in_tree_[e] = 1;
  }
  edges_.clear();
  for (EdgeId e = 0; e < host.num_edges(); ++e) {
    if (in_tree_[e]) edges_.push_back(e);
  }

  parent_.assign(n, kNoVertex);
  parent_edge_.assign(n, kNoEdge);
  depth_.assign(n, -1);
  depth_[root] = 0;
  order_.reserve(n);
  order_.push_back(root);
  for (std::size_t head = 0; head < order_.size(); ++head) {
    Vertex v = order_[head];
    for (const Incidence& inc : host.neighbors(v)) {
      if (!in_tree_[inc.edge] || inc.edge == parent_edge_[v]) continue;
      if (depth_[inc.neighbor] >= 0) throw Error(Errc::NotSpanningTree, "edge set contains a cycle");
      depth_[inc.neighbor] = depth_[v] + 1;
      parent_[inc.neighbor] = v;
      parent_edge_[inc.neighbor] = inc.edge;
      order_.push_back(inc.neighbor);
    }
  }
  if (static_cast<int>(order_.size()) != n) throw Error(Errc::NotSpanningTree, "edge set does not span");
}

Vertex SpanningTree::lca(Vertex u, Vertex v) const {
  while (depth_[u] > depth_[v]) u = parent_[u];
  while (depth_[v] > depth_[u]) v = parent_[v];
  while (u != v) {
    u = parent_[u];
    v = parent_[v];
  }
  return u;
}

std::vector<Vertex> tree_path(const SpanningTree& t, Vertex u, Vertex v) {
  const Vertex meet = t.lca(u, v);
  std::vector<Vertex> head;
  for (Vertex x = u; x != meet; x = t.parent(x)) head.push_back(x);
  head.push_back(meet);
  std::vector<Vertex> tail;
  for (Vertex x = v; x != meet; x = t.parent(x)) tail.push_back(x);
  head.insert(head.end(), tail.rbegin(), tail.rend());
  return head;
}

// Offline LCA (Tarjan): children are finished in reverse BFS order, so a
// query is answered once both endpoints have been merged into their
// ancestors' sets.
StretchCertificate stretch(const Graph& g, const SpanningTree& t) {
  if (t.num_vertices() != g.num_vertices() || t.host_edge_count() != g.num_edges()) {
    throw Error(Errc::NotSpanningTree, "tree was built over a different graph");
  }
  const int n = g.num_vertices();
  StretchCertificate cert;
  cert.per_edge.assign(g.num_edges(), 1);

  // Each non-tree edge is a query at both endpoints, stored as CSR.
  std::vector<int> first(n + 1, 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (t.contains(e)) continue;
    ++first[g.edge(e).u + 1];
    ++first[g.edge(e).v + 1];
  }
  for (Vertex v = 0; v < n; ++v) first[v + 1] += first[v];
  std::vector<EdgeId> queries(first[n]);
  {
    std::vector<int> fill(first.begin(), first.end() - 1);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (t.contains(e)) continue;
      queries[fill[g.edge(e).u]++] = e;
      queries[fill[g.edge(e).v]++] = e;
    }
  }

  // Children in CSR form.
  std::vector<int> child_start(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (t.parent(v) != kNoVertex) ++child_start[t.parent(v) + 1];
  }
  for (Vertex v = 0; v < n; ++v) child_start[v + 1] += child_start[v];
  std::vector<Vertex> children(std::max(0, n - 1));
  {
    std::vector<int> fill(child_start.begin(), child_start.end() - 1);
    for (Vertex v : t.order()) {
      if (t.parent(v) != kNoVertex) children[fill[t.parent(v)]++] = v;
    }
  }

  // Tarjan's offline LCA. A finished subtree is merged into its parent's
  // set, and the set remembers the vertex currently being expanded.
  std::vector<Vertex> uf(n), anc(n);
  std::vector<std::uint8_t> done(n, 0);
  for (Vertex v = 0; v < n; ++v) uf[v] = anc[v] = v;
  auto find = [&](Vertex x) {
    Vertex r = x;
    while (uf[r] != r) r = uf[r];
    while (uf[x] != r) {
      const Vertex up = uf[x];
      uf[x] = r;
      x = up;
    }
    return r;
  };

  std::vector<std::pair<Vertex, int>> stack{{t.root(), child_start[t.root()]}};
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    if (next < child_start[v + 1]) {
      const Vertex c = children[next++];
      stack.emplace_back(c, child_start[c]);
      continue;
    }
    const Vertex u = v;
    stack.pop_back();
    done[u] = 1;
    for (int i = first[u]; i < first[u + 1]; ++i) {
      const EdgeId e = queries[i];
      const Vertex w = g.edge(e).u == u ? g.edge(e).v : g.edge(e).u;
      // The endpoint that finishes second answers.
      if (!done[w]) continue;
      const Vertex l = anc[find(w)];
      cert.per_edge[e] = t.depth(u) + t.depth(w) - 2 * t.depth(l);
    }
    if (!stack.empty()) {
      const Vertex p = stack.back().first;
      uf[find(u)] = find(p);
      anc[find(p)] = p;
    }
  }

  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (t.contains(e)) continue;
    const int d = cert.per_edge[e];
    if (!cert.witness || d > cert.t) {
      cert.t = d;
      cert.witness = e;
    }
  }
  return cert;
}

namespace {

struct TreeEnumerator {
  const Graph& g;
  const std::function<void(std::span<const EdgeId>)>& visit;
  std::vector<EdgeId> chosen;
  std::vector<std::uint8_t> excluded;
  std::int64_t count = 0;

  // Union-find over the chosen forest, rebuilt on demand; n is tiny.
  bool joins_components(EdgeId e) const {
    std::vector<Vertex> root(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) root[v] = v;
    auto find = [&](Vertex x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (EdgeId c : chosen) root[find(g.edge(c).u)] = find(g.edge(c).v);
    return find(g.edge(e).u) != find(g.edge(e).v);
  }

  bool connected_without_excluded() const {
    std::vector<std::uint8_t> seen(g.num_vertices(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.neighbors(v)) {
        if (excluded[inc.edge] || seen[inc.neighbor]) continue;
        seen[inc.neighbor] = 1;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
    return reached == g.num_vertices();
  }

  void run(EdgeId next) {
    if (static_cast<int>(chosen.size()) == g.num_vertices() - 1) {
      ++count;
      visit(chosen);
      return;
    }
    if (next == g.num_edges()) return;
    if (joins_components(next)) {
      chosen.push_back(next);
      run(next + 1);
      chosen.pop_back();
    }
    excluded[next] = 1;
    if (connected_without_excluded()) run(next + 1);
    excluded[next] = 0;
  }
};

}  // namespace

std::int64_t for_each_spanning_tree(const Graph& g,
                                    const std::function<void(std::span<const EdgeId>)>& visit, int cap) {
  if (g.num_vertices() > cap) {
    throw Error(Errc::InstanceTooLarge,
                "spanning-tree enumeration capped at " + std::to_string(cap) + " vertices");
  }
  if (g.num_vertices() == 0) return 0;
  require_connected(g);
  TreeEnumerator walker{g, visit, {}, std::vector<std::uint8_t>(g.num_edges(), 0)};
  walker.run(0);
  return walker.count;
}

}  // namespace tspanner
