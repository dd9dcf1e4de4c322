#include "tspanner/spanner.hpp"

#include <algorithm>

#include "tspanner/error.hpp"

namespace tspanner {

std::vector<std::vector<EdgeId>> external_edges_of_faces(const OuterplaneEmbedding& emb) {
  std::vector<int> count(emb.host().num_edges(), 0);
  for (const Face& f : emb.faces()) {
    for (EdgeId e : f.edges) ++count[e];
  }
  std::vector<std::vector<EdgeId>> out(emb.num_faces());
  for (const Face& f : emb.faces()) {
    for (EdgeId e : f.edges) {
      if (count[e] == 1) out[f.id].push_back(e);
    }
  }
  return out;
}

PartSubgraphs part_subgraphs(const OuterplaneEmbedding& emb, const SPartition& partition) {
  const int m = emb.host().num_edges();
  PartSubgraphs out;
  out.count.assign(m, 0);
  out.part.assign(m, {-1, -1});
  out.internal.resize(partition.parts.size());
  for (std::size_t i = 0; i < partition.parts.size(); ++i) {
    const int index = static_cast<int>(i);
    for (Vertex node : partition.parts[i]) {
      for (EdgeId e : emb.face(node).edges) {
        ++out.count[e];
        auto& slot = out.part[e];
        if (slot[0] != index && slot[1] != index) (slot[0] < 0 ? slot[0] : slot[1]) = index;
      }
    }
  }
  for (EdgeId e = 0; e < m; ++e) {
    if (out.count[e] == 2 && out.part[e][1] < 0) out.internal[out.part[e][0]].push_back(e);
  }
  return out;
}

SpanningTree build_spanner(const OuterplaneEmbedding& emb, const SPartition& partition, Weight bound) {
  const Graph& g = emb.host();
  if (g.num_vertices() == 2) return SpanningTree(g, {0});
  const Verdict verdict =
      verify_spartition(reduce_to_spartition(emb, static_cast<int>(bound + 1)), partition);
  if (!verdict.ok()) {
    throw Error(Errc::InvalidPartition, std::string("S-partition rejected: ") + to_string(*verdict.violation));
  }

  // Steps 1-3: drop the edges interior to each part.
  const PartSubgraphs subgraphs = part_subgraphs(emb, partition);
  std::vector<std::uint8_t> dropped(g.num_edges(), 0);
  for (const auto& internal : subgraphs.internal) {
    for (EdgeId e : internal) dropped[e] = 1;
  }
  std::vector<EdgeId> kept;
  kept.reserve(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!dropped[e]) kept.push_back(e);
  }

  // Step 4: the faces of G' are the part cycles C_i. G' keeps the outer
  // cycle of G, so the external edges of C_i are those of its faces. Open
  // each C_i at its smallest one.
  std::vector<std::uint8_t> opened(g.num_edges(), 0);
  for (const auto& part : partition.parts) {
    EdgeId pick = kNoEdge;
    for (int f : part) {
      for (EdgeId e : emb.faces()[f].external_edges) {
        if (pick == kNoEdge || e < pick) pick = e;
      }
    }
    if (pick == kNoEdge) throw Error(Errc::InvalidPartition, "part has no external edge");
    opened[pick] = 1;
  }

  // Step 5.
  std::vector<EdgeId> tree;
  tree.reserve(g.num_vertices() - 1);
  for (EdgeId e : kept) {
    if (!opened[e]) tree.push_back(e);
  }
  return SpanningTree(g, std::move(tree));
}

namespace {

std::vector<std::uint8_t> side_of_cut(const Graph& g, const std::vector<std::uint8_t>& in_tree, Vertex from) {
  std::vector<std::uint8_t> side(g.num_vertices(), 0);
  std::vector<Vertex> stack{from};
  side[from] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.neighbors(v)) {
      if (!in_tree[inc.edge] || side[inc.neighbor]) continue;
      side[inc.neighbor] = 1;
      stack.push_back(inc.neighbor);
    }
  }
  return side;
}

}  // namespace

SpanningTree canonicalize(const OuterplaneEmbedding& emb, const SpanningTree& tree) {
  const Graph& g = emb.host();
  std::vector<std::uint8_t> in_tree(g.num_edges(), 0);
  for (EdgeId e : tree.edges()) in_tree[e] = 1;

  for (const Face& f : emb.faces()) {
    if (f.kind != FaceKind::EFace) continue;
    if (!std::all_of(f.external_edges.begin(), f.external_edges.end(), [&](EdgeId e) { return in_tree[e] != 0; })) {
      continue;
    }
    const EdgeId removed = *std::min_element(f.external_edges.begin(), f.external_edges.end());
    in_tree[removed] = 0;
    const auto side = side_of_cut(g, in_tree, g.edge(removed).u);
    for (EdgeId e : f.edges) {
      if (e != removed && side[g.edge(e).u] != side[g.edge(e).v]) {
        in_tree[e] = 1;
        break;
      }
    }
  }

  std::vector<EdgeId> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (in_tree[e]) edges.push_back(e);
  }
  return SpanningTree(g, std::move(edges), tree.root());
}

CanonicalReport check_canonical(const OuterplaneEmbedding& emb, const SpanningTree& tree) {
  const Graph& g = emb.host();
  CanonicalReport report;
  for (const Face& f : emb.faces()) {
    if (f.kind != FaceKind::EFace) continue;
    const auto missing = std::count_if(f.external_edges.begin(), f.external_edges.end(),
                                       [&](EdgeId e) { return !tree.contains(e); });
    if (missing != 1) {
      report.p1 = false;
      report.p1_face = f.id;
      break;
    }
  }

  std::vector<std::vector<int>> efaces_at(g.num_vertices());
  for (const Face& f : emb.faces()) {
    if (f.kind != FaceKind::EFace) continue;
    for (Vertex v : f.boundary) efaces_at[v].push_back(f.id);
  }
  std::vector<int> on_cycle(g.num_vertices(), -1);
  std::vector<int> checked(emb.num_faces(), -1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (tree.contains(e) || emb.edge_class(e) != EdgeClass::External) continue;
    const auto cycle = tree_path(tree, g.edge(e).u, g.edge(e).v);
    for (Vertex v : cycle) on_cycle[v] = e;
    int enclosed = 0;
    for (Vertex v : cycle) {
      for (int id : efaces_at[v]) {
        if (checked[id] == e) continue;
        checked[id] = e;
        const auto& boundary = emb.face(id).boundary;
        if (std::all_of(boundary.begin(), boundary.end(), [&](Vertex x) { return on_cycle[x] == e; })) ++enclosed;
      }
    }
    if (enclosed != 1) {
      report.p2 = false;
      report.p2_edge = e;
      break;
    }
  }
  return report;
}

}  // namespace tspanner
