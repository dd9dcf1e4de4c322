#include "tspanner/outerplanar.hpp"

#include <algorithm>
#include <bit>

#include "tspanner/error.hpp"

namespace tspanner {

OuterplaneEmbedding::OuterplaneEmbedding(const Graph& host, std::vector<Vertex> outer_cycle, std::vector<Face> faces,
                                         std::vector<EdgeClass> edge_class,
                                         std::vector<std::array<int, 2>> face_incidence)
    : host_(&host),
      outer_cycle_(std::move(outer_cycle)),
      position_(host.num_vertices(), -1),
      faces_(std::move(faces)),
      edge_class_(std::move(edge_class)),
      face_incidence_(std::move(face_incidence)) {
  for (std::size_t i = 0; i < outer_cycle_.size(); ++i) position_[outer_cycle_[i]] = static_cast<int>(i);
}

namespace {

std::uint64_t pair_key(Vertex a, Vertex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

// Open addressing on vertex pairs; keys are never erased.
class PairTable {
 public:
  explicit PairTable(std::size_t capacity)
      : mask_(std::bit_ceil(capacity + capacity / 2 + 2) - 1), keys_(mask_ + 1, kEmpty), values_(mask_ + 1) {}

  int find(Vertex a, Vertex b) const {
    const std::uint64_t key = pair_key(a, b);
    for (std::size_t i = slot(key);; i = (i + 1) & mask_) {
      if (keys_[i] == key) return values_[i];
      if (keys_[i] == kEmpty) return -1;
    }
  }
  void insert(Vertex a, Vertex b, int value) {
    const std::uint64_t key = pair_key(a, b);
    std::size_t i = slot(key);
    while (keys_[i] != kEmpty) i = (i + 1) & mask_;
    keys_[i] = key;
    values_[i] = value;
  }

 private:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
  std::size_t slot(std::uint64_t key) const { return (key * 0x9E3779B97F4A7C15ull) >> 20 & mask_; }
  std::size_t mask_;
  std::vector<std::uint64_t> keys_;
  std::vector<int> values_;
};

// Edge of the reduced graph. Once an outer arc a..x..b has been folded into
// it, near_a / near_b are the arc vertices adjacent to a and b.
struct ReducedEdge {
  Vertex a;
  Vertex b;
  bool real;
  bool folded = false;
  bool alive = true;
  Vertex near_a = kNoVertex;
  Vertex near_b = kNoVertex;

  Vertex other(Vertex x) const { return x == a ? b : a; }
  Vertex near(Vertex x) const {
    if (!folded) return other(x);
    return x == a ? near_a : near_b;
  }
  // Arc runs from x (first interior vertex near_x) to the other endpoint
  // (last interior vertex near_y).
  void fold(Vertex x, Vertex near_x, Vertex near_y) {
    folded = true;
    near_a = x == a ? near_x : near_y;
    near_b = x == a ? near_y : near_x;
  }
};

// Degree-2 elimination. Returns the outer Hamiltonian cycle starting at 0.
std::vector<Vertex> reconstruct_outer_cycle(const Graph& g) {
  const int n = g.num_vertices();
  // Each elimination adds at most one edge.
  const std::size_t capacity = static_cast<std::size_t>(g.num_edges()) + n;
  std::vector<ReducedEdge> edges;
  edges.reserve(capacity);
  PairTable lookup(capacity);
  // Incidence lists as linked slots: slot 2*id+side belongs to endpoint side.
  std::vector<int> head(n, -1);
  std::vector<int> next_slot(2 * capacity);
  std::vector<int> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  auto attach = [&](int id) {
    const ReducedEdge& e = edges[id];
    next_slot[2 * id] = head[e.a];
    head[e.a] = 2 * id;
    next_slot[2 * id + 1] = head[e.b];
    head[e.b] = 2 * id + 1;
  };
  for (const Edge& e : g.edges()) {
    const int id = static_cast<int>(edges.size());
    edges.push_back({e.u, e.v, true});
    lookup.insert(e.u, e.v, id);
    attach(id);
  }

  std::vector<std::array<Vertex, 2>> link(n, {kNoVertex, kNoVertex});
  std::vector<std::uint8_t> alive(n, 1);
  std::vector<Vertex> candidates;
  for (Vertex v = n - 1; v >= 0; --v) {
    if (degree[v] == 2) candidates.push_back(v);
  }

  int remaining = n;
  int last_edge = -1;
  bool closed = false;
  while (remaining > 2) {
    Vertex v = kNoVertex;
    while (!candidates.empty()) {
      Vertex c = candidates.back();
      candidates.pop_back();
      if (alive[c] && degree[c] == 2) {
        v = c;
        break;
      }
    }
    if (v == kNoVertex) throw NotOuterplanar(OuterplanarityReason::NoDegree2Vertex);

    int pair[2] = {-1, -1};
    int found = 0;
    // Dead edges are unlinked lazily while walking.
    for (int* at = &head[v]; *at >= 0 && found < 2;) {
      const int id = *at / 2;
      if (edges[id].alive) {
        pair[found++] = id;
        at = &next_slot[*at];
      } else {
        *at = next_slot[*at];
      }
    }
    ReducedEdge& left = edges[pair[0]];
    ReducedEdge& right = edges[pair[1]];
    const Vertex u = left.other(v);
    const Vertex w = right.other(v);
    link[v] = {left.near(v), right.near(v)};
    const Vertex near_u = left.near(u);
    const Vertex near_w = right.near(w);
    left.alive = false;
    right.alive = false;
    alive[v] = 0;
    --remaining;
    --degree[u];
    --degree[w];

    const int found_id = lookup.find(u, w);
    if (found_id < 0) {
      const int id = static_cast<int>(edges.size());
      edges.push_back({u, w, false});
      edges.back().fold(u, near_u, near_w);
      lookup.insert(u, w, id);
      attach(id);
      ++degree[u];
      ++degree[w];
      last_edge = id;
    } else {
      ReducedEdge& existing = edges[found_id];
      if (!existing.folded) {
        existing.fold(u, near_u, near_w);
        last_edge = found_id;
      } else {
        // Both sides of {u,w} are folded arcs: they must make up the whole cycle.
        if (remaining != 2) throw NotOuterplanar(OuterplanarityReason::NotHamiltonian);
        link[u] = {near_u, existing.near(u)};
        link[w] = {near_w, existing.near(w)};
        closed = true;
        break;
      }
    }
    if (degree[u] == 2) candidates.push_back(u);
    if (degree[w] == 2) candidates.push_back(w);
  }

  if (!closed) {
    const ReducedEdge& last = edges[last_edge];
    if (!last.real) throw NotOuterplanar(OuterplanarityReason::NotHamiltonian);
    link[last.a] = {last.near(last.a), last.b};
    link[last.b] = {last.near(last.b), last.a};
  }

  std::vector<Vertex> cycle;
  cycle.reserve(n);
  std::vector<std::uint8_t> seen(n, 0);
  Vertex prev = kNoVertex;
  Vertex cur = 0;
  for (int step = 0; step < n; ++step) {
    if (cur == kNoVertex || seen[cur]) throw NotOuterplanar(OuterplanarityReason::NotHamiltonian);
    seen[cur] = 1;
    cycle.push_back(cur);
    const Vertex next = link[cur][0] == prev ? link[cur][1] : link[cur][0];
    prev = cur;
    cur = next;
  }
  if (cur != 0) throw NotOuterplanar(OuterplanarityReason::NotHamiltonian);
  for (int i = 0; i < n; ++i) {
    const int id = lookup.find(cycle[i], cycle[(i + 1) % n]);
    if (id < 0 || !edges[id].real) {
      throw NotOuterplanar(OuterplanarityReason::NotHamiltonian);
    }
  }
  if (cycle[n - 1] < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

struct ScanEntry {
  int pos;
  EdgeId below;  // edge to the entry underneath
};

}  // namespace

OuterplaneEmbedding outerplane_embed(const Graph& g) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  if (n < 2 || !g.connected()) throw NotOuterplanar(OuterplanarityReason::NotHamiltonian);
  if (n == 2) {
    return OuterplaneEmbedding(g, {0, 1}, {}, {EdgeClass::External}, {{{-1, -1}}});
  }
  if (m > 2 * n - 3) throw NotOuterplanar(OuterplanarityReason::TooManyEdges);

  std::vector<Vertex> cycle = reconstruct_outer_cycle(g);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[cycle[i]] = i;

  // outer_edge[p] joins positions p and p+1 (mod n). Chords are bucketed by
  // their larger position, with smaller endpoints in decreasing order.
  std::vector<EdgeId> outer_edge(n, kNoEdge);
  std::vector<EdgeClass> edge_class(m, EdgeClass::Internal);
  struct Chord {
    int start;
    EdgeId edge;
  };
  std::vector<int> chord_first(n + 1, 0);
  std::vector<Chord> chords(m - n);
  for (int p = 0; p < n; ++p) {
    for (const Incidence& inc : g.neighbors(cycle[p])) {
      const int q = pos[inc.neighbor];
      if (q == (p + 1) % n) {
        outer_edge[p] = inc.edge;
        edge_class[inc.edge] = EdgeClass::External;
      } else if (q > p + 1 && !(p == 0 && q == n - 1)) {
        ++chord_first[q + 1];
      }
    }
  }
  for (int p = 0; p < n; ++p) chord_first[p + 1] += chord_first[p];
  {
    std::vector<int> fill(chord_first.begin(), chord_first.end() - 1);
    for (int p = n - 1; p >= 0; --p) {
      for (const Incidence& inc : g.neighbors(cycle[p])) {
        const int q = pos[inc.neighbor];
        if (q > p + 1 && !(p == 0 && q == n - 1)) chords[fill[q]++] = {p, inc.edge};
      }
    }
  }

  std::vector<Face> faces;
  faces.reserve(m - n + 1);
  std::vector<std::array<int, 2>> incidence(m, {-1, -1});
  auto add_face = [&](std::vector<Vertex> boundary, std::vector<EdgeId> face_edges) {
    Face f;
    f.id = static_cast<int>(faces.size());
    f.boundary = std::move(boundary);
    f.edges = std::move(face_edges);
    for (EdgeId e : f.edges) {
      auto& slot = incidence[e];
      (slot[0] < 0 ? slot[0] : slot[1]) = f.id;
      if (edge_class[e] == EdgeClass::External) f.external_edges.push_back(e);
    }
    f.kind = f.external_edges.empty() ? FaceKind::IFace : FaceKind::EFace;
    faces.push_back(std::move(f));
  };

  std::vector<ScanEntry> stack;
  stack.reserve(n);
  stack.push_back({0, kNoEdge});
  for (int p = 1; p < n; ++p) {
    stack.push_back({p, outer_edge[p - 1]});
    for (int c = chord_first[p]; c < chord_first[p + 1]; ++c) {
      const auto [start, chord] = chords[c];
      std::vector<Vertex> boundary;
      std::vector<EdgeId> face_edges;
      while (!stack.empty() && stack.back().pos > start) {
        boundary.push_back(cycle[stack.back().pos]);
        face_edges.push_back(stack.back().below);
        stack.pop_back();
      }
      if (stack.empty() || stack.back().pos != start) throw NotOuterplanar(OuterplanarityReason::CrossingChords);
      boundary.push_back(cycle[start]);
      std::reverse(boundary.begin(), boundary.end());
      std::reverse(face_edges.begin(), face_edges.end());
      face_edges.push_back(chord);
      add_face(std::move(boundary), std::move(face_edges));
      stack.push_back({p, chord});
    }
  }
  std::vector<Vertex> boundary;
  std::vector<EdgeId> face_edges;
  for (std::size_t i = 0; i < stack.size(); ++i) {
    boundary.push_back(cycle[stack[i].pos]);
    if (i > 0) face_edges.push_back(stack[i].below);
  }
  face_edges.push_back(outer_edge[n - 1]);
  add_face(std::move(boundary), std::move(face_edges));

  return OuterplaneEmbedding(g, std::move(cycle), std::move(faces), std::move(edge_class), std::move(incidence));
}

const std::vector<Face>& interior_faces(const OuterplaneEmbedding& emb) { return emb.faces(); }

WeakDual weak_dual(const OuterplaneEmbedding& emb) {
  const Graph& g = emb.host();
  WeakDual dual;
  std::vector<Edge> pairs;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto& inc = emb.face_incidence(e);
    if (inc[1] >= 0) {
      pairs.push_back({inc[0], inc[1]});
      dual.shared_edge.push_back(e);
    }
  }
  dual.tree = Graph(emb.num_faces(), pairs);
  dual.weight.reserve(emb.num_faces());
  for (const Face& f : emb.faces()) {
    dual.weight.push_back(f.length() - 2);
    if (dual.tree.degree(f.id) < f.length()) dual.special.push_back(f.id);
  }
  return dual;
}

std::vector<int> enclosed_region(const OuterplaneEmbedding& emb, const std::vector<Vertex>& cycle) {
  const Graph& g = emb.host();
  if (cycle.size() < 3) throw Error(Errc::NotACycle, "a cycle needs at least three vertices");
  std::vector<std::uint8_t> on_cycle(g.num_vertices(), 0);
  for (Vertex v : cycle) {
    if (v < 0 || v >= g.num_vertices()) throw Error(Errc::NotACycle, "vertex outside host");
    if (on_cycle[v]) throw Error(Errc::NotACycle, "vertex repeated on cycle");
    on_cycle[v] = 1;
  }
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (!g.find_edge(cycle[i], cycle[(i + 1) % cycle.size()])) {
      throw Error(Errc::NotACycle, "consecutive cycle vertices are not adjacent");
    }
  }
  // All vertices lie on a circle in convex position, so the faces of G[V(C)]
  // are exactly the faces whose corners all lie on C.
  std::vector<int> region;
  for (const Face& f : emb.faces()) {
    if (std::all_of(f.boundary.begin(), f.boundary.end(), [&](Vertex v) { return on_cycle[v] != 0; })) {
      region.push_back(f.id);
    }
  }
  return region;
}

}  // namespace tspanner
