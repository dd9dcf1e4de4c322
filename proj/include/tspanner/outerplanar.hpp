#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tspanner/graph.hpp"

namespace tspanner {

enum class EdgeClass : std::uint8_t { External, Internal };
enum class FaceKind : std::uint8_t { EFace, IFace };

/// Interior face of an outerplane embedding.
struct Face {
  int id = 0;
  /// Cyclic vertex order; boundary[i]..boundary[i+1] is edges[i].
  std::vector<Vertex> boundary;
  std::vector<EdgeId> edges;
  std::vector<EdgeId> external_edges;
  FaceKind kind = FaceKind::EFace;

  int length() const { return static_cast<int>(edges.size()); }
};

/// The unique outerplane embedding of a 2-connected outerplanar graph.
///
/// outer_cycle starts at vertex 0 followed by its smaller-id outer neighbour.
/// Faces are numbered in the order the chord scan closes them. The host graph
/// is referenced, not copied, and must outlive the embedding.
class OuterplaneEmbedding {
 public:
  OuterplaneEmbedding(const Graph& host, std::vector<Vertex> outer_cycle, std::vector<Face> faces,
                      std::vector<EdgeClass> edge_class, std::vector<std::array<int, 2>> face_incidence);

  const Graph& host() const { return *host_; }
  const std::vector<Vertex>& outer_cycle() const { return outer_cycle_; }
  int position(Vertex v) const { return position_[v]; }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int id) const { return faces_[id]; }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  EdgeClass edge_class(EdgeId e) const { return edge_class_[e]; }
  /// One or two interior face ids; unused slot is -1.
  const std::array<int, 2>& face_incidence(EdgeId e) const { return face_incidence_[e]; }

 private:
  const Graph* host_;
  std::vector<Vertex> outer_cycle_;
  std::vector<int> position_;
  std::vector<Face> faces_;
  std::vector<EdgeClass> edge_class_;
  std::vector<std::array<int, 2>> face_incidence_;
};

/// Recognizes a 2-connected outerplanar graph and returns its embedding.
/// Throws NotOuterplanar. A single edge yields an embedding with no faces.
OuterplaneEmbedding outerplane_embed(const Graph& g);
OuterplaneEmbedding outerplane_embed(const Graph&& g) = delete;

/// Faces of the embedding, with kinds and external-edge subsets.
const std::vector<Face>& interior_faces(const OuterplaneEmbedding& emb);

struct WeakDual {
  /// One node per interior face (node id = face id).
  Graph tree;
  /// Host edge shared by the two faces of each dual edge.
  std::vector<EdgeId> shared_edge;
  /// w(v_f) = |E(f)| - 2.
  std::vector<Weight> weight;
  /// Sorted face ids whose dual degree is below |E(f)|, i.e. the E-faces.
  std::vector<Vertex> special;
};

WeakDual weak_dual(const OuterplaneEmbedding& emb);

/// Interior faces of G[V(C)] for a cycle C given as a closed vertex walk
/// (first vertex not repeated). Throws Error(NotACycle).
std::vector<int> enclosed_region(const OuterplaneEmbedding& emb, const std::vector<Vertex>& cycle);

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

/// Cycle 0..n-1 plus round(fraction * (n-3)) chords drawn from a random
/// triangulation built by recursive polygon splitting. Deterministic per seed.
Graph random_outerplanar(int n, Fraction chord_fraction, std::uint64_t seed);

}  // namespace tspanner
