#pragma once

#include <array>
#include <optional>
#include <vector>

#include "tspanner/graph.hpp"
#include "tspanner/outerplanar.hpp"
#include "tspanner/spartition.hpp"

namespace tspanner {

/// Per face id, the boundary edges that lie in no other interior face.
std::vector<std::vector<EdgeId>> external_edges_of_faces(const OuterplaneEmbedding& emb);

/// Edge bookkeeping for the subgraphs G_i spanned by the faces of each part.
struct PartSubgraphs {
  /// Number of interior faces containing each edge.
  std::vector<int> count;
  /// Up to two part indices containing each edge; unused slots are -1.
  std::vector<std::array<int, 2>> part;
  /// internal[i]: edges interior to G_i (count 2, both faces in part i).
  std::vector<std::vector<EdgeId>> internal;
};

PartSubgraphs part_subgraphs(const OuterplaneEmbedding& emb, const SPartition& partition);

/// Tree spanner with stretch at most bound + 1 from an S-partition of the weak
/// dual with the given bound. Throws Error(InvalidPartition).
SpanningTree build_spanner(const OuterplaneEmbedding& emb, const SPartition& partition, Weight bound);

/// Swaps edges until every E-face misses exactly one external edge. E-faces
/// are visited in id order; the removed external edge is the smallest id.
SpanningTree canonicalize(const OuterplaneEmbedding& emb, const SpanningTree& tree);

struct CanonicalReport {
  bool p1 = true;
  /// First E-face that does not miss exactly one external edge.
  std::optional<int> p1_face;
  bool p2 = true;
  /// First external non-tree edge whose fundamental cycle does not enclose
  /// exactly one E-face.
  std::optional<EdgeId> p2_edge;

  bool canonical() const { return p1 && p2; }
};

CanonicalReport check_canonical(const OuterplaneEmbedding& emb, const SpanningTree& tree);

}  // namespace tspanner
