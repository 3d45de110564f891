#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "embedkit/rotation_system.hpp"

namespace embedkit {

// One side of an edge. Darts 2e and 2e+1 are the two orientations of edge e.
struct Dart {
  Vertex tail = 0;
  Vertex head = 0;
  std::size_t edge = 0;

  DirectedEdge directed() const noexcept { return {tail, head}; }
};

// A face boundary: dart indices in traversal order, closed cyclically.
struct FaceWalk {
  std::vector<std::size_t> darts;

  std::size_t length() const noexcept { return darts.size(); }
};

// A 2-cell embedding of a connected graph in an orientable surface, stored as a
// combinatorial map. Primal maps come from a simple RotationSystem; dual maps
// may carry loops and parallel edges, so the map is kept dart-based.
class SurfaceMap {
 public:
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::size_t face_count() const noexcept { return faces_.size(); }

  const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }
  const std::vector<Dart>& darts() const noexcept { return darts_; }
  const std::vector<FaceWalk>& faces() const noexcept { return faces_; }
  const Dart& dart(std::size_t d) const { return darts_.at(d); }

  // Face containing dart d.
  std::size_t face_of(std::size_t d) const { return face_of_.at(d); }
  // Next dart with the same tail in the cyclic order at that vertex.
  std::size_t rotation_next(std::size_t d) const { return rotation_next_.at(d); }
  // Face permutation on darts: (a,b) -> (b, p_b(a)).
  std::size_t face_next(std::size_t d) const { return rotation_next_.at(d ^ 1U); }

  // Set only for maps traced from a simple rotation system.
  const std::optional<RotationSystem>& rotation() const noexcept { return rotation_; }

  // Vertex sequence of face f, starting at the tail of its first dart.
  std::vector<Vertex> face_vertices(std::size_t f) const;

  long euler_characteristic() const noexcept {
    return static_cast<long>(vertex_count_) - static_cast<long>(edges_.size()) + static_cast<long>(faces_.size());
  }
  int genus() const noexcept { return genus_; }

  // True when there are no loops and no parallel edges.
  bool is_simple() const;

 private:
  friend SurfaceMap trace_faces(const RotationSystem& rot);
  friend SurfaceMap dual_map(const SurfaceMap& m);
  friend SurfaceMap build_map(std::size_t, std::vector<std::pair<Vertex, Vertex>>, std::vector<std::size_t>);

  std::size_t vertex_count_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<Dart> darts_;
  std::vector<std::size_t> rotation_next_;
  std::vector<FaceWalk> faces_;
  std::vector<std::size_t> face_of_;
  int genus_ = 0;
  std::optional<RotationSystem> rotation_;
};

// Faces are the orbits of (a,b) -> (b, p_b(a)). Orbits are started from the
// lexicographically smallest unused directed edge, so face order is canonical.
SurfaceMap trace_faces(const RotationSystem& rot);

// Assemble a map from raw darts. Dart 2e runs edges[e].first -> edges[e].second;
// rotation_next must be a permutation preserving dart tails. Throws
// ValidationError for inconsistent input.
SurfaceMap build_map(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges,
                     std::vector<std::size_t> rotation_next);

// One vertex per face; edge e of the dual joins the two faces on either side of
// edge e of m, so edge indices are shared. Faces of the dual correspond to
// vertices of m.
SurfaceMap dual_map(const SurfaceMap& m);

// g = (2 - chi) / 2. Throws InternalError if chi is odd or greater than 2.
int genus_of(const SurfaceMap& m);

struct SelfDualResult {
  bool self_dual = false;
  // witness[v] = face of m (vertex of the dual) assigned to primal vertex v.
  std::vector<std::size_t> witness;
};

// Whether the dual's underlying simple graph is isomorphic to the primal graph.
SelfDualResult is_self_dual(const SurfaceMap& m);

// Complete-graph criterion: every two distinct faces share exactly one edge
// and no face meets itself across an edge.
bool faces_pairwise_share_one_edge(const SurfaceMap& m);

// Rotate a cyclic sequence so it starts at its lexicographically smallest rotation.
std::vector<Vertex> canonical_cycle(const std::vector<Vertex>& cycle);

}  // namespace embedkit
