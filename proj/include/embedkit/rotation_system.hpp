#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace embedkit {

using Vertex = int;

struct DirectedEdge {
  Vertex tail = 0;
  Vertex head = 0;

  auto operator<=>(const DirectedEdge&) const = default;
};

// Per-vertex cyclic orderings of neighbours of a simple connected graph.
//
// rotation(v) lists every neighbour of v exactly once, in cyclic order; the
// successor of the last entry is the first. Construction validates adjacency
// symmetry, simplicity and connectivity and throws ValidationError naming the
// offending vertex.
class RotationSystem {
 public:
  explicit RotationSystem(std::vector<std::vector<Vertex>> rotations);

  std::size_t vertex_count() const noexcept { return rotations_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t degree(Vertex v) const { return rotations_.at(v).size(); }

  const std::vector<Vertex>& rotation(Vertex v) const { return rotations_.at(v); }
  const std::vector<std::vector<Vertex>>& rotations() const noexcept { return rotations_; }

  bool adjacent(Vertex u, Vertex v) const;

  // Neighbour following `u` in the cyclic order at `v` (p_v(u)). `u` must be adjacent to `v`.
  Vertex successor(Vertex v, Vertex u) const;

  // Undirected edges as (min, max) pairs in lexicographic order; index = column index in all matrices.
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  bool operator==(const RotationSystem& other) const { return rotations_ == other.rotations_; }

 private:
  std::size_t index_of(Vertex v, Vertex u) const { return static_cast<std::size_t>(v) * rotations_.size() + u; }

  std::vector<std::vector<Vertex>> rotations_;
  // position_[v*n+u] = index of u inside rotation(v), or -1.
  std::vector<int> position_;
  std::size_t edge_count_ = 0;
};

// Text format:
//   ROT v=<n>
//   <vertex>: <neighbor> <neighbor> ...
// one line per vertex 0..n-1, single spaces, newline-terminated.
RotationSystem parse_rotation_system(std::istream& in);
RotationSystem parse_rotation_system(std::string_view text);
RotationSystem read_rotation_file(const std::string& path);

std::string format_rotation_system(const RotationSystem& rot);
void write_rotation_file(const RotationSystem& rot, const std::string& path);

}  // namespace embedkit
