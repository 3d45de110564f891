#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace embedkit {

// Simple undirected graph held as a dense adjacency matrix.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t vertex_count);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t degree(std::size_t v) const { return degree_.at(v); }

  // Returns false if the edge already existed or is a loop.
  bool add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u * n_ + v] != 0; }

 private:
  std::size_t n_;
  std::size_t edge_count_ = 0;
  std::vector<char> adj_;
  std::vector<std::size_t> degree_;
};

// Exact isomorphism test. Degree-multiset prefilter, then backtracking with
// adjacency-consistency pruning. Returns mapping[v_of_a] = v_of_b on success.
std::optional<std::vector<std::size_t>> find_isomorphism(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace embedkit
