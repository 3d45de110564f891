#include "embedkit/graph_isomorphism.hpp"

#include <algorithm>

namespace embedkit {

SimpleGraph::SimpleGraph(std::size_t vertex_count)
    : n_(vertex_count), adj_(vertex_count * vertex_count, 0), degree_(vertex_count, 0) {}

bool SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v || adj_[u * n_ + v]) return false;
  adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
  ++degree_[u];
  ++degree_[v];
  ++edge_count_;
  return true;
}

namespace {

class Matcher {
 public:
  Matcher(const SimpleGraph& a, const SimpleGraph& b) : a_(a), b_(b), n_(a.vertex_count()) {
    order_ = search_order();
    map_.assign(n_, kUnset);
    used_.assign(n_, 0);
  }

  bool run() { return extend(0); }
  std::vector<std::size_t> mapping() const { return map_; }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  // Breadth-first from the highest-degree vertex of each component, so most
  // vertices have an already-mapped neighbour when they are placed.
  std::vector<std::size_t> search_order() const {
    std::vector<std::size_t> order;
    std::vector<char> seen(n_, 0);
    while (order.size() < n_) {
      std::size_t root = kUnset;
      for (std::size_t v = 0; v < n_; ++v)
        if (!seen[v] && (root == kUnset || a_.degree(v) > a_.degree(root))) root = v;
      seen[root] = 1;
      std::size_t head = order.size();
      order.push_back(root);
      while (head < order.size()) {
        const std::size_t v = order[head++];
        for (std::size_t u = 0; u < n_; ++u)
          if (!seen[u] && a_.adjacent(v, u)) {
            seen[u] = 1;
            order.push_back(u);
          }
      }
    }
    return order;
  }

  bool consistent(std::size_t depth, std::size_t v, std::size_t w) const {
    if (a_.degree(v) != b_.degree(w)) return false;
    for (std::size_t i = 0; i < depth; ++i) {
      const std::size_t x = order_[i];
      if (a_.adjacent(v, x) != b_.adjacent(w, map_[x])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == n_) return true;
    const std::size_t v = order_[depth];
    for (std::size_t w = 0; w < n_; ++w) {
      if (used_[w] || !consistent(depth, v, w)) continue;
      map_[v] = w;
      used_[w] = 1;
      if (extend(depth + 1)) return true;
      used_[w] = 0;
      map_[v] = kUnset;
    }
    return false;
  }

  const SimpleGraph& a_;
  const SimpleGraph& b_;
  std::size_t n_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> map_;
  std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  std::vector<std::size_t> da(a.vertex_count());
  std::vector<std::size_t> db(b.vertex_count());
  for (std::size_t v = 0; v < da.size(); ++v) {
    da[v] = a.degree(v);
    db[v] = b.degree(v);
  }
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return std::nullopt;

  Matcher matcher(a, b);
  if (!matcher.run()) return std::nullopt;
  return matcher.mapping();
}

}  // namespace embedkit
