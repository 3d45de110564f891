#include "embedkit/surface_map.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "embedkit/errors.hpp"
#include "embedkit/graph_isomorphism.hpp"

namespace embedkit {

namespace {

// Orbits of the face permutation, started from the smallest unused dart in
// (tail, head, edge) order.
void trace_orbits(const std::vector<Dart>& darts, const std::vector<std::size_t>& rotation_next,
                  std::vector<FaceWalk>& faces, std::vector<std::size_t>& face_of) {
  std::vector<std::size_t> order(darts.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Dart& x = darts[a];
    const Dart& y = darts[b];
    if (x.tail != y.tail) return x.tail < y.tail;
    if (x.head != y.head) return x.head < y.head;
    return x.edge < y.edge;
  });

  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  face_of.assign(darts.size(), kUnset);
  faces.clear();
  for (std::size_t start : order) {
    if (face_of[start] != kUnset) continue;
    FaceWalk walk;
    std::size_t d = start;
    do {
      face_of[d] = faces.size();
      walk.darts.push_back(d);
      d = rotation_next[d ^ 1U];
    } while (d != start);
    faces.push_back(std::move(walk));
  }
}

SimpleGraph underlying_graph(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  SimpleGraph g(vertex_count);
  for (const auto& [u, v] : edges) {
    if (u != v) g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  return g;
}

}  // namespace

std::vector<Vertex> SurfaceMap::face_vertices(std::size_t f) const {
  std::vector<Vertex> out;
  out.reserve(faces_.at(f).darts.size());
  for (std::size_t d : faces_[f].darts) out.push_back(darts_[d].tail);
  return out;
}

bool SurfaceMap::is_simple() const {
  std::vector<std::pair<Vertex, Vertex>> seen;
  seen.reserve(edges_.size());
  for (auto [u, v] : edges_) {
    if (u == v) return false;
    seen.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(seen.begin(), seen.end());
  return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

SurfaceMap build_map(std::size_t vertex_count, std::vector<std::pair<Vertex, Vertex>> edges,
                     std::vector<std::size_t> rotation_next) {
  if (vertex_count == 0) throw ValidationError("map has no vertices");
  const std::size_t dart_count = 2 * edges.size();
  if (rotation_next.size() != dart_count) throw ValidationError("rotation must have one entry per dart");

  SurfaceMap m;
  m.vertex_count_ = vertex_count;
  m.darts_.reserve(dart_count);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= vertex_count || static_cast<std::size_t>(v) >= vertex_count)
      throw ValidationError("edge " + std::to_string(e) + " has an endpoint out of range");
    m.darts_.push_back({u, v, e});
    m.darts_.push_back({v, u, e});
  }

  // rotation_next must permute darts, preserve tails, and be a single cycle at each vertex.
  std::vector<char> hit(dart_count, 0);
  for (std::size_t d = 0; d < dart_count; ++d) {
    const std::size_t next = rotation_next[d];
    if (next >= dart_count || hit[next]) throw ValidationError("rotation is not a permutation of darts");
    hit[next] = 1;
    if (m.darts_[next].tail != m.darts_[d].tail)
      throw ValidationError("rotation at vertex " + std::to_string(m.darts_[d].tail) + " leaves the vertex");
  }
  std::vector<char> vertex_seen(vertex_count, 0);
  std::vector<char> dart_seen(dart_count, 0);
  for (std::size_t d = 0; d < dart_count; ++d) {
    if (dart_seen[d]) continue;
    const auto v = static_cast<std::size_t>(m.darts_[d].tail);
    if (vertex_seen[v]) throw ValidationError("rotation at vertex " + std::to_string(v) + " is not a single cycle");
    vertex_seen[v] = 1;
    for (std::size_t x = d; !dart_seen[x]; x = rotation_next[x]) dart_seen[x] = 1;
  }
  if (edges.empty()) throw ValidationError("map has no edges");
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (!vertex_seen[v]) throw ValidationError("vertex " + std::to_string(v) + ": isolated vertex");

  // Connectivity.
  std::vector<std::vector<Vertex>> adj(vertex_count);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> reach(vertex_count, 0);
  std::vector<Vertex> stack{0};
  reach[0] = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : adj[v])
      if (!reach[u]) {
        reach[u] = 1;
        stack.push_back(u);
      }
  }
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (!reach[v]) throw ValidationError("vertex " + std::to_string(v) + ": graph is disconnected");

  m.edges_ = std::move(edges);
  m.rotation_next_ = std::move(rotation_next);
  trace_orbits(m.darts_, m.rotation_next_, m.faces_, m.face_of_);
  m.genus_ = genus_of(m);
  return m;
}

SurfaceMap trace_faces(const RotationSystem& rot) {
  const std::size_t n = rot.vertex_count();
  auto edges = rot.edges();
  std::vector<std::size_t> dart_index(n * n, 0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [u, v] = edges[e];
    dart_index[static_cast<std::size_t>(u) * n + v] = 2 * e;
    dart_index[static_cast<std::size_t>(v) * n + u] = 2 * e + 1;
  }
  std::vector<std::size_t> rotation_next(2 * edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    for (int side = 0; side < 2; ++side) {
      const Vertex a = side == 0 ? edges[e].first : edges[e].second;
      const Vertex b = side == 0 ? edges[e].second : edges[e].first;
      rotation_next[2 * e + side] = dart_index[static_cast<std::size_t>(a) * n + rot.successor(a, b)];
    }
  }
  SurfaceMap m = build_map(n, std::move(edges), std::move(rotation_next));
  std::size_t total = 0;
  for (const auto& f : m.faces()) total += f.length();
  if (total != 2 * m.edge_count()) throw InternalError("face walks do not cover every directed edge once");
  m.rotation_ = rot;
  return m;
}

SurfaceMap dual_map(const SurfaceMap& m) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(m.edge_count());
  for (std::size_t e = 0; e < m.edge_count(); ++e)
    edges.emplace_back(static_cast<Vertex>(m.face_of(2 * e)), static_cast<Vertex>(m.face_of(2 * e + 1)));
  // Dual dart d sits at the face of primal dart d; its rotation successor is the
  // next dart along that face.
  std::vector<std::size_t> rotation_next(m.darts().size());
  for (std::size_t d = 0; d < rotation_next.size(); ++d) rotation_next[d] = m.face_next(d);
  SurfaceMap dual = build_map(m.face_count(), std::move(edges), std::move(rotation_next));
  if (dual.genus() != m.genus()) throw InternalError("dual genus differs from primal genus");
  return dual;
}

int genus_of(const SurfaceMap& m) {
  const long chi = m.euler_characteristic();
  if (chi % 2 != 0) throw InternalError("odd Euler characteristic " + std::to_string(chi));
  if (chi > 2) throw InternalError("Euler characteristic " + std::to_string(chi) + " exceeds 2");
  return static_cast<int>((2 - chi) / 2);
}

SelfDualResult is_self_dual(const SurfaceMap& m) {
  const SurfaceMap dual = dual_map(m);
  const SimpleGraph primal_graph = underlying_graph(m.vertex_count(), m.edges());
  const SimpleGraph dual_graph = underlying_graph(dual.vertex_count(), dual.edges());
  SelfDualResult result;
  if (auto iso = find_isomorphism(primal_graph, dual_graph)) {
    result.self_dual = true;
    result.witness = std::move(*iso);
  }
  return result;
}

bool faces_pairwise_share_one_edge(const SurfaceMap& m) {
  const std::size_t f = m.face_count();
  std::vector<std::size_t> shared(f * f, 0);
  for (std::size_t e = 0; e < m.edge_count(); ++e) {
    const std::size_t a = m.face_of(2 * e);
    const std::size_t b = m.face_of(2 * e + 1);
    if (a == b) return false;
    ++shared[a * f + b];
    ++shared[b * f + a];
  }
  for (std::size_t a = 0; a < f; ++a)
    for (std::size_t b = 0; b < f; ++b)
      if (a != b && shared[a * f + b] != 1) return false;
  return true;
}

std::vector<Vertex> canonical_cycle(const std::vector<Vertex>& cycle) {
  std::vector<Vertex> best = cycle;
  std::vector<Vertex> candidate(cycle.size());
  for (std::size_t shift = 1; shift < cycle.size(); ++shift) {
    std::rotate_copy(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(shift), cycle.end(), candidate.begin());
    if (candidate < best) best = candidate;
  }
  return best;
}

}  // namespace embedkit
