#include <algorithm>
#include <atomic>
#include <limits>
#include <numeric>
#include <thread>

#include "embedkit/errors.hpp"
#include "embedkit/scheme_gen.hpp"

namespace embedkit {

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > kNone / a) return kNone;
  return a * b;
}

// Cyclic orders of `neighbors` with the first entry fixed, in lexicographic order.
std::vector<std::vector<Vertex>> cyclic_orders(const std::vector<Vertex>& neighbors, std::size_t limit) {
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> tail(neighbors.begin() + 1, neighbors.end());
  do {
    std::vector<Vertex> order{neighbors.front()};
    order.insert(order.end(), tail.begin(), tail.end());
    out.push_back(std::move(order));
  } while (out.size() < limit && std::next_permutation(tail.begin(), tail.end()));
  return out;
}

class BipartiteEnumerator {
 public:
  BipartiteEnumerator(int r, int s) : r_(r), s_(s), n_(static_cast<std::size_t>(r + s)) {
    std::vector<Vertex> part_a(static_cast<std::size_t>(r));
    std::vector<Vertex> part_b(static_cast<std::size_t>(s));
    std::iota(part_a.begin(), part_a.end(), 0);
    std::iota(part_b.begin(), part_b.end(), r);
    // Orders beyond what a 64-bit index can address are never reached.
    constexpr std::size_t kLimit = 1U << 20;
    orders_a_ = cyclic_orders(part_b, kLimit);  // rotations at vertices of the first part
    orders_b_ = cyclic_orders(part_a, kLimit);
    exhaustive_ = orders_a_.size() < kLimit && orders_b_.size() < kLimit;
    total_ = 1;
    for (std::size_t v = 1; v < n_; ++v) total_ = saturating_mul(total_, radix(v));
    if (total_ == kNone) exhaustive_ = false;
  }

  std::uint64_t total() const noexcept { return total_; }
  // Whether indices 0..total()-1 cover every rotation system with vertex 0 fixed.
  bool exhaustive() const noexcept { return exhaustive_; }

  std::vector<std::vector<Vertex>> rotations(std::uint64_t index) const {
    std::vector<std::vector<Vertex>> rot(n_);
    rot[0] = orders_a_.front();
    for (std::size_t v = n_ - 1; v >= 1; --v) {
      const std::uint64_t base = radix(v);
      rot[v] = orders_for(v)[static_cast<std::size_t>(index % base)];
      index /= base;
    }
    return rot;
  }

  // Face census test: r faces of length s and s faces of length r.
  bool census_ok(const std::vector<std::vector<Vertex>>& rot, std::vector<int>& succ, std::vector<char>& seen) const {
    succ.assign(n_ * n_, -1);
    for (std::size_t v = 0; v < n_; ++v) {
      const auto& row = rot[v];
      for (std::size_t i = 0; i < row.size(); ++i) succ[v * n_ + row[i]] = row[(i + 1) % row.size()];
    }
    seen.assign(n_ * n_, 0);
    const std::size_t max_len = static_cast<std::size_t>(std::max(r_, s_));
    std::size_t faces_len_r = 0;
    std::size_t faces_len_s = 0;
    for (std::size_t a = 0; a < n_; ++a) {
      for (Vertex b0 : rot[a]) {
        if (seen[a * n_ + b0]) continue;
        std::size_t len = 0;
        std::size_t x = a;
        auto y = static_cast<std::size_t>(b0);
        while (!seen[x * n_ + y]) {
          seen[x * n_ + y] = 1;
          if (++len > max_len) return false;
          const auto z = static_cast<std::size_t>(succ[y * n_ + x]);
          x = y;
          y = z;
        }
        if (len == static_cast<std::size_t>(s_)) ++faces_len_s;
        else if (len == static_cast<std::size_t>(r_)) ++faces_len_r;
        else return false;
        if (r_ == s_) {
          if (faces_len_s > n_) return false;
        } else if (faces_len_s > static_cast<std::size_t>(r_) || faces_len_r > static_cast<std::size_t>(s_)) {
          return false;
        }
      }
    }
    return true;
  }

 private:
  const std::vector<std::vector<Vertex>>& orders_for(std::size_t v) const {
    return v < static_cast<std::size_t>(r_) ? orders_a_ : orders_b_;
  }
  std::uint64_t radix(std::size_t v) const { return orders_for(v).size(); }

  int r_;
  int s_;
  std::size_t n_;
  std::vector<std::vector<Vertex>> orders_a_;
  std::vector<std::vector<Vertex>> orders_b_;
  std::uint64_t total_ = 1;
  bool exhaustive_ = true;
};

std::optional<SurfaceMap> self_dual_map(const std::vector<std::vector<Vertex>>& rot) {
  SurfaceMap map = trace_faces(RotationSystem(rot));
  if (!is_self_dual(map).self_dual) return std::nullopt;
  return map;
}

}  // namespace

BipartiteSearchResult search_self_dual_bipartite(int r, int s, const BipartiteSearchOptions& options) {
  if (r < 4 || s < 4 || r % 2 != 0 || s % 2 != 0)
    throw ValidationError("bipartite search requires even r, s >= 4, got r=" + std::to_string(r) +
                          ", s=" + std::to_string(s));
  if (r + s > 64) throw ValidationError("bipartite search supports at most 64 vertices");

  BipartiteSearchResult result;
  if (!bipartite_self_dual_exists(r, s)) {
    result.status = SearchStatus::Nonexistent;
    return result;
  }

  const BipartiteEnumerator enumerator(r, s);
  const std::uint64_t limit = std::min(enumerator.total(), options.budget);
  const unsigned threads = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(options.threads, limit)));
  std::atomic<std::uint64_t> best{kNone};

  // Contiguous blocks per worker; the lowest index wins regardless of scheduling.
  auto worker = [&](unsigned id) {
    const std::uint64_t lo = limit / threads * id + std::min<std::uint64_t>(id, limit % threads);
    const std::uint64_t hi = lo + limit / threads + (id < limit % threads ? 1 : 0);
    std::vector<int> succ;
    std::vector<char> seen;
    for (std::uint64_t i = lo; i < hi && i < best.load(); ++i) {
      const auto rot = enumerator.rotations(i);
      if (!enumerator.census_ok(rot, succ, seen) || !self_dual_map(rot)) continue;
      std::uint64_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
      return;
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
  }

  if (best.load() != kNone) {
    result.status = SearchStatus::Found;
    result.index = best.load();
    result.examined = result.index + 1;
    result.map = self_dual_map(enumerator.rotations(result.index));
    return result;
  }
  result.examined = limit;
  // The fixed rotation at vertex 0 loses no generality (relabel the second
  // part), so a complete negative search proves nonexistence.
  result.status = enumerator.exhaustive() && limit == enumerator.total() ? SearchStatus::Nonexistent : SearchStatus::BudgetExhausted;
  return result;
}

}  // namespace embedkit
