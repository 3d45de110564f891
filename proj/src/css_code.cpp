#include "embedkit/css_code.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "embedkit/errors.hpp"

namespace embedkit {

BinaryMatrix vertex_edge_matrix(const SurfaceMap& m) {
  BinaryMatrix h(m.vertex_count(), m.edge_count());
  for (std::size_t e = 0; e < m.edge_count(); ++e) {
    const auto [u, v] = m.edges()[e];
    h.flip(static_cast<std::size_t>(u), e);
    h.flip(static_cast<std::size_t>(v), e);
  }
  return h;
}

BinaryMatrix face_edge_matrix(const SurfaceMap& m) {
  BinaryMatrix h(m.face_count(), m.edge_count());
  for (std::size_t d = 0; d < m.darts().size(); ++d) h.flip(m.face_of(d), m.dart(d).edge);
  return h;
}

CssCode make_css(BinaryMatrix h_x, BinaryMatrix h_z) {
  if (h_x.cols() != h_z.cols())
    throw ValidationError("H_X has " + std::to_string(h_x.cols()) + " columns but H_Z has " + std::to_string(h_z.cols()));
  const BinaryMatrix product = h_x.multiply_transpose(h_z);
  for (std::size_t i = 0; i < product.rows(); ++i) {
    const std::size_t j = product.row(i).first_set();
    if (j < product.cols())
      throw InternalError("H_X * H_Z^T != 0: X-check " + std::to_string(i) + " and Z-check " + std::to_string(j) +
                          " overlap in an odd number of positions");
  }
  CssCode code;
  code.n = h_x.cols();
  const std::size_t rank_x = gf2_rank(h_x);
  const std::size_t rank_z = gf2_rank(h_z);
  if (rank_x + rank_z > code.n) throw InternalError("rank(H_X) + rank(H_Z) exceeds n");
  code.k = code.n - rank_x - rank_z;
  code.h_x = std::move(h_x);
  code.h_z = std::move(h_z);
  return code;
}

CssCode build_css(const SurfaceMap& m) {
  CssCode code = make_css(vertex_edge_matrix(m), face_edge_matrix(m));
  const auto expected = 2 * static_cast<std::size_t>(genus_of(m));
  if (code.k != expected)
    throw InternalError("k = " + std::to_string(code.k) + " but 2g = " + std::to_string(expected));
  return code;
}

namespace {

// Minimum-weight vectors in ker(check) outside rowspace(boundary).
class LogicalSearch {
 public:
  LogicalSearch(const BinaryMatrix& check, const BinaryMatrix& boundary) : boundary_(boundary), n_(check.cols()) {
    columns_.reserve(n_);
    for (std::size_t c = 0; c < n_; ++c) {
      columns_.push_back(check.column(c));
      by_value_[columns_.back()].push_back(c);
    }
  }

  // Lexicographically smallest support of weight w, if any.
  std::optional<std::vector<std::size_t>> find(std::size_t w, unsigned threads) const {
    if (w == 0 || w > n_) return std::nullopt;
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(n_)));

    std::mutex mu;
    std::optional<std::vector<std::size_t>> best;
    std::atomic<std::size_t> best_first{n_};

    auto worker = [&](unsigned id) {
      std::vector<std::size_t> support;
      support.reserve(w);
      for (std::size_t first = id; first < n_; first += threads) {
        if (first >= best_first.load()) return;
        support.assign(1, first);
        if (extend(support, columns_[first], w)) {
          std::lock_guard lock(mu);
          if (!best || support < *best) best = support;
          std::size_t cur = best_first.load();
          while (first < cur && !best_first.compare_exchange_weak(cur, first)) {
          }
          return;
        }
      }
    };

    if (threads == 1) {
      worker(0);
    } else {
      std::vector<std::jthread> pool;
      for (unsigned id = 0; id < threads; ++id) pool.emplace_back(worker, id);
    }
    return best;
  }

 private:
  bool is_logical(const std::vector<std::size_t>& support) const {
    BitVector v(n_);
    for (auto c : support) v.set(c);
    return !boundary_.contains(v);
  }

  // Extend `support` (strictly increasing) to weight w with zero total syndrome.
  bool extend(std::vector<std::size_t>& support, const BitVector& syndrome, std::size_t w) const {
    if (support.size() == w) return syndrome.none() && is_logical(support);
    if (support.size() + 1 == w) {
      auto it = by_value_.find(syndrome);
      if (it == by_value_.end()) return false;
      for (std::size_t c : it->second) {
        if (c <= support.back()) continue;
        support.push_back(c);
        if (is_logical(support)) return true;
        support.pop_back();
      }
      return false;
    }
    for (std::size_t c = support.back() + 1; c + (w - support.size()) <= n_; ++c) {
      support.push_back(c);
      if (extend(support, syndrome ^ columns_[c], w)) return true;
      support.pop_back();
    }
    return false;
  }

  RowSpace boundary_;
  std::size_t n_;
  std::vector<BitVector> columns_;
  std::unordered_map<BitVector, std::vector<std::size_t>, BitVectorHash> by_value_;
};

}  // namespace

DistanceResult min_distance(const CssCode& code, const DistanceOptions& options) {
  if (options.cap < 1) throw ValidationError("distance cap must be at least 1");
  if (code.k == 0) throw ValidationError("no logical operators (k = 0)");

  const LogicalSearch z_type(code.h_x, code.h_z);
  const LogicalSearch x_type(code.h_z, code.h_x);
  DistanceResult result;
  result.cap = options.cap;
  for (std::size_t w = 1; w <= std::min(options.cap, code.n); ++w) {
    for (const auto& [search, type] : {std::pair{&z_type, 'Z'}, std::pair{&x_type, 'X'}}) {
      if (auto support = search->find(w, options.threads)) {
        result.distance = w;
        result.witness = BitVector(code.n);
        for (auto c : *support) result.witness.set(c);
        result.witness_type = type;
        return result;
      }
    }
  }
  return result;
}

CssCode with_distance(CssCode code, const DistanceOptions& options) {
  const DistanceResult r = min_distance(code, options);
  code.d = r.distance;
  code.d_search_cap = r.cap;
  return code;
}

std::string format_params_line(const CssCode& code) {
  return "CSS n=" + std::to_string(code.n) + " k=" + std::to_string(code.k) +
         " d=" + (code.d ? std::to_string(*code.d) : std::string("?")) + " cap=" + std::to_string(code.d_search_cap);
}

}  // namespace embedkit
