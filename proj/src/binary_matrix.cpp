#include "embedkit/binary_matrix.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <sstream>

#include "embedkit/errors.hpp"

namespace embedkit {

BitVector BitVector::from_string(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') v.set(i);
    else if (bits[i] != '0') throw ValidationError("bit string contains '" + std::string(1, bits[i]) + "'");
  }
  return v;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw ValidationError("bit vector length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::size_t BitVector::weight() const noexcept {
  std::size_t w = 0;
  for (auto word : words_) w += static_cast<std::size_t>(std::popcount(word));
  return w;
}

bool BitVector::none() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

bool BitVector::dot(const BitVector& other) const {
  if (other.size_ != size_) throw ValidationError("bit vector length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) acc ^= words_[i] & other.words_[i];
  return std::popcount(acc) & 1;
}

std::size_t BitVector::first_set() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return size_;
}

std::vector<std::size_t> BitVector::support() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    for (std::uint64_t w = words_[i]; w != 0; w &= w - 1)
      out.push_back(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
  }
  return out;
}

std::string BitVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

std::size_t BitVectorHash::operator()(const BitVector& v) const noexcept {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ v.size();
  for (auto w : v.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<std::size_t>(h);
}

BinaryMatrix::BinaryMatrix(std::size_t cols, std::vector<BitVector> rows) : cols_(cols), rows_(std::move(rows)) {
  for (const auto& r : rows_)
    if (r.size() != cols_) throw ValidationError("matrix row length differs from column count");
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  BinaryMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::string>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<BitVector> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(BitVector::from_string(r));
  return BinaryMatrix(cols, std::move(out));
}

BitVector BinaryMatrix::column(std::size_t c) const {
  BitVector v(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (rows_[r].get(c)) v.set(r);
  return v;
}

BinaryMatrix BinaryMatrix::transpose() const {
  BinaryMatrix t(cols_, rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c : rows_[r].support()) t.set(c, r);
  return t;
}

BitVector BinaryMatrix::multiply(const BitVector& v) const {
  if (v.size() != cols_) throw ValidationError("vector length does not match matrix columns");
  BitVector out(rows_.size());
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (rows_[r].dot(v)) out.set(r);
  return out;
}

BinaryMatrix BinaryMatrix::multiply_transpose(const BinaryMatrix& other) const {
  if (other.cols_ != cols_) throw ValidationError("column counts differ");
  BinaryMatrix out(rows_.size(), other.rows());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = 0; j < other.rows(); ++j)
      if (rows_[i].dot(other.row(j))) out.set(i, j);
  return out;
}

bool BinaryMatrix::is_zero() const noexcept {
  return std::all_of(rows_.begin(), rows_.end(), [](const BitVector& r) { return r.none(); });
}

namespace {

// Reduced row echelon form in place; returns pivot columns, one per nonzero row kept at the top.
std::vector<std::size_t> reduce(std::vector<BitVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t c = 0; c < cols && top < rows.size(); ++c) {
    std::size_t p = top;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[top], rows[p]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != top && rows[r].get(c)) rows[r] ^= rows[top];
    pivots.push_back(c);
    ++top;
  }
  rows.resize(top);
  return pivots;
}

}  // namespace

std::size_t gf2_rank(const BinaryMatrix& a) {
  std::vector<BitVector> rows = a.row_vectors();
  return reduce(rows, a.cols()).size();
}

std::vector<BitVector> kernel_basis(const BinaryMatrix& a) {
  std::vector<BitVector> rows = a.row_vectors();
  const auto pivots = reduce(rows, a.cols());
  std::vector<char> is_pivot(a.cols(), 0);
  for (auto p : pivots) is_pivot[p] = 1;

  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    BitVector v(a.cols());
    v.set(free);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      if (rows[i].get(free)) v.set(pivots[i]);
    basis.push_back(std::move(v));
  }
  return basis;
}

RowSpace::RowSpace(const BinaryMatrix& a) : cols_(a.cols()), basis_(a.row_vectors()) {
  pivots_ = reduce(basis_, cols_);
}

bool RowSpace::contains(const BitVector& v) const {
  if (v.size() != cols_) throw ValidationError("vector length does not match matrix columns");
  BitVector residue = v;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (residue.get(pivots_[i])) residue ^= basis_[i];
  return residue.none();
}

bool row_space_contains(const BinaryMatrix& a, const BitVector& v) {
  return RowSpace(a).contains(v);
}

namespace {

class PermutationMatcher {
 public:
  PermutationMatcher(const BinaryMatrix& a, const BinaryMatrix& b)
      : a_(a), b_(b), sig_a_(a.cols()), sig_b_(b.cols()), used_(b.rows(), 0) {}

  bool run() { return extend(0); }

 private:
  bool signatures_match() const {
    auto x = sig_a_;
    auto y = sig_b_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }

  // Assign row `depth` of a to an unused row of b with equal weight, keeping
  // the multisets of partial column signatures equal.
  bool extend(std::size_t depth) {
    if (depth == a_.rows()) return true;
    const std::size_t weight = a_.row(depth).weight();
    for (std::size_t c = 0; c < a_.cols(); ++c) sig_a_[c].push_back(a_.get(depth, c) ? '1' : '0');
    for (std::size_t j = 0; j < b_.rows(); ++j) {
      if (used_[j] || b_.row(j).weight() != weight) continue;
      for (std::size_t c = 0; c < b_.cols(); ++c) sig_b_[c].push_back(b_.get(j, c) ? '1' : '0');
      used_[j] = 1;
      if (signatures_match() && extend(depth + 1)) return true;
      used_[j] = 0;
      for (auto& s : sig_b_) s.pop_back();
    }
    for (auto& s : sig_a_) s.pop_back();
    return false;
  }

  const BinaryMatrix& a_;
  const BinaryMatrix& b_;
  std::vector<std::string> sig_a_;
  std::vector<std::string> sig_b_;
  std::vector<char> used_;
};

}  // namespace

bool equal_up_to_permutation(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  auto weights = [](const BinaryMatrix& m, bool by_row) {
    std::vector<std::size_t> w;
    const BinaryMatrix src = by_row ? m : m.transpose();
    for (const auto& r : src.row_vectors()) w.push_back(r.weight());
    std::sort(w.begin(), w.end());
    return w;
  };
  if (weights(a, true) != weights(b, true) || weights(a, false) != weights(b, false)) return false;
  return PermutationMatcher(a, b).run();
}

std::string format_matrix(const BinaryMatrix& m) {
  std::string out = "GF2 " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (const auto& r : m.row_vectors()) out += r.to_string() + "\n";
  return out;
}

BinaryMatrix parse_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(1, "empty input, expected 'GF2 <rows> <cols>'");
  std::istringstream header(line);
  std::string tag;
  long rows = -1;
  long cols = -1;
  std::string extra;
  if (!(header >> tag >> rows >> cols) || tag != "GF2" || rows < 0 || cols < 0 || (header >> extra))
    throw ParseError(1, "expected header 'GF2 <rows> <cols>'");

  std::vector<BitVector> out;
  out.reserve(static_cast<std::size_t>(rows));
  for (long r = 0; r < rows; ++r) {
    const std::size_t line_no = static_cast<std::size_t>(r) + 2;
    if (!std::getline(in, line)) throw ParseError(line_no, "missing matrix row");
    if (line.size() != static_cast<std::size_t>(cols))
      throw ParseError(line_no, "expected " + std::to_string(cols) + " columns, got " + std::to_string(line.size()));
    if (line.find_first_not_of("01") != std::string::npos) throw ParseError(line_no, "rows may contain only '0' and '1'");
    out.push_back(BitVector::from_string(line));
  }
  std::size_t line_no = static_cast<std::size_t>(rows) + 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty()) throw ParseError(line_no, "unexpected content after the last row");
  }
  return BinaryMatrix(static_cast<std::size_t>(cols), std::move(out));
}

BinaryMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in);
}

BinaryMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path);
  return parse_matrix(in);
}

void write_matrix_file(const BinaryMatrix& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << format_matrix(m);
}

}  // namespace embedkit
