#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace embedkit {

// Fixed-length vector over GF(2), packed 64 bits per word. Bits past size()
// are always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  // From a string of '0'/'1'. Throws ValidationError on other characters.
  static BitVector from_string(std::string_view bits);

  std::size_t size() const noexcept { return size_; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) words_[i >> 6] |= mask; else words_[i >> 6] &= ~mask;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  std::size_t weight() const noexcept;
  bool none() const noexcept;
  // Parity of the bitwise AND with other.
  bool dot(const BitVector& other) const;

  // Index of the lowest set bit, or size() if none.
  std::size_t first_set() const noexcept;
  std::vector<std::size_t> support() const;

  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  bool operator==(const BitVector&) const = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitVectorHash {
  std::size_t operator()(const BitVector& v) const noexcept;
};

// Dense rows x cols matrix over GF(2), row-major.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}
  // Rows must all have length cols; an empty row list gives a 0 x cols matrix.
  BinaryMatrix(std::size_t cols, std::vector<BitVector> rows);

  static BinaryMatrix identity(std::size_t n);
  // One string of '0'/'1' per row; all strings must have equal length.
  static BinaryMatrix from_rows(const std::vector<std::string>& rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  bool get(std::size_t r, std::size_t c) const { return rows_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool value = true) { rows_[r].set(c, value); }
  void flip(std::size_t r, std::size_t c) { rows_[r].flip(c); }

  const BitVector& row(std::size_t r) const { return rows_.at(r); }
  const std::vector<BitVector>& row_vectors() const noexcept { return rows_; }
  BitVector column(std::size_t c) const;

  BinaryMatrix transpose() const;
  // this * v^T, a vector of length rows().
  BitVector multiply(const BitVector& v) const;
  // this * other^T, shape rows() x other.rows(). Column counts must agree.
  BinaryMatrix multiply_transpose(const BinaryMatrix& other) const;

  bool is_zero() const noexcept;
  bool operator==(const BinaryMatrix&) const = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

// Rank over GF(2) by Gaussian elimination on a copy.
std::size_t gf2_rank(const BinaryMatrix& a);

// Basis of {v : a * v^T = 0}; size is cols - rank.
std::vector<BitVector> kernel_basis(const BinaryMatrix& a);

// Whether v is a GF(2) combination of rows of a. Throws ValidationError on length mismatch.
bool row_space_contains(const BinaryMatrix& a, const BitVector& v);

// Reduced echelon basis of a row space, for repeated membership queries.
class RowSpace {
 public:
  explicit RowSpace(const BinaryMatrix& a);

  std::size_t dimension() const noexcept { return basis_.size(); }
  bool contains(const BitVector& v) const;

 private:
  std::size_t cols_;
  std::vector<BitVector> basis_;
  std::vector<std::size_t> pivots_;
};

// Whether b can be obtained from a by permuting rows and columns.
bool equal_up_to_permutation(const BinaryMatrix& a, const BinaryMatrix& b);

// Text format: "GF2 <rows> <cols>" then one line of '0'/'1' per row.
std::string format_matrix(const BinaryMatrix& m);
BinaryMatrix parse_matrix(std::istream& in);
BinaryMatrix parse_matrix(std::string_view text);
BinaryMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const BinaryMatrix& m, const std::string& path);

}  // namespace embedkit
