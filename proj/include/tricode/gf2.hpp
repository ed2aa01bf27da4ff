#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace tricode {

// Exact counter type for weight enumerators. 2^rank overflows uint64_t as
// soon as rank > 64, and the MacWilliams route routinely produces such ranks.
using BigCount = boost::multiprecision::cpp_int;

constexpr std::size_t kDefaultEnumerationLimit = 24;

/// Bit vector over GF(2), packed 64 bits per word.
class BinaryVector {
 public:
  BinaryVector() = default;
  explicit BinaryVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

  static BinaryVector from_string(std::string_view bits);

  std::size_t size() const { return len_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    std::uint64_t m = std::uint64_t(1) << (i & 63);
    if (v) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  void xor_with(const BinaryVector& o);
  BinaryVector operator^(const BinaryVector& o) const;
  /// Componentwise AND (used by the Toffoli coset condition).
  BinaryVector and_with(const BinaryVector& o) const;
  /// GF(2) inner product.
  bool dot(const BinaryVector& o) const;
  std::size_t weight() const;
  bool is_zero() const;

  bool operator==(const BinaryVector& o) const { return len_ == o.len_ && words_ == o.words_; }
  bool operator!=(const BinaryVector& o) const { return !(*this == o); }
  /// Word-lexicographic order; used only for deterministic sorting in reports.
  bool operator<(const BinaryVector& o) const;

  std::string to_string() const;

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
  friend class BinaryMatrix;
};

/// Row-major bit matrix over GF(2). rows >= 0, cols >= 1.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(std::size_t rows, std::size_t cols);

  static BinaryMatrix identity(std::size_t n);
  static BinaryMatrix from_rows(const std::vector<BinaryVector>& rows);
  static BinaryMatrix from_strings(const std::vector<std::string>& rows);
  /// Parses the matrix text format: one row per line, '0'/'1' digits with
  /// optional single spaces, '#' starts a comment, blank lines ignored.
  static BinaryMatrix parse(std::string_view text);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return row_[r].get(c); }
  void set(std::size_t r, std::size_t c, bool v) { row_[r].set(c, v); }

  const BinaryVector& row(std::size_t r) const { return row_[r]; }
  BinaryVector& row(std::size_t r) { return row_[r]; }
  void append_row(const BinaryVector& v);
  void swap_rows(std::size_t a, std::size_t b) { std::swap(row_[a], row_[b]); }
  /// row[dst] ^= row[src]
  void xor_row_into(std::size_t src, std::size_t dst) { row_[dst].xor_with(row_[src]); }

  /// Stacks other's rows below this matrix's rows (col counts must match).
  BinaryMatrix vstack(const BinaryMatrix& other) const;

  bool operator==(const BinaryMatrix& o) const { return cols_ == o.cols_ && row_ == o.row_; }

  std::string to_text() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BinaryVector> row_;
};

struct RrefResult {
  BinaryMatrix reduced;             // zero rows dropped
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;  // ascending
};

/// Reduced row echelon form; pivots are chosen lowest-column-first so the
/// result is the canonical basis of the row space.
RrefResult rref(const BinaryMatrix& m);
std::size_t gf2_rank(const BinaryMatrix& m);

/// Canonical (RREF) basis of {v : m v^T = 0}. Result has cols(m) columns
/// and cols - rank rows.
BinaryMatrix nullspace(const BinaryMatrix& m);

/// Precomputed RREF basis for repeated membership tests / reductions.
class ReducedBasis {
 public:
  explicit ReducedBasis(const BinaryMatrix& m);
  std::size_t rank() const { return rr_.rank; }
  std::size_t cols() const { return rr_.reduced.cols(); }
  const BinaryMatrix& basis() const { return rr_.reduced; }
  const std::vector<std::size_t>& pivots() const { return rr_.pivot_cols; }
  bool contains(const BinaryVector& v) const;
  /// Canonical coset representative: v reduced by the basis.
  BinaryVector reduce(BinaryVector v) const;

 private:
  RrefResult rr_;
};

bool rowspace_contains(const BinaryMatrix& m, const BinaryVector& v);
/// Every row of a lies in rowspace(b).
bool is_subspace(const BinaryMatrix& a, const BinaryMatrix& b);
bool same_rowspace(const BinaryMatrix& a, const BinaryMatrix& b);

/// Visits all 2^rank distinct row-space vectors exactly once (Gray-code
/// order over the RREF basis, starting at zero). Throws if rank > limit.
void for_each_in_rowspace(const BinaryMatrix& m,
                          const std::function<void(const BinaryVector&)>& fn,
                          std::size_t limit = kDefaultEnumerationLimit);
std::vector<BinaryVector> enumerate_rowspace(const BinaryMatrix& m,
                                             std::size_t limit = kDefaultEnumerationLimit);

/// Basis of rowspace(c1_gen) / rowspace(c2perp_gen): rows of c1_gen that are
/// independent modulo the subspace, in input order. Requires the subspace
/// relation to hold only in the sense that representatives are taken from
/// c1_gen's row space; rows already inside the subspace contribute nothing.
BinaryMatrix quotient_basis(const BinaryMatrix& c1_gen, const BinaryMatrix& c2perp_gen);

/// Weight enumerator of rowspace(m): entry[w] = #vectors of weight w,
/// sum = 2^rank. Uses direct enumeration when rank <= limit, otherwise the
/// exact MacWilliams transform of the dual when the dual's rank fits.
std::vector<BigCount> weight_enumerator(const BinaryMatrix& m,
                                        std::size_t limit = kDefaultEnumerationLimit);

/// gram(a,b)[i][j] = a.row(i) . b.row(j)  (GF(2) inner products).
BinaryMatrix gram_matrix(const BinaryMatrix& a, const BinaryMatrix& b);

}  // namespace tricode
