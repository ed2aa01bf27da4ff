#include "tricode/gf2.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace tricode {

BinaryVector BinaryVector::from_string(std::string_view bits) {
  BinaryVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') v.set(i, true);
    else if (bits[i] != '0') throw std::invalid_argument("bit string may contain only '0'/'1'");
  }
  return v;
}

void BinaryVector::xor_with(const BinaryVector& o) {
  if (len_ != o.len_) throw std::invalid_argument("xor_with: length mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= o.words_[w];
}

BinaryVector BinaryVector::operator^(const BinaryVector& o) const {
  BinaryVector r = *this;
  r.xor_with(o);
  return r;
}

BinaryVector BinaryVector::and_with(const BinaryVector& o) const {
  if (len_ != o.len_) throw std::invalid_argument("and_with: length mismatch");
  BinaryVector r = *this;
  for (std::size_t w = 0; w < words_.size(); ++w) r.words_[w] &= o.words_[w];
  return r;
}

bool BinaryVector::dot(const BinaryVector& o) const {
  if (len_ != o.len_) throw std::invalid_argument("dot: length mismatch");
  std::uint64_t acc = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) acc ^= words_[w] & o.words_[w];
  return std::popcount(acc) & 1;
}

std::size_t BinaryVector::weight() const {
  std::size_t w = 0;
  for (std::uint64_t x : words_) w += std::popcount(x);
  return w;
}

bool BinaryVector::is_zero() const {
  for (std::uint64_t x : words_) if (x) return false;
  return true;
}

bool BinaryVector::operator<(const BinaryVector& o) const {
  if (len_ != o.len_) return len_ < o.len_;
  return words_ < o.words_;
}

std::string BinaryVector::to_string() const {
  std::string s(len_, '0');
  for (std::size_t i = 0; i < len_; ++i) if (get(i)) s[i] = '1';
  return s;
}

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  if (cols == 0) throw std::invalid_argument("BinaryMatrix: cols must be >= 1");
  row_.assign(rows, BinaryVector(cols));
}

BinaryMatrix BinaryMatrix::identity(std::size_t n) {
  BinaryMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<BinaryVector>& rows) {
  if (rows.empty()) throw std::invalid_argument("from_rows: need at least one row");
  BinaryMatrix m(0, rows[0].size());
  for (const auto& r : rows) m.append_row(r);
  return m;
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string>& rows) {
  std::vector<BinaryVector> v;
  v.reserve(rows.size());
  for (const auto& s : rows) v.push_back(BinaryVector::from_string(s));
  return from_rows(v);
}

BinaryMatrix BinaryMatrix::parse(std::string_view text) {
  std::vector<std::string> rows;
  std::string line;
  std::istringstream in{std::string(text)};
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string bits;
    for (char c : line) {
      if (c == '0' || c == '1') bits.push_back(c);
      else if (c == ' ' || c == '\t' || c == '\r') continue;
      else throw std::invalid_argument(std::string("matrix text: unexpected character '") + c + "'");
    }
    if (bits.empty()) continue;
    if (!rows.empty() && bits.size() != rows[0].size())
      throw std::invalid_argument("matrix text: rows have unequal lengths");
    rows.push_back(bits);
  }
  if (rows.empty()) throw std::invalid_argument("matrix text: no rows");
  return from_strings(rows);
}

void BinaryMatrix::append_row(const BinaryVector& v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.size();
  if (v.size() != cols_) throw std::invalid_argument("append_row: column count mismatch");
  if (cols_ == 0) throw std::invalid_argument("append_row: cols must be >= 1");
  row_.push_back(v);
  ++rows_;
}

BinaryMatrix BinaryMatrix::vstack(const BinaryMatrix& other) const {
  if (other.rows() == 0) return *this;
  if (rows_ == 0) return other;
  if (cols_ != other.cols()) throw std::invalid_argument("vstack: column count mismatch");
  BinaryMatrix m = *this;
  for (std::size_t r = 0; r < other.rows(); ++r) m.append_row(other.row(r));
  return m;
}

std::string BinaryMatrix::to_text() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    out += row_[r].to_string();
    out += '\n';
  }
  return out;
}

RrefResult rref(const BinaryMatrix& m) {
  RrefResult res;
  BinaryMatrix work = m;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < work.cols() && pivot_row < work.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < work.rows() && !work.get(sel, col)) ++sel;
    if (sel == work.rows()) continue;
    work.swap_rows(pivot_row, sel);
    for (std::size_t r = 0; r < work.rows(); ++r)
      if (r != pivot_row && work.get(r, col)) work.xor_row_into(pivot_row, r);
    res.pivot_cols.push_back(col);
    ++pivot_row;
  }
  res.rank = pivot_row;
  res.reduced = BinaryMatrix(0, m.cols());
  for (std::size_t r = 0; r < res.rank; ++r) res.reduced.append_row(work.row(r));
  return res;
}

std::size_t gf2_rank(const BinaryMatrix& m) { return rref(m).rank; }

BinaryMatrix nullspace(const BinaryMatrix& m) {
  RrefResult rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivot_cols) is_pivot[c] = true;

  BinaryMatrix basis(0, m.cols());
  for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    BinaryVector v(m.cols());
    v.set(free_col, true);
    // pivot variables solved from the reduced rows
    for (std::size_t r = 0; r < rr.rank; ++r)
      if (rr.reduced.get(r, free_col)) v.set(rr.pivot_cols[r], true);
    basis.append_row(v);
  }
  // free columns ascend, so this basis is already canonical up to row order;
  // run rref to present the canonical form.
  return rref(basis).reduced;
}

ReducedBasis::ReducedBasis(const BinaryMatrix& m) : rr_(rref(m)) {}

BinaryVector ReducedBasis::reduce(BinaryVector v) const {
  if (v.size() != rr_.reduced.cols()) throw std::invalid_argument("reduce: length mismatch");
  for (std::size_t r = 0; r < rr_.rank; ++r)
    if (v.get(rr_.pivot_cols[r])) v.xor_with(rr_.reduced.row(r));
  return v;
}

bool ReducedBasis::contains(const BinaryVector& v) const { return reduce(v).is_zero(); }

bool rowspace_contains(const BinaryMatrix& m, const BinaryVector& v) {
  return ReducedBasis(m).contains(v);
}

bool is_subspace(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.rows() == 0) return true;
  if (a.cols() != b.cols()) throw std::invalid_argument("is_subspace: column count mismatch");
  ReducedBasis rb(b);
  for (std::size_t r = 0; r < a.rows(); ++r)
    if (!rb.contains(a.row(r))) return false;
  return true;
}

bool same_rowspace(const BinaryMatrix& a, const BinaryMatrix& b) {
  return rref(a).reduced == rref(b).reduced;
}

void for_each_in_rowspace(const BinaryMatrix& m,
                          const std::function<void(const BinaryVector&)>& fn,
                          std::size_t limit) {
  RrefResult rr = rref(m);
  if (rr.rank > limit)
    throw std::invalid_argument("enumerate_rowspace: rank " + std::to_string(rr.rank) +
                                " exceeds limit " + std::to_string(limit));
  BinaryVector cur(m.cols());
  fn(cur);
  const std::uint64_t total = std::uint64_t(1) << rr.rank;
  for (std::uint64_t i = 1; i < total; ++i) {
    cur.xor_with(rr.reduced.row(std::countr_zero(i)));  // Gray-code step
    fn(cur);
  }
}

std::vector<BinaryVector> enumerate_rowspace(const BinaryMatrix& m, std::size_t limit) {
  std::vector<BinaryVector> out;
  for_each_in_rowspace(m, [&](const BinaryVector& v) { out.push_back(v); }, limit);
  return out;
}

BinaryMatrix quotient_basis(const BinaryMatrix& c1_gen, const BinaryMatrix& c2perp_gen) {
  if (c1_gen.cols() != c2perp_gen.cols())
    throw std::invalid_argument("quotient_basis: column count mismatch");
  // Sweep c1 rows in order, keeping those independent modulo the subspace.
  BinaryMatrix acc = rref(c2perp_gen).reduced;
  std::size_t base_rank = acc.rows();
  BinaryMatrix out(0, c1_gen.cols());
  for (std::size_t r = 0; r < c1_gen.rows(); ++r) {
    BinaryMatrix trial = acc;
    trial.append_row(c1_gen.row(r));
    RrefResult rr = rref(trial);
    if (rr.rank > base_rank) {
      out.append_row(c1_gen.row(r));
      acc = rr.reduced;
      base_rank = rr.rank;
    }
  }
  return out;
}

namespace {

std::vector<std::vector<BigCount>> binomial_table(std::size_t n) {
  std::vector<std::vector<BigCount>> c(n + 1, std::vector<BigCount>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) {
    c[i][0] = 1;
    for (std::size_t j = 1; j <= i; ++j)
      c[i][j] = c[i - 1][j - 1] + (j <= i - 1 ? c[i - 1][j] : BigCount(0));
  }
  return c;
}

std::vector<BigCount> direct_weight_counts(const BinaryMatrix& m, std::size_t limit) {
  std::vector<BigCount> counts(m.cols() + 1, 0);
  for_each_in_rowspace(m, [&](const BinaryVector& v) { counts[v.weight()] += 1; }, limit);
  return counts;
}

}  // namespace

std::vector<BigCount> weight_enumerator(const BinaryMatrix& m, std::size_t limit) {
  const std::size_t n = m.cols();
  RrefResult rr = rref(m);
  if (rr.rank <= limit) return direct_weight_counts(rr.reduced, limit);

  BinaryMatrix dual = nullspace(m);
  const std::size_t dual_rank = dual.rows();
  if (dual_rank > limit)
    throw std::invalid_argument(
        "weight_enumerator: rank " + std::to_string(rr.rank) + " and dual rank " +
        std::to_string(dual_rank) + " both exceed limit " + std::to_string(limit));

  // MacWilliams: A_j(C) = |C^perp|^-1 * sum_w B_w * K_j(w),
  // K_j(w) = sum_i (-1)^i C(w,i) C(n-w, j-i).
  std::vector<BigCount> b = direct_weight_counts(dual, limit);
  auto binom = binomial_table(n);
  BigCount dual_size = BigCount(1) << dual_rank;
  std::vector<BigCount> a(n + 1, 0);
  for (std::size_t j = 0; j <= n; ++j) {
    BigCount sum = 0;
    for (std::size_t w = 0; w <= n; ++w) {
      if (b[w] == 0) continue;
      BigCount k = 0;
      for (std::size_t i = 0; i <= j && i <= w; ++i) {
        if (j - i > n - w) continue;
        BigCount term = binom[w][i] * binom[n - w][j - i];
        if (i & 1) k -= term; else k += term;
      }
      sum += b[w] * k;
    }
    BigCount q = sum / dual_size;
    if (q * dual_size != sum)
      throw std::logic_error("weight_enumerator: MacWilliams transform not integral");
    a[j] = q;
  }
  return a;
}

BinaryMatrix gram_matrix(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("gram_matrix: column count mismatch");
  if (a.rows() == 0 || b.rows() == 0) throw std::invalid_argument("gram_matrix: empty operand");
  BinaryMatrix g(a.rows(), b.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.rows(); ++j)
      g.set(i, j, a.row(i).dot(b.row(j)));
  return g;
}

}  // namespace tricode
