#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gecs/bitvec.hpp"

namespace gecs {

struct SingularMatrixError : std::domain_error {
  SingularMatrixError() : std::domain_error("matrix is singular") {}
};

/// Dense matrix over GF(2), stored as bit-packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;

  BitMatrix(std::size_t rows, std::size_t cols)
      : cols_(cols), rows_(rows, BitVec(cols)) {}

  static BitMatrix identity(std::size_t n) {
    BitMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
  }

  static BitMatrix from_rows(std::vector<BitVec> rows) {
    if (rows.empty())
      throw std::invalid_argument("BitMatrix::from_rows: no rows");
    BitMatrix m;
    m.cols_ = rows.front().length();
    for (const auto& r : rows)
      if (r.length() != m.cols_)
        throw std::invalid_argument("BitMatrix::from_rows: ragged rows");
    m.rows_ = std::move(rows);
    return m;
  }

  static BitMatrix from_strings(const std::vector<std::string>& lines) {
    std::vector<BitVec> rows;
    rows.reserve(lines.size());
    for (const auto& s : lines) rows.push_back(BitVec::from_string(s));
    return from_rows(std::move(rows));
  }

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_; }

  const BitVec& row(std::size_t i) const { return rows_.at(i); }
  BitVec& row(std::size_t i) { return rows_.at(i); }
  const std::vector<BitVec>& rows() const { return rows_; }

  bool get(std::size_t i, std::size_t j) const { return rows_.at(i).get(j); }
  void set(std::size_t i, std::size_t j, bool v) { rows_.at(i).set(j, v); }

  BitVec column(std::size_t j) const {
    BitVec c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) c.set(i, rows_[i].get(j));
    return c;
  }

  /// Matrix made of the columns selected by `idx`, in the given order.
  BitMatrix columns(const std::vector<std::size_t>& idx) const {
    BitMatrix m(rows_.size(), idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (idx[j] >= cols_)
        throw std::out_of_range("BitMatrix::columns: index out of range");
      for (std::size_t i = 0; i < rows_.size(); ++i)
        m.set(i, j, rows_[i].get(idx[j]));
    }
    return m;
  }

  BitMatrix transpose() const {
    BitMatrix t(cols_, rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (std::size_t j : rows_[i].support()) t.set(j, i, true);
    return t;
  }

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

/// Row-space dimension over GF(2). Row reduction with pivots taken at the
/// lowest available column index.
inline std::size_t rank(BitMatrix m) {
  const std::size_t nr = m.row_count(), nc = m.col_count();
  std::size_t rk = 0;
  for (std::size_t col = 0; col < nc && rk < nr; ++col) {
    std::size_t pivot = rk;
    while (pivot < nr && !m.get(pivot, col)) ++pivot;
    if (pivot == nr) continue;
    std::swap(m.row(rk), m.row(pivot));
    for (std::size_t i = 0; i < nr; ++i)
      if (i != rk && m.get(i, col)) m.row(i) ^= m.row(rk);
    ++rk;
  }
  return rk;
}

inline std::size_t rank(const std::vector<BitVec>& rows) {
  if (rows.empty()) return 0;
  return rank(BitMatrix::from_rows(rows));
}

/// Row vector times matrix: XOR of the rows of `m` selected by supp(a).
inline BitVec operator*(const BitVec& a, const BitMatrix& m) {
  if (a.length() != m.row_count())
    throw std::invalid_argument("vec*mat: dimension mismatch");
  BitVec out(m.col_count());
  for (std::size_t i : a.support()) out ^= m.row(i);
  return out;
}

inline BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
  if (a.col_count() != b.row_count())
    throw std::invalid_argument("mat*mat: dimension mismatch");
  std::vector<BitVec> rows;
  rows.reserve(a.row_count());
  for (std::size_t i = 0; i < a.row_count(); ++i) rows.push_back(a.row(i) * b);
  return BitMatrix::from_rows(std::move(rows));
}

/// Inverse of a square matrix. Throws SingularMatrixError when rank < n.
inline BitMatrix invert(const BitMatrix& m) {
  const std::size_t n = m.row_count();
  if (n == 0 || n != m.col_count())
    throw std::invalid_argument("invert: matrix must be square and nonempty");
  BitMatrix a = m;
  BitMatrix inv = BitMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !a.get(pivot, col)) ++pivot;
    if (pivot == n) throw SingularMatrixError();
    std::swap(a.row(col), a.row(pivot));
    std::swap(inv.row(col), inv.row(pivot));
    for (std::size_t i = 0; i < n; ++i) {
      if (i != col && a.get(i, col)) {
        a.row(i) ^= a.row(col);
        inv.row(i) ^= inv.row(col);
      }
    }
  }
  return inv;
}

/// Basis of the right null space {x : M x^T = 0}, one vector per row.
/// Deterministic: free columns in ascending order, each yielding one basis
/// vector.
inline std::vector<BitVec> null_space(const BitMatrix& m) {
  const std::size_t nr = m.row_count(), nc = m.col_count();
  BitMatrix a = m;
  std::vector<std::size_t> pivot_col;
  std::size_t rk = 0;
  for (std::size_t col = 0; col < nc && rk < nr; ++col) {
    std::size_t pivot = rk;
    while (pivot < nr && !a.get(pivot, col)) ++pivot;
    if (pivot == nr) continue;
    std::swap(a.row(rk), a.row(pivot));
    for (std::size_t i = 0; i < nr; ++i)
      if (i != rk && a.get(i, col)) a.row(i) ^= a.row(rk);
    pivot_col.push_back(col);
    ++rk;
  }
  std::vector<bool> is_pivot(nc, false);
  for (std::size_t c : pivot_col) is_pivot[c] = true;
  std::vector<BitVec> basis;
  for (std::size_t free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    BitVec x(nc);
    x.set(free, true);
    for (std::size_t k = 0; k < pivot_col.size(); ++k)
      if (a.get(k, free)) x.set(pivot_col[k], true);
    basis.push_back(std::move(x));
  }
  return basis;
}

/// Uniformly seeded invertible r x r matrix; deterministic per seed.
inline BitMatrix random_invertible(std::size_t r, std::uint64_t seed) {
  if (r == 0) throw std::invalid_argument("random_invertible: r must be >= 1");
  if (r > 64) throw std::invalid_argument("random_invertible: r beyond desk scale");
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = r == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << r) - 1);
  for (;;) {
    std::vector<BitVec> rows;
    rows.reserve(r);
    for (std::size_t i = 0; i < r; ++i)
      rows.push_back(BitVec::from_uint(rng() & mask, r));
    BitMatrix m = BitMatrix::from_rows(std::move(rows));
    if (rank(m) == r) return m;
  }
}

}  // namespace gecs
