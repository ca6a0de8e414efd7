#pragma once

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gecs/bitmatrix.hpp"
#include "gecs/bitvec.hpp"
#include "gecs/combinatorics.hpp"
#include "gecs/generic_set.hpp"

namespace gecs {

/// The explicit generic (r,m)-erasure correcting set
///   { a in F_2^r : a_0 = 1 and wt(a) <= m },
/// of size sum_{i<m} C(r-1, i).
inline GenericSet low_weight_set(unsigned r, unsigned m) {
  if (m < 2 || m > r)
    throw std::invalid_argument("low_weight_set: need 2 <= m <= r");
  if (r > 32) throw std::invalid_argument("low_weight_set: r beyond desk scale");
  std::vector<std::uint32_t> encodings;
  for (std::uint32_t tail = 0; tail < (std::uint32_t{1} << (r - 1)); ++tail) {
    if (std::popcount(tail) <= static_cast<int>(m) - 1)
      encodings.push_back(1 | (tail << 1));
  }
  return GenericSet::from_encodings(r, encodings);
}

inline std::uint64_t low_weight_set_size(unsigned r, unsigned m) {
  if (m < 2 || m > r)
    throw std::invalid_argument("low_weight_set_size: need 2 <= m <= r");
  std::uint64_t total = 0;
  for (unsigned i = 0; i < m; ++i) total += binomial(r - 1, i);
  return total;
}

/// The Weber--Abdel-Ghaffar generic (r,3)-erasure correcting set: all unit
/// vectors plus e_0 + e_i + e_j for 1 <= i < j < r.
inline GenericSet weber_set(unsigned r) {
  if (r < 3) throw std::invalid_argument("weber_set: need r >= 3");
  if (r > 32) throw std::invalid_argument("weber_set: r beyond desk scale");
  std::vector<std::uint32_t> encodings;
  for (unsigned i = 0; i < r; ++i) encodings.push_back(std::uint32_t{1} << i);
  for (unsigned i = 1; i < r; ++i)
    for (unsigned j = i + 1; j < r; ++j)
      encodings.push_back(1u | (std::uint32_t{1} << i) | (std::uint32_t{1} << j));
  return GenericSet::from_encodings(r, encodings);
}

/// Invertible r x r matrix with the all-one vector as leftmost column and
/// unit columns elsewhere; right-multiplication carries low_weight_set(r, 3)
/// onto weber_set(r).
inline BitMatrix weber_transform(unsigned r) {
  if (r < 2) throw std::invalid_argument("weber_transform: need r >= 2");
  BitMatrix s(r, r);
  for (unsigned i = 0; i < r; ++i) {
    s.set(i, 0, true);
    if (i > 0) s.set(i, i, true);
  }
  return s;
}

/// Element-wise right-multiplication { aT : a in A }. T must be invertible.
inline GenericSet apply_transform(const GenericSet& set, const BitMatrix& t) {
  if (t.row_count() != set.dimension() || t.col_count() != set.dimension())
    throw std::invalid_argument("apply_transform: transform shape mismatch");
  invert(t);  // throws SingularMatrixError when not invertible
  std::vector<BitVec> image;
  image.reserve(set.size());
  for (const auto& a : set.members()) image.push_back(a * t);
  return GenericSet(set.dimension(), std::move(image));
}

/// For a rank-m matrix M (r x m, 2 <= m <= r), returns a vector `a` with
/// a_0 = 1, wt(a) <= m and wt(aM) = 1, i.e. a member of low_weight_set(r, m)
/// that covers M.
///
/// Deterministic witness choice: the row basis is the greedy scan from row 0
/// upward; when row 0 is nonzero the combination coefficients are scanned in
/// integer order with the row-0 coefficient fixed to 1; when row 0 is zero
/// the smallest unit-vector index whose basis representation has weight
/// <= m-1 is used and the leading 1 is prepended.
inline BitVec find_covering_vector(const BitMatrix& m) {
  const std::size_t r = m.row_count();
  const unsigned cols = static_cast<unsigned>(m.col_count());
  if (cols < 2 || cols > r)
    throw std::invalid_argument("find_covering_vector: need 2 <= m <= r");
  if (cols > 63)
    throw std::invalid_argument("find_covering_vector: m beyond desk scale");

  // Greedy row basis; rows as m-bit encodings.
  std::vector<std::uint64_t> basis_rows;
  std::vector<std::size_t> basis_index;
  std::uint64_t reduced[64] = {};
  for (std::size_t i = 0; i < r && basis_rows.size() < cols; ++i) {
    std::uint64_t v = m.row(i).to_uint();
    const std::uint64_t original = v;
    while (v) {
      const unsigned h = 63 - std::countl_zero(v);
      if (!reduced[h]) {
        reduced[h] = v;
        basis_rows.push_back(original);
        basis_index.push_back(i);
        break;
      }
      v ^= reduced[h];
    }
  }
  if (basis_rows.size() != cols)
    throw std::invalid_argument("find_covering_vector: matrix rank below column count");

  const auto embed = [&](std::uint64_t coeffs, bool prepend_first) {
    BitVec a(r);
    if (prepend_first) a.set(0, true);
    for (unsigned t = 0; t < cols; ++t)
      if ((coeffs >> t) & 1) a.set(basis_index[t], true);
    return a;
  };

  if (!m.row(0).zero()) {
    // Row 0 is in the basis at slot 0; scan combinations with coefficient 1
    // on it for one whose row sum has weight 1.
    for (std::uint64_t tail = 0; tail < (std::uint64_t{1} << (cols - 1)); ++tail) {
      const std::uint64_t coeffs = 1 | (tail << 1);
      std::uint64_t sum = 0;
      for (unsigned t = 0; t < cols; ++t)
        if ((coeffs >> t) & 1) sum ^= basis_rows[t];
      if (std::popcount(sum) == 1) return embed(coeffs, false);
    }
  } else {
    // Row 0 is zero, so the basis omits it. Represent each unit vector in
    // the basis; some representation has weight <= m-1 because only one
    // coefficient vector has full weight m.
    BitMatrix b(cols, cols);
    for (unsigned t = 0; t < cols; ++t)
      b.row(t) = BitVec::from_uint(basis_rows[t], cols);
    const BitMatrix binv = invert(b);
    for (unsigned j = 0; j < cols; ++j) {
      const BitVec& coeffs = binv.row(j);  // e_j = coeffs * b
      if (coeffs.weight() <= static_cast<std::size_t>(cols) - 1)
        return embed(coeffs.to_uint(), true);
    }
  }
  throw std::logic_error("find_covering_vector: no witness found for rank-m matrix");
}

/// Every generic (r,m)-erasure correcting set spans F_2^r, so its size is at
/// least r.
inline std::uint64_t size_lower_bound(unsigned r, unsigned m) {
  if (m < 1 || m > r)
    throw std::invalid_argument("size_lower_bound: need 1 <= m <= r");
  return r;
}

struct UpperBound {
  double coefficient;   // m / (-log2(1 - m 2^-m))
  std::uint64_t bound;  // ceil(coefficient * r)
};

/// Randomized-existence upper bound on the minimum size of a generic
/// (r,m)-erasure correcting set.
inline UpperBound size_upper_bound(unsigned r, unsigned m) {
  if (m < 1 || m > r)
    throw std::invalid_argument("size_upper_bound: need 1 <= m <= r");
  const double bad_fraction = 1.0 - m * std::exp2(-static_cast<double>(m));
  const double coefficient = m / (-std::log2(bad_fraction));
  return {coefficient,
          static_cast<std::uint64_t>(std::ceil(coefficient * r))};
}

/// Rank-m r x m matrix whose i-th row has odd weight exactly when v_i = 1.
/// Any `a` orthogonal to v then has even wt(aM): the certificate that a
/// non-spanning set fails the rank-m covering criterion.
///
/// Rows are chosen greedily: unit vectors for odd rows, pairs e_0 + e_k for
/// even rows, the first candidate that raises the rank, with e_0 (odd) and 0
/// (even) as fillers once no candidate helps.
inline BitMatrix parity_pattern_matrix(const BitVec& v, unsigned m) {
  const std::size_t r = v.length();
  if (v.zero()) throw std::invalid_argument("parity_pattern_matrix: v must be nonzero");
  if (m < 1 || m > r)
    throw std::invalid_argument("parity_pattern_matrix: need 1 <= m <= r");
  if (m > 63) throw std::invalid_argument("parity_pattern_matrix: m beyond desk scale");

  std::uint64_t reduced[64] = {};
  unsigned rk = 0;
  const auto try_insert = [&](std::uint64_t row) {
    std::uint64_t w = row;
    while (w) {
      const unsigned h = 63 - std::countl_zero(w);
      if (!reduced[h]) {
        reduced[h] = w;
        ++rk;
        return true;
      }
      w ^= reduced[h];
    }
    return false;
  };

  BitMatrix out(r, m);
  for (std::size_t i = 0; i < r; ++i) {
    std::uint64_t row = 0;
    if (v.get(i)) {
      row = 1;  // filler e_0
      if (rk < m) {
        for (unsigned k = 0; k < m; ++k) {
          if (try_insert(std::uint64_t{1} << k)) {
            row = std::uint64_t{1} << k;
            break;
          }
        }
      }
    } else {
      if (rk < m) {
        for (unsigned k = 1; k < m; ++k) {
          const std::uint64_t pair = 1 | (std::uint64_t{1} << k);
          if (try_insert(pair)) {
            row = pair;
            break;
          }
        }
      }
    }
    out.row(i) = BitVec::from_uint(row, m);
  }
  // r >= m and v != 0 guarantee the greedy reaches full rank.
  if (rk != m)
    throw std::logic_error("parity_pattern_matrix: rank target missed");
  return out;
}

struct BoundReport {
  unsigned r = 0, m = 0;
  std::uint64_t lower = 0;
  double upper_coefficient = 0.0;
  std::uint64_t upper = 0;
  std::uint64_t construction_size = 0;
};

inline BoundReport bound_report(unsigned r, unsigned m) {
  const auto ub = size_upper_bound(r, m);  // validates 1 <= m <= r
  return {r,
          m,
          size_lower_bound(r, m),
          ub.coefficient,
          ub.bound,
          low_weight_set_size(r, m)};  // validates m >= 2
}

}  // namespace gecs
