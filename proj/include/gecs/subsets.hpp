#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "gecs/bitvec.hpp"

namespace gecs {

inline constexpr unsigned kMaxStreamDimension = 20;

/// Rank of a set of r-bit vectors given by their integer encodings
/// (incremental XOR basis).
inline unsigned xor_basis_rank(std::span<const std::uint32_t> vectors) {
  std::uint32_t basis[32] = {};
  unsigned rk = 0;
  for (std::uint32_t v : vectors) {
    while (v) {
      const unsigned h = 31 - std::countl_zero(v);
      if (!basis[h]) {
        basis[h] = v;
        ++rk;
        break;
      }
      v ^= basis[h];
    }
  }
  return rk;
}

/// Streams every unordered m-subset of F_2^r \ {0} with rank m, exactly once,
/// in canonical order: members ascending by integer encoding, subsets in
/// lexicographic order on the sorted tuple.
///
/// A stream may be restricted to subsets whose smallest member lies in
/// [lead_lo, lead_hi); the restrictions for consecutive intervals partition
/// the full stream and preserve the canonical order, which is what the
/// parallel verifier relies on.
class IndependentSubsetStream {
 public:
  IndependentSubsetStream(unsigned r, unsigned m)
      : IndependentSubsetStream(r, m, 1, max_lead(r, m) + 1) {}

  IndependentSubsetStream(unsigned r, unsigned m, std::uint32_t lead_lo,
                          std::uint32_t lead_hi)
      : r_(r), m_(m), top_((std::uint32_t{1} << r) - 1), lead_hi_(lead_hi) {
    if (r < 1 || m < 1 || m > r)
      throw std::invalid_argument("IndependentSubsetStream: need 1 <= m <= r");
    if (r > kMaxStreamDimension)
      throw std::invalid_argument("IndependentSubsetStream: r beyond desk scale");
    if (lead_lo < 1) lead_lo = 1;
    if (lead_hi_ > max_lead(r, m) + 1) lead_hi_ = max_lead(r, m) + 1;
    if (lead_lo >= lead_hi_) {
      done_ = true;
      return;
    }
    cursor_.resize(m_);
    for (unsigned i = 0; i < m_; ++i) cursor_[i] = lead_lo + i;
  }

  unsigned dimension() const { return r_; }
  unsigned subset_size() const { return m_; }

  /// Next rank-m subset; fills `subset` with ascending encodings. Returns
  /// false once exhausted.
  bool next(std::vector<std::uint32_t>& subset) {
    while (!done_) {
      const bool independent = xor_basis_rank(cursor_) == m_;
      if (independent) subset = cursor_;
      step();
      if (independent) return true;
    }
    return false;
  }

  /// Number of rank-m m-subsets of F_2^r \ {0}: prod_{i<m} (2^r - 2^i) / m!.
  static std::uint64_t rank_subset_count(unsigned r, unsigned m) {
    if (r < 1 || m < 1 || m > r)
      throw std::invalid_argument("rank_subset_count: need 1 <= m <= r");
    unsigned __int128 acc = 1;
    const unsigned __int128 kMax128 = ~(unsigned __int128){0};
    const unsigned __int128 space = (unsigned __int128){1} << r;
    for (unsigned i = 0; i < m; ++i) {
      const unsigned __int128 factor = space - ((unsigned __int128){1} << i);
      if (acc > kMax128 / factor)
        throw std::overflow_error("rank_subset_count: overflow");
      acc = acc * factor / (i + 1);  // prefix is the rank-(i+1) subset count
    }
    if (acc > (std::numeric_limits<std::uint64_t>::max)())
      throw std::overflow_error("rank_subset_count: overflow");
    return static_cast<std::uint64_t>(acc);
  }

  /// Largest possible smallest member of an m-subset of {1..2^r-1}.
  static std::uint32_t max_lead(unsigned r, unsigned m) {
    return (std::uint32_t{1} << r) - m;
  }

 private:
  void step() {
    unsigned i = m_;
    while (i-- > 0) {
      if (cursor_[i] != top_ - (m_ - 1 - i)) {
        ++cursor_[i];
        for (unsigned j = i + 1; j < m_; ++j) cursor_[j] = cursor_[j - 1] + 1;
        if (cursor_[0] >= lead_hi_) done_ = true;
        return;
      }
    }
    done_ = true;
  }

  unsigned r_ = 0, m_ = 0;
  std::uint32_t top_ = 0, lead_hi_ = 0;
  std::vector<std::uint32_t> cursor_;
  bool done_ = false;
};

inline BitVec to_bitvec(std::uint32_t encoding, unsigned r) {
  return BitVec::from_uint(encoding, r);
}

}  // namespace gecs
