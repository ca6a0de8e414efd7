#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gecs/bitmatrix.hpp"
#include "gecs/bitvec.hpp"

namespace gecs {

/// A binary linear code of length n and codimension r, given by a full-rank
/// r x n parity check matrix whose rows span the dual code.
class Code {
 public:
  explicit Code(BitMatrix pcm) : pcm_(std::move(pcm)) {
    if (pcm_.row_count() == 0 || pcm_.row_count() > pcm_.col_count())
      throw std::invalid_argument("Code: need n >= r >= 1");
    if (rank(pcm_) != pcm_.row_count())
      throw std::invalid_argument("Code: parity check matrix is rank deficient");
  }

  std::size_t length() const { return pcm_.col_count(); }
  std::size_t codimension() const { return pcm_.row_count(); }
  std::size_t dimension() const { return length() - codimension(); }
  const BitMatrix& pcm() const { return pcm_; }

  bool contains(const BitVec& word) const {
    if (word.length() != length())
      throw std::invalid_argument("Code::contains: word length mismatch");
    for (std::size_t i = 0; i < pcm_.row_count(); ++i)
      if (dot(pcm_.row(i), word)) return false;
    return true;
  }

  /// Basis of the code itself (null space of the parity check matrix).
  std::vector<BitVec> codeword_basis() const { return null_space(pcm_); }

 private:
  BitMatrix pcm_;
};

/// Parity check matrix of the [2^r - 1, 2^r - 1 - r] Hamming code: column j
/// is the binary encoding of j+1.
inline Code hamming_code(unsigned r) {
  if (r < 2) throw std::invalid_argument("hamming_code: need r >= 2");
  if (r > 16) throw std::invalid_argument("hamming_code: r beyond desk scale");
  const std::size_t n = (std::size_t{1} << r) - 1;
  BitMatrix pcm(r, n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint32_t value = static_cast<std::uint32_t>(j + 1);
    for (unsigned i = 0; i < r; ++i)
      if ((value >> i) & 1) pcm.set(i, j, true);
  }
  return Code(std::move(pcm));
}

}  // namespace gecs
