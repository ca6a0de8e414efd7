#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gecs {

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // exact at each step: acc holds C(n-k+i-1, i-1) before the update
    acc = acc * (n - k + i) / i;
  }
  return acc;
}

/// Advances `c` (k ascending values from {0..n-1}) to the next combination in
/// lexicographic order. Returns false after the last one.
inline bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  if (k > n) return false;
  std::size_t i = k;
  while (i-- > 0) {
    if (c[i] != n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> c(k);
  std::iota(c.begin(), c.end(), std::size_t{0});
  return c;
}

}  // namespace gecs
