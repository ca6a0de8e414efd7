#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "gecs/combinatorics.hpp"
#include "gecs/generic_set.hpp"
#include "gecs/subsets.hpp"
#include "gecs/verify.hpp"

namespace gecs {

/// Result of the randomized construction experiment: draw N uniform vectors,
/// keep the distinct nonzero ones, certify, retry.
struct SearchOutcome {
  unsigned r = 0, m = 0;
  std::uint64_t set_size = 0;  // vectors drawn per attempt
  std::uint64_t seed = 0;
  unsigned restarts_used = 0;  // attempts performed
  std::optional<GenericSet> found;
  std::uint64_t budget = 0;  // required_size_bound(r, m, exact)
};

/// Up to max_restarts attempts, each drawing `set_size` rows with fair
/// independent bits from one seeded stream. Duplicates and zero rows are
/// dropped before certification; they contribute nothing to the covering
/// criterion. Deterministic for a fixed seed.
inline SearchOutcome random_search(unsigned r, unsigned m,
                                   std::uint64_t set_size, std::uint64_t seed,
                                   unsigned max_restarts,
                                   VerifyOptions verify_options = {}) {
  if (m < 1 || m > r)
    throw std::invalid_argument("random_search: need 1 <= m <= r");
  if (r > kMaxStreamDimension)
    throw std::invalid_argument("random_search: r beyond desk scale");
  if (set_size < 1)
    throw std::invalid_argument("random_search: set size must be >= 1");
  if (max_restarts < 1)
    throw std::invalid_argument("random_search: need at least one attempt");

  SearchOutcome outcome;
  outcome.r = r;
  outcome.m = m;
  outcome.set_size = set_size;
  outcome.seed = seed;
  outcome.budget = required_size_bound(r, m, /*exact_count=*/true);

  std::mt19937_64 rng(seed);
  const std::uint64_t mask = (std::uint64_t{1} << r) - 1;
  for (unsigned attempt = 1; attempt <= max_restarts; ++attempt) {
    std::vector<std::uint32_t> draws;
    draws.reserve(set_size);
    for (std::uint64_t i = 0; i < set_size; ++i) {
      const std::uint32_t row = static_cast<std::uint32_t>(rng() & mask);
      if (row != 0) draws.push_back(row);
    }
    outcome.restarts_used = attempt;
    if (draws.empty()) continue;  // all draws were zero; certain failure
    GenericSet candidate = GenericSet::from_encodings(r, draws);
    if (verify_generic(candidate, r, m, verify_options).pass) {
      outcome.found = std::move(candidate);
      return outcome;
    }
  }
  return outcome;
}

/// Exact minimum size of a passing set, by canonical-order search over the
/// m-subsets of F_2^r \ {0} of each size up to size_limit. Exponential;
/// guarded to r <= 4.
inline std::optional<std::size_t> min_generic_size(unsigned r, unsigned m,
                                                   std::size_t size_limit) {
  if (m < 1 || m > r)
    throw std::invalid_argument("min_generic_size: need 1 <= m <= r");
  if (r > 4)
    throw std::invalid_argument("min_generic_size: feasible only for r <= 4");
  const std::uint32_t universe = (std::uint32_t{1} << r) - 1;
  const VerifyOptions options{.jobs = 1, .fail_fast = true};
  for (std::size_t size = 1; size <= std::min<std::size_t>(size_limit, universe);
       ++size) {
    auto combo = first_combination(size);
    do {
      std::vector<std::uint32_t> encodings;
      encodings.reserve(size);
      for (std::size_t idx : combo)
        encodings.push_back(static_cast<std::uint32_t>(idx + 1));
      if (verify_generic(GenericSet::from_encodings(r, encodings), r, m, options)
              .pass)
        return size;
    } while (next_combination(combo, universe));
  }
  return std::nullopt;
}

}  // namespace gecs
