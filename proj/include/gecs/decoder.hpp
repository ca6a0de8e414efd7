#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gecs/bitvec.hpp"
#include "gecs/code.hpp"
#include "gecs/combinatorics.hpp"
#include "gecs/generic_set.hpp"

namespace gecs {

/// Erasure pattern: sorted 0-based positions.
using ErasurePattern = std::vector<std::size_t>;

/// An ordered collection of parity check equations over n positions. Zero
/// rows and duplicates are dropped (first occurrence kept); order matters to
/// the peeling decoder's tie-breaking.
class CheckCollection {
 public:
  CheckCollection(std::size_t n, std::vector<BitVec> checks) : n_(n) {
    if (n == 0) throw std::invalid_argument("CheckCollection: n must be >= 1");
    for (auto& h : checks) {
      if (h.length() != n)
        throw std::invalid_argument("CheckCollection: check length != n");
      if (h.zero()) continue;
      if (std::find(checks_.begin(), checks_.end(), h) != checks_.end()) continue;
      checks_.push_back(std::move(h));
    }
  }

  std::size_t length() const { return n_; }
  std::size_t size() const { return checks_.size(); }
  const std::vector<BitVec>& checks() const { return checks_; }
  const BitVec& check(std::size_t i) const { return checks_.at(i); }

 private:
  std::size_t n_;
  std::vector<BitVec> checks_;
};

/// The parity check collection { aH : a in A } induced by a candidate set,
/// in A's serialization order. With rank(H) = r the products are distinct
/// and nonzero, so the collection has exactly |A| checks.
inline CheckCollection generate_checks(const GenericSet& set, const Code& code) {
  if (set.dimension() != code.codimension())
    throw std::invalid_argument("generate_checks: set dimension != codimension");
  std::vector<BitVec> checks;
  checks.reserve(set.size());
  for (const auto& a : set.members()) checks.push_back(a * code.pcm());
  return CheckCollection(code.length(), std::move(checks));
}

namespace detail {

inline void validate_pattern(const ErasurePattern& pattern, std::size_t n) {
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] >= n)
      throw std::invalid_argument("erasure pattern: position out of range");
    if (i > 0 && pattern[i] <= pattern[i - 1])
      throw std::invalid_argument("erasure pattern: positions must be ascending");
  }
}

}  // namespace detail

/// True iff the erasures can be filled in exactly one way: the restriction
/// of the parity check matrix to the pattern's columns has full column rank
/// (equivalently, the pattern contains no nonzero-codeword support).
inline bool is_correctable(const Code& code, const ErasurePattern& pattern) {
  detail::validate_pattern(pattern, code.length());
  if (pattern.empty()) return true;
  return rank(code.pcm().columns(pattern)) == pattern.size();
}

/// A received word over {0, 1, erased}.
class ReceivedWord {
 public:
  ReceivedWord(BitVec values, std::vector<bool> erased)
      : values_(std::move(values)), erased_(std::move(erased)) {
    if (erased_.size() != values_.length())
      throw std::invalid_argument("ReceivedWord: mask length mismatch");
  }

  /// Parses a string over {0,1,?} where '?' marks an erasure.
  static ReceivedWord from_string(std::string_view text) {
    BitVec values(text.size());
    std::vector<bool> erased(text.size(), false);
    for (std::size_t i = 0; i < text.size(); ++i) {
      switch (text[i]) {
        case '0': break;
        case '1': values.set(i, true); break;
        case '?': erased[i] = true; break;
        default:
          throw std::invalid_argument("ReceivedWord: expected '0', '1' or '?'");
      }
    }
    return ReceivedWord(std::move(values), std::move(erased));
  }

  /// The word with the given positions erased.
  static ReceivedWord erase(const BitVec& word, const ErasurePattern& pattern) {
    detail::validate_pattern(pattern, word.length());
    BitVec values = word;
    std::vector<bool> erased(word.length(), false);
    for (std::size_t p : pattern) {
      values.set(p, false);
      erased[p] = true;
    }
    return ReceivedWord(std::move(values), std::move(erased));
  }

  std::size_t length() const { return values_.length(); }
  bool is_erased(std::size_t i) const { return erased_.at(i); }
  bool bit(std::size_t i) const { return values_.get(i); }
  const BitVec& values() const { return values_; }

  ErasurePattern erasure_set() const {
    ErasurePattern out;
    for (std::size_t i = 0; i < erased_.size(); ++i)
      if (erased_[i]) out.push_back(i);
    return out;
  }

  std::string to_string() const {
    std::string s = values_.to_string();
    for (std::size_t i = 0; i < erased_.size(); ++i)
      if (erased_[i]) s[i] = '?';
    return s;
  }

 private:
  BitVec values_;
  std::vector<bool> erased_;
};

struct PeelingStep {
  std::size_t check_index;  // which check resolved the position
  std::size_t position;
  bool value;
};

struct PeelingTrace {
  std::vector<PeelingStep> steps;
  bool decoded = false;
  BitVec word;              // full word when decoded; partial values otherwise
  ErasurePattern residual;  // empty iff decoded
};

/// Iterative peeling: repeatedly apply the lowest-index check with exactly
/// one erased position in its support, assigning that position the GF(2) sum
/// of the check's known positions. Terminates with a decoded word or with a
/// residual erasure set, which is then a stopping set for the collection.
inline PeelingTrace peel_decode(const CheckCollection& checks,
                                const ReceivedWord& received) {
  if (received.length() != checks.length())
    throw std::invalid_argument("peel_decode: word length mismatch");
  const std::size_t n = checks.length();
  BitVec word = received.values();
  std::vector<bool> erased(n);
  std::size_t remaining = 0;
  for (std::size_t i = 0; i < n; ++i) {
    erased[i] = received.is_erased(i);
    remaining += erased[i];
  }

  PeelingTrace trace;
  while (remaining > 0) {
    bool progressed = false;
    for (std::size_t ci = 0; ci < checks.size() && !progressed; ++ci) {
      const auto support = checks.check(ci).support();
      std::size_t erased_pos = n;
      unsigned erased_count = 0;
      for (std::size_t p : support) {
        if (erased[p]) {
          ++erased_count;
          if (erased_count > 1) break;
          erased_pos = p;
        }
      }
      if (erased_count != 1) continue;
      bool value = false;
      for (std::size_t p : support)
        if (p != erased_pos) value ^= word.get(p);
      word.set(erased_pos, value);
      erased[erased_pos] = false;
      --remaining;
      trace.steps.push_back({ci, erased_pos, value});
      progressed = true;
    }
    if (!progressed) break;
  }

  trace.decoded = remaining == 0;
  trace.word = std::move(word);
  for (std::size_t i = 0; i < n; ++i)
    if (erased[i]) trace.residual.push_back(i);
  return trace;
}

/// True iff no check has exactly one support position inside the pattern.
/// The empty pattern is not a stopping set (termination with no erasures is
/// success) and is rejected.
inline bool is_stopping_set(const CheckCollection& checks,
                            const ErasurePattern& pattern) {
  if (pattern.empty())
    throw std::invalid_argument("is_stopping_set: pattern must be nonempty");
  detail::validate_pattern(pattern, checks.length());
  for (const auto& h : checks.checks()) {
    unsigned inside = 0;
    for (std::size_t p : pattern) {
      inside += h.get(p);
      if (inside > 1) break;
    }
    if (inside == 1) return false;
  }
  return true;
}

struct StoppingSetEntry {
  ErasurePattern positions;
  enum class Label { unlabeled, correctable, codeword_support } label =
      Label::unlabeled;
};

/// All nonempty stopping sets of size <= max_size, ascending by size then
/// lexicographically. With a code, each set is labeled `correctable` (a
/// decoder deficiency) or `codeword_support` (unavoidable: it contains the
/// support of a nonzero codeword).
inline std::vector<StoppingSetEntry> enumerate_stopping_sets(
    const CheckCollection& checks, std::size_t max_size,
    const Code* code = nullptr) {
  const std::size_t n = checks.length();
  if (n > 20)
    throw std::invalid_argument("enumerate_stopping_sets: n beyond desk scale");
  if (max_size > n)
    throw std::invalid_argument("enumerate_stopping_sets: max_size > n");
  if (code && code->length() != n)
    throw std::invalid_argument("enumerate_stopping_sets: code length mismatch");
  std::vector<StoppingSetEntry> out;
  for (std::size_t size = 1; size <= max_size; ++size) {
    auto combo = first_combination(size);
    do {
      if (!is_stopping_set(checks, combo)) continue;
      StoppingSetEntry entry{combo, StoppingSetEntry::Label::unlabeled};
      if (code)
        entry.label = is_correctable(*code, combo)
                          ? StoppingSetEntry::Label::correctable
                          : StoppingSetEntry::Label::codeword_support;
      out.push_back(std::move(entry));
    } while (next_combination(combo, n));
  }
  return out;
}

/// Canonically smallest correctable pattern of size exactly m in which no
/// check has weight 1, or nullopt when every such pattern is reducible.
inline std::optional<ErasurePattern> find_unreduced_pattern(
    const CheckCollection& checks, const Code& code, std::size_t m) {
  if (checks.length() != code.length())
    throw std::invalid_argument("find_unreduced_pattern: length mismatch");
  if (m < 1 || m > code.length())
    throw std::invalid_argument("find_unreduced_pattern: need 1 <= m <= n");
  auto combo = first_combination(m);
  do {
    if (!is_correctable(code, combo)) continue;
    if (is_stopping_set(checks, combo)) return combo;
  } while (next_combination(combo, code.length()));
  return std::nullopt;
}

/// True iff every correctable pattern of size exactly m admits a check with
/// exactly one 1 inside it, so the peeling decoder resolves at least one
/// erasure.
inline bool is_m_erasure_reducing(const CheckCollection& checks,
                                  const Code& code, std::size_t m) {
  return !find_unreduced_pattern(checks, code, m).has_value();
}

/// True iff the collection is m'-erasure reducing for every 1 <= m' <= m;
/// then the peeling decoder corrects every correctable pattern of size <= m.
/// m = 0 is vacuously true.
inline bool is_m_erasure_decoding(const CheckCollection& checks,
                                  const Code& code, std::size_t m) {
  if (m > code.length())
    throw std::invalid_argument("is_m_erasure_decoding: m > n");
  for (std::size_t mp = 1; mp <= m; ++mp)
    if (!is_m_erasure_reducing(checks, code, mp)) return false;
  return true;
}

}  // namespace gecs
