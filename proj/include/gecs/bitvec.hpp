#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gecs {

/// Bit-packed row vector over GF(2).
///
/// Coordinates are 0-indexed in the API. The text form writes coordinate 0
/// leftmost; the integer form puts coordinate 0 in the least significant bit,
/// so value order of equal-length vectors is the canonical order used for
/// set serialization and subset enumeration.
class BitVec {
 public:
  BitVec() = default;

  explicit BitVec(std::size_t length)
      : len_(length), words_((length + 63) / 64, 0) {}

  static BitVec from_uint(std::uint64_t bits, std::size_t length) {
    if (length < 64 && (bits >> length) != 0)
      throw std::invalid_argument("BitVec::from_uint: value does not fit length");
    BitVec v(length);
    if (length > 0) v.words_[0] = bits;
    return v;
  }

  static BitVec from_string(std::string_view text) {
    BitVec v(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == '1')
        v.set(i, true);
      else if (text[i] != '0')
        throw std::invalid_argument("BitVec::from_string: expected '0' or '1'");
    }
    return v;
  }

  static BitVec unit(std::size_t length, std::size_t index) {
    BitVec v(length);
    v.set(index, true);
    return v;
  }

  std::size_t length() const { return len_; }

  bool get(std::size_t i) const {
    check_index(i);
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }

  void set(std::size_t i, bool value) {
    check_index(i);
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  void flip(std::size_t i) { set(i, !get(i)); }

  bool zero() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  std::size_t weight() const {
    std::size_t n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        out.push_back(64 * wi + std::countr_zero(w));
        w &= w - 1;
      }
    }
    return out;
  }

  std::uint64_t to_uint() const {
    if (len_ > 64)
      throw std::invalid_argument("BitVec::to_uint: length exceeds 64");
    return words_.empty() ? 0 : words_[0];
  }

  std::string to_string() const {
    std::string s(len_, '0');
    for (std::size_t i = 0; i < len_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  BitVec& operator^=(const BitVec& other) {
    if (other.len_ != len_)
      throw std::invalid_argument("BitVec: length mismatch in xor");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
  }

  friend BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
  }

  friend bool operator==(const BitVec& a, const BitVec& b) = default;

  /// Inner product over GF(2): parity of |supp(a) ∩ supp(b)|.
  friend bool dot(const BitVec& a, const BitVec& b) {
    if (a.len_ != b.len_)
      throw std::invalid_argument("dot: length mismatch");
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < a.words_.size(); ++i)
      acc ^= a.words_[i] & b.words_[i];
    return std::popcount(acc) & 1;
  }

  // Value order (integer encoding); equal-length comparisons only.
  std::strong_ordering operator<=>(const BitVec& other) const {
    if (len_ != other.len_) return len_ <=> other.len_;
    for (std::size_t i = words_.size(); i-- > 0;)
      if (words_[i] != other.words_[i]) return words_[i] <=> other.words_[i];
    return std::strong_ordering::equal;
  }

 private:
  void check_index(std::size_t i) const {
    if (i >= len_) throw std::out_of_range("BitVec: coordinate out of range");
  }

  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace gecs
