#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gecs/bitvec.hpp"

namespace gecs {

/// A finite set of distinct nonzero vectors of F_2^r, a candidate generic
/// (r,m)-erasure correcting set. Members are kept sorted ascending by
/// integer encoding; that order is also the serialization order.
class GenericSet {
 public:
  GenericSet(std::size_t r, std::vector<BitVec> members) : r_(r) {
    if (r == 0) throw std::invalid_argument("GenericSet: dimension must be >= 1");
    for (const auto& v : members) {
      if (v.length() != r)
        throw std::invalid_argument("GenericSet: member length != r");
      if (v.zero())
        throw std::invalid_argument("GenericSet: zero vector not allowed");
    }
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    members_ = std::move(members);
  }

  static GenericSet from_encodings(std::size_t r,
                                   const std::vector<std::uint32_t>& encodings) {
    std::vector<BitVec> members;
    members.reserve(encodings.size());
    for (auto e : encodings) members.push_back(BitVec::from_uint(e, r));
    return GenericSet(r, std::move(members));
  }

  std::size_t dimension() const { return r_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const std::vector<BitVec>& members() const { return members_; }

  bool contains(const BitVec& v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
  }

  /// Integer encodings in serialization order; requires r <= 32.
  std::vector<std::uint32_t> encodings() const {
    if (r_ > 32)
      throw std::invalid_argument("GenericSet::encodings: r exceeds 32");
    std::vector<std::uint32_t> out;
    out.reserve(members_.size());
    for (const auto& v : members_)
      out.push_back(static_cast<std::uint32_t>(v.to_uint()));
    return out;
  }

  friend bool operator==(const GenericSet&, const GenericSet&) = default;

 private:
  std::size_t r_;
  std::vector<BitVec> members_;
};

}  // namespace gecs
