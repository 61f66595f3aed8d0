#ifndef SRDELTA_VERTEX_SET_HPP
#define SRDELTA_VERTEX_SET_HPP

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "srdelta/errors.hpp"

namespace srdelta {

inline constexpr int kMaxVertices = 32;

// Subset of the vertex index set {0,...,n-1}, n <= 32, stored as a single
// machine word. Only the low n bits may be set. All set operations are O(1).
class VertexSet {
 public:
  VertexSet() = default;

  VertexSet(uint32_t bits, int n) : bits_(bits), n_(static_cast<uint8_t>(n)) {
    if (n < 0 || n > kMaxVertices)
      throw VertexOutOfRange("ambient size " + std::to_string(n));
    if (n < kMaxVertices && (bits >> n) != 0)
      throw VertexOutOfRange("bitmask exceeds ambient size " +
                             std::to_string(n));
  }

  static VertexSet empty(int n) { return VertexSet(0u, n); }

  static VertexSet full(int n) {
    return VertexSet(n == kMaxVertices ? ~0u : ((1u << n) - 1u), n);
  }

  static VertexSet of(std::initializer_list<int> vs, int n) {
    uint32_t b = 0;
    for (int v : vs) {
      if (v < 0 || v >= n)
        throw VertexOutOfRange("vertex " + std::to_string(v) + " with n=" +
                               std::to_string(n));
      b |= (1u << v);
    }
    return VertexSet(b, n);
  }

  uint32_t bits() const { return bits_; }
  int ambient() const { return n_; }
  int count() const { return std::popcount(bits_); }
  bool is_empty() const { return bits_ == 0; }

  bool contains(int v) const {
    assert(v >= 0 && v < n_);
    return (bits_ >> v) & 1u;
  }

  bool subset_of(const VertexSet& o) const {
    assert(n_ == o.n_);
    return (bits_ & ~o.bits_) == 0;
  }

  bool intersects(const VertexSet& o) const {
    assert(n_ == o.n_);
    return (bits_ & o.bits_) != 0;
  }

  VertexSet unite(const VertexSet& o) const {
    assert(n_ == o.n_);
    return VertexSet(bits_ | o.bits_, n_);
  }

  VertexSet intersect(const VertexSet& o) const {
    assert(n_ == o.n_);
    return VertexSet(bits_ & o.bits_, n_);
  }

  VertexSet difference(const VertexSet& o) const {
    assert(n_ == o.n_);
    return VertexSet(bits_ & ~o.bits_, n_);
  }

  VertexSet complement() const {
    return VertexSet(~bits_ & full(n_).bits(), n_);
  }

  VertexSet with(int v) const {
    assert(v >= 0 && v < n_);
    return VertexSet(bits_ | (1u << v), n_);
  }

  VertexSet without(int v) const {
    assert(v >= 0 && v < n_);
    return VertexSet(bits_ & ~(1u << v), n_);
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(count());
    for (uint32_t b = bits_; b != 0; b &= b - 1)
      out.push_back(std::countr_zero(b));
    return out;
  }

  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int v : elements()) {
      if (!first) s += ",";
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }
  // Order by cardinality then mask value; the deterministic order used
  // whenever vertex sets are listed.
  friend std::strong_ordering operator<=>(const VertexSet& a,
                                          const VertexSet& b) {
    if (auto c = a.count() <=> b.count(); c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  uint32_t bits_ = 0;
  uint8_t n_ = 0;
};

}  // namespace srdelta

#endif  // SRDELTA_VERTEX_SET_HPP
