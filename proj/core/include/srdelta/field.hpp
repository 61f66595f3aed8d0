#ifndef SRDELTA_FIELD_HPP
#define SRDELTA_FIELD_HPP

#include <cstdint>
#include <string>

#include "srdelta/errors.hpp"

namespace srdelta {

// Coefficient field for homology ranks: the rationals or a prime field F_p
// with p < 2^16. Exact arithmetic in both cases.
struct FieldDescriptor {
  enum class Kind { kRationals, kPrime };

  Kind kind = Kind::kPrime;
  uint32_t p = 2;  // meaningful only for Kind::kPrime

  static FieldDescriptor rationals() {
    return FieldDescriptor{Kind::kRationals, 0};
  }

  static FieldDescriptor prime(uint32_t p);

  // "Q", "F2", "F3", ... used in CLI flags and JSON keys.
  static FieldDescriptor parse(const std::string& name);
  std::string name() const;

  friend bool operator==(const FieldDescriptor& a, const FieldDescriptor& b) {
    if (a.kind != b.kind) return false;
    return a.kind == Kind::kRationals || a.p == b.p;
  }
};

}  // namespace srdelta

#endif  // SRDELTA_FIELD_HPP
