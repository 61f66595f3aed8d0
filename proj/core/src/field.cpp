#include "srdelta/field.hpp"

namespace srdelta {

namespace {

bool is_prime_u32(uint32_t v) {
  if (v < 2) return false;
  for (uint32_t d = 2; d * d <= v; ++d)
    if (v % d == 0) return false;
  return true;
}

}  // namespace

FieldDescriptor FieldDescriptor::prime(uint32_t p) {
  if (p >= (1u << 16) || !is_prime_u32(p))
    throw UnsupportedField("F_p requires a prime p < 2^16, got " +
                           std::to_string(p));
  return FieldDescriptor{Kind::kPrime, p};
}

FieldDescriptor FieldDescriptor::parse(const std::string& name) {
  if (name == "Q" || name == "q") return rationals();
  if (name.size() >= 2 && (name[0] == 'F' || name[0] == 'f')) {
    uint32_t p = 0;
    for (size_t i = 1; i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9')
        throw UnsupportedField("cannot parse field name '" + name + "'");
      p = p * 10 + static_cast<uint32_t>(name[i] - '0');
      if (p >= (1u << 20)) break;
    }
    return prime(p);
  }
  throw UnsupportedField("cannot parse field name '" + name +
                         "' (expected Q or F<p>)");
}

std::string FieldDescriptor::name() const {
  return kind == Kind::kRationals ? "Q" : "F" + std::to_string(p);
}

}  // namespace srdelta
