#ifndef SRDELTA_EXACT_LINALG_HPP
#define SRDELTA_EXACT_LINALG_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace srdelta {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

// Dense row-major integer matrix. Small: boundary matrices at survey scale.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<BigInt> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  BigInt& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const BigInt& at(int r, int c) const {
    return a[static_cast<size_t>(r) * cols + c];
  }
};

// Rank over the rationals via Bareiss fraction-free elimination. Exact:
// every division is by a previous pivot and leaves an integer.
int rank_over_q(IntMatrix m);

// Rank over F_p (p prime, p < 2^16) by modular Gaussian elimination.
int rank_mod_p(const IntMatrix& m, uint32_t p);

}  // namespace srdelta

#endif  // SRDELTA_EXACT_LINALG_HPP
