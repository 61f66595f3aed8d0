#ifndef SRDELTA_HILBERT_HPP
#define SRDELTA_HILBERT_HPP

#include <utility>
#include <vector>

#include "srdelta/exact_linalg.hpp"
#include "srdelta/monomial.hpp"

namespace srdelta {

// C(a, b) exactly; 0 for b < 0 or a < b.
BigInt binomial(long long a, long long b);

// Krull dimension of S/J for a proper nonzero monomial ideal J: n minus the
// smallest height of a minimal prime, read off the radical.
int krull_dimension(const MonomialIdeal& ideal);

// dim_K (S/J)_s for s = 0..t_max, for an arbitrary monomial ideal, via the
// standard splitting recursion  h_{S/J}(s) = h_{S/(J+(x))}(s) + h_{S/(J:x)}(s-1).
// Never consults primes or facets, so it is independent of the localization
// route to multiplicity.
std::vector<BigInt> graded_piece_dims(const MonomialIdeal& ideal, int t_max);

// Single graded piece dim_K (S/J)_t.
BigInt graded_piece_dim(const MonomialIdeal& ideal, int t);

// Cumulative (affine) Hilbert function H_I(t) = dim_K (S/I)_{<= t} of a
// square-free ideal, from the f-vector of the associated complex:
// h(0) = 1, h(s) = sum_i f_{i-1} C(s-1, i-1), H(t) = sum_{s<=t} h(s).
BigInt hilbert_cumulative(const MonomialIdeal& ideal, int t);

// Length of the localization S_p / J S_p at a minimal prime p of J: the
// number of standard monomials after inverting the variables outside p.
// Finite exactly when p is minimal over J; NonFiniteLength otherwise.
BigInt localization_length(const MonomialIdeal& ideal, const MonomialPrime& p);

// Hilbert-Samuel multiplicity e(S/J) via the additivity formula: the sum of
// localization lengths over the minimal primes of maximal dimension. For
// square-free J this is the number of maximal-dimension facets.
BigInt multiplicity(const MonomialIdeal& ideal);

// Multiplicity counted in a fixed ambient dimension d: e(S/J) when
// dim(S/J) = d, and 0 when dim(S/J) < d (the degree-d coefficient of the
// Hilbert polynomial vanishes). Requires dim(S/J) <= d.
BigInt multiplicity_in_dim(const MonomialIdeal& ideal, int d);

// Degree and leading coefficient of the cumulative Hilbert polynomial,
// interpolated at d + 2 points past stabilization (t = n * maxdeg + 1, ...).
// Serves as the independent double-entry check on multiplicity:
// e = d! * leading. Raises InterpolationMismatch if the interpolated degree
// disagrees with the Krull dimension.
std::pair<int, BigRational> hilbert_polynomial_leading(const MonomialIdeal& ideal);

}  // namespace srdelta

#endif  // SRDELTA_HILBERT_HPP
