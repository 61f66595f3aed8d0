#ifndef SRDELTA_MINDIST_HPP
#define SRDELTA_MINDIST_HPP

#include <map>
#include <string>
#include <vector>

#include "srdelta/monomial.hpp"

namespace srdelta {

// How a delta value was obtained.
//  kFormula           -- F_t empty (prime ideal): delta = e(S/I) directly.
//  kMonomialSearch    -- exhaustive search over monomial zero-divisors; for
//                        unmixed ideals this equals the minimum distance
//                        function on all forms (monomial dominance).
//  kMonomialRestricted-- mixed ideal below its regularity index: the search
//                        covers monomial candidates only, and the value is
//                        reported as such.
//  kOracle            -- finite-field brute force over genuine forms.
enum class DeltaMethod { kFormula, kMonomialSearch, kMonomialRestricted, kOracle };

std::string to_string(DeltaMethod m);

struct DeltaValue {
  long long value = 0;
  DeltaMethod method = DeltaMethod::kMonomialSearch;
};

// The sequence delta_I(1), delta_I(2), ..., with its regularity index (the
// first degree where the stable value is reached) and the stable value
// itself. Cross-validated on construction: the empirical stabilization
// point must match the closed-form index, and the sequence must be
// non-increasing; any failure throws CrossValidationMismatch.
struct DeltaProfile {
  std::map<int, DeltaValue> values;  // t -> delta_I(t), t = 1..t_max
  int r_index = 0;
  long long stable_value = 0;
  bool unmixed = false;
  bool constant_profile = false;  // prime ideal: F_t empty for every t
};

// Degree-t monomial zero-divisors outside I: all monomials m of degree t
// with m not in I and m in some minimal prime of I. (For square-free I the
// associated primes are exactly the minimal primes.) May be empty; then
// delta_I(t) = e(S/I) by the second branch of the definition.
std::vector<Monomial> zero_divisor_monomials(const MonomialIdeal& ideal, int t);

// delta_I(t) = e(S/I) - max{ e_d(S/(I,m)) : m a degree-t monomial
// zero-divisor }, where e_d counts multiplicity in the fixed dimension
// d = dim(S/I); quotients of smaller dimension contribute 0.
//
// For any monomial m in some maximal-dimension minimal prime of I,
// e_d(S/(I,m)) = #(A(I) n V(m)): the surviving primes are the
// maximal-dimension primes of I containing m, each with localization length
// one because I is radical. Candidates missing all of A(I) drop the
// dimension and contribute 0. This depends on supp(m) only, so the search
// runs over support classes: the supports realizable in degree t are the
// faces W of the complex of I with 1 <= |W| <= t.
DeltaValue delta(const MonomialIdeal& ideal, int t);

// Closed form for mixed ideals: r_I = min{ t : [J_1/I]_t != 0 } with J_1
// the intersection of the maximal-dimension minimal primes. For monomial
// ideals this is the smallest degree of a minimal generator of J_1 outside
// I. Throws NotMixed on unmixed input.
int r_index_mixed(const MonomialIdeal& ideal);

// Closed form for unmixed ideals: minimize over the dropped prime p_i the
// smallest degree of a monomial in (intersection of the others) \ I. Every
// minimal prime of a square-free ideal has e(S/p) = 1, so every prime may
// be dropped. A prime ideal (one minimal prime) stabilizes at t = 1 by
// convention, with a constant profile.
int r_index_unmixed(const MonomialIdeal& ideal);

// 1 for unmixed square-free ideals (all e(S/p) = 1), 0 for mixed ones.
long long stable_value(const MonomialIdeal& ideal);

// Full profile for t = 1..max(t_max, r_I + 2), cross-validated.
DeltaProfile delta_profile(const MonomialIdeal& ideal, int t_max);

// Brute-force minimum distance over genuine degree-t forms with coefficients
// in F_q: enumerate all q^M - 1 nonzero coefficient vectors over the M
// degree-t monomials and take the best zero-divisor. Requires unmixed input
// (every zero divisor then lies in a minimal prime and preserves dimension),
// q in {2, 3}, and M <= 16.
long long oracle_delta_forms(const MonomialIdeal& ideal, int t, int q);

}  // namespace srdelta

#endif  // SRDELTA_MINDIST_HPP
