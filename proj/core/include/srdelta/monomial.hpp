#ifndef SRDELTA_MONOMIAL_HPP
#define SRDELTA_MONOMIAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "srdelta/vertex_set.hpp"

namespace srdelta {

// Monomial in n variables as an exponent vector. Variables are indexed like
// vertices, 0..n-1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  // x^S for a vertex set S (the square-free monomial with that support).
  static Monomial squarefree(const VertexSet& support);
  static Monomial one(int n) { return Monomial(std::vector<int>(n, 0)); }
  static Monomial variable(int v, int n);

  int vars() const { return static_cast<int>(exp_.size()); }
  int exponent(int v) const { return exp_[static_cast<size_t>(v)]; }
  const std::vector<int>& exponents() const { return exp_; }

  int degree() const;
  VertexSet support() const;
  bool is_one() const { return degree() == 0; }
  bool is_squarefree() const;

  bool divides(const Monomial& m) const;
  Monomial times(const Monomial& m) const;
  Monomial times_variable(int v) const;
  Monomial lcm(const Monomial& m) const;
  Monomial gcd(const Monomial& m) const;
  // this / d, requires d | this.
  Monomial quotient(const Monomial& d) const;
  // Strip exponents to 0/1.
  Monomial radical() const;
  // Keep only the variables in `vars`, i.e. set every other variable to 1.
  Monomial restrict_to(const VertexSet& vars) const;

  std::string str() const;  // "x0^2*x1", "1" for the empty product

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.exp_ == b.exp_;
  }

 private:
  std::vector<int> exp_;
};

// Graded lexicographic order: first by total degree, then lexicographically
// on exponent vectors. The deterministic order for all generator lists.
bool grlex_less(const Monomial& a, const Monomial& b);

// Monomial prime ideal, generated by the variables in `support`. These are
// the associated primes of square-free monomial ideals; e(S/p) = 1 and
// dim(S/p) = n - |support| for every monomial prime p.
struct MonomialPrime {
  VertexSet support;

  explicit MonomialPrime(VertexSet s) : support(s) {
    if (s.is_empty())
      throw InputError("MonomialPrime: empty support is not a prime");
  }

  int height() const { return support.count(); }
  int dim() const { return support.ambient() - support.count(); }

  friend bool operator==(const MonomialPrime& a, const MonomialPrime& b) {
    return a.support == b.support;
  }
  friend auto operator<=>(const MonomialPrime& a, const MonomialPrime& b) {
    return a.support <=> b.support;
  }
};

// Membership of a monomial in a monomial prime: m lies in p exactly when the
// support of m meets the support of p.
inline bool monomial_in_prime(const Monomial& m, const MonomialPrime& p) {
  return m.support().intersects(p.support);
}

// Ideal generated by a finite set of monomials, kept reduced to its unique
// minimal generating set, sorted in graded lex order. The zero ideal is the
// empty generator list; the unit ideal has the single generator 1. Both are
// representable as values, and rejected by the invariant computations that
// require a proper nonzero ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(int n, std::vector<Monomial> generators);

  static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }

  // Square-free ideal from generator supports.
  static MonomialIdeal squarefree(int n, const std::vector<VertexSet>& supports);

  int vars() const { return n_; }
  const std::vector<Monomial>& generators() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_squarefree() const;
  int max_generator_degree() const;

  // m in I  <=>  some generator divides m.
  bool contains(const Monomial& m) const;

  MonomialIdeal radical() const;
  // (I, m): append a generator and re-minimalize.
  MonomialIdeal plus(const Monomial& m) const;
  // (I : m) for a monomial m: generated by g / gcd(g, m).
  MonomialIdeal colon(const Monomial& m) const;
  // Throws ZeroOrUnitIdeal unless the ideal is proper and nonzero.
  void require_proper_nonzero(const std::string& where) const;
  void require_squarefree(const std::string& where) const;

  std::string str() const;  // "(x0*x1, x2)"

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }

 private:
  int n_ = 0;
  std::vector<Monomial> gens_;
};

// All monomials of the given total degree in n variables, in graded lex
// order. Count is C(degree + n - 1, n - 1).
std::vector<Monomial> monomials_of_degree(int n, int degree);

}  // namespace srdelta

#endif  // SRDELTA_MONOMIAL_HPP
