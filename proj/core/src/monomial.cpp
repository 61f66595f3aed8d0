#include "srdelta/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace srdelta {

Monomial::Monomial(std::vector<int> exponents) : exp_(std::move(exponents)) {
  if (exp_.size() > static_cast<size_t>(kMaxVertices))
    throw VertexOutOfRange("monomial in more than 32 variables");
  for (int e : exp_)
    if (e < 0) throw InputError("negative exponent in monomial");
}

Monomial Monomial::squarefree(const VertexSet& support) {
  std::vector<int> e(static_cast<size_t>(support.ambient()), 0);
  for (int v : support.elements()) e[static_cast<size_t>(v)] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::variable(int v, int n) {
  if (v < 0 || v >= n) throw VertexOutOfRange("variable index");
  std::vector<int> e(static_cast<size_t>(n), 0);
  e[static_cast<size_t>(v)] = 1;
  return Monomial(std::move(e));
}

int Monomial::degree() const {
  return std::accumulate(exp_.begin(), exp_.end(), 0);
}

VertexSet Monomial::support() const {
  uint32_t bits = 0;
  for (size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > 0) bits |= (1u << i);
  return VertexSet(bits, vars());
}

bool Monomial::is_squarefree() const {
  return std::all_of(exp_.begin(), exp_.end(), [](int e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& m) const {
  if (vars() != m.vars()) return false;
  for (size_t i = 0; i < exp_.size(); ++i)
    if (exp_[i] > m.exp_[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& m) const {
  std::vector<int> e(exp_);
  for (size_t i = 0; i < e.size(); ++i) e[i] += m.exp_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::times_variable(int v) const {
  std::vector<int> e(exp_);
  e.at(static_cast<size_t>(v)) += 1;
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& m) const {
  std::vector<int> e(exp_);
  for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], m.exp_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::gcd(const Monomial& m) const {
  std::vector<int> e(exp_);
  for (size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], m.exp_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::quotient(const Monomial& d) const {
  std::vector<int> e(exp_);
  for (size_t i = 0; i < e.size(); ++i) {
    e[i] -= d.exp_[i];
    if (e[i] < 0) throw InputError("monomial quotient: divisor does not divide");
  }
  return Monomial(std::move(e));
}

Monomial Monomial::radical() const {
  std::vector<int> e(exp_);
  for (int& x : e) x = x > 0 ? 1 : 0;
  return Monomial(std::move(e));
}

Monomial Monomial::restrict_to(const VertexSet& vars_kept) const {
  std::vector<int> e(exp_);
  for (size_t i = 0; i < e.size(); ++i)
    if (!vars_kept.contains(static_cast<int>(i))) e[i] = 0;
  return Monomial(std::move(e));
}

std::string Monomial::str() const {
  std::string s;
  for (size_t i = 0; i < exp_.size(); ++i) {
    if (exp_[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i);
    if (exp_[i] > 1) s += "^" + std::to_string(exp_[i]);
  }
  return s.empty() ? "1" : s;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exponents() > b.exponents();  // larger leading exponents first
}

namespace {

// Reduce a generator list to the minimal generating set.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), grlex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const Monomial& g : gens) {
    bool redundant = false;
    for (const Monomial& kept : out) {
      if (kept.divides(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(g);
  }
  return out;
}

}  // namespace

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> generators) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw VertexOutOfRange("ideal ambient size " + std::to_string(n));
  for (const Monomial& g : generators)
    if (g.vars() != n)
      throw InputError("generator arity mismatch: " + g.str() + " with n=" +
                       std::to_string(n));
  gens_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::squarefree(int n,
                                        const std::vector<VertexSet>& supports) {
  std::vector<Monomial> gens;
  gens.reserve(supports.size());
  for (const VertexSet& s : supports) gens.push_back(Monomial::squarefree(s));
  return MonomialIdeal(n, std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(),
                     [](const Monomial& g) { return g.is_squarefree(); });
}

int MonomialIdeal::max_generator_degree() const {
  int d = 0;
  for (const Monomial& g : gens_) d = std::max(d, g.degree());
  return d;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal MonomialIdeal::radical() const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const Monomial& g : gens_) gens.push_back(g.radical());
  return MonomialIdeal(n_, std::move(gens));
}

MonomialIdeal MonomialIdeal::plus(const Monomial& m) const {
  std::vector<Monomial> gens(gens_);
  gens.push_back(m);
  return MonomialIdeal(n_, std::move(gens));
}

MonomialIdeal MonomialIdeal::colon(const Monomial& m) const {
  std::vector<Monomial> gens;
  gens.reserve(gens_.size());
  for (const Monomial& g : gens_) gens.push_back(g.quotient(g.gcd(m)));
  return MonomialIdeal(n_, std::move(gens));
}

void MonomialIdeal::require_proper_nonzero(const std::string& where) const {
  if (is_zero()) throw ZeroOrUnitIdeal(where + ": zero ideal");
  if (is_unit()) throw ZeroOrUnitIdeal(where + ": unit ideal");
}

void MonomialIdeal::require_squarefree(const std::string& where) const {
  if (!is_squarefree())
    throw NonSquareFreeInput(where + ": ideal is not square-free");
}

std::string MonomialIdeal::str() const {
  if (is_zero()) return "(0)";
  std::string s = "(";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].str();
  }
  return s + ")";
}

std::vector<Monomial> monomials_of_degree(int n, int degree) {
  if (n <= 0) {
    if (degree == 0) return {Monomial(std::vector<int>{})};
    return {};
  }
  std::vector<Monomial> out;
  std::vector<int> exps(static_cast<size_t>(n), 0);
  // Walk all compositions of `degree` into n non-negative parts.
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == n - 1) {
      exps[static_cast<size_t>(pos)] = left;
      out.emplace_back(exps);
      return;
    }
    for (int e = left; e >= 0; --e) {
      exps[static_cast<size_t>(pos)] = e;
      self(self, pos + 1, left - e);
    }
    exps[static_cast<size_t>(pos)] = 0;
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), grlex_less);
  return out;
}

}  // namespace srdelta
