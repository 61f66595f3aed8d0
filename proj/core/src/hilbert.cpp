#include "srdelta/hilbert.hpp"

#include <algorithm>

#include "srdelta/stanley_reisner.hpp"

namespace srdelta {

BigInt binomial(long long a, long long b) {
  if (b < 0 || a < b) return 0;
  b = std::min(b, a - b);
  BigInt r = 1;
  for (long long i = 1; i <= b; ++i) {
    r *= (a - b + i);
    r /= i;
  }
  return r;
}

int krull_dimension(const MonomialIdeal& ideal) {
  ideal.require_proper_nonzero("krull_dimension");
  const MonomialIdeal rad = ideal.radical();
  int min_height = rad.vars();
  for (const MonomialPrime& p : minimal_primes_via_transversals(rad))
    min_height = std::min(min_height, p.height());
  return ideal.vars() - min_height;
}

namespace {

std::vector<BigInt> graded_dims_rec(const MonomialIdeal& ideal, int t_max) {
  std::vector<BigInt> out(static_cast<size_t>(t_max) + 1, 0);
  if (ideal.is_unit()) return out;

  // Split off the variable generators: they simply delete variables.
  int live_vars = ideal.vars();
  std::vector<Monomial> rest;
  for (const Monomial& g : ideal.generators()) {
    if (g.degree() == 1)
      --live_vars;
    else
      rest.push_back(g);
  }

  if (rest.empty()) {
    // Polynomial ring in live_vars variables; zero variables leave only the
    // constants in degree 0.
    if (live_vars == 0) {
      out[0] = 1;
      return out;
    }
    for (int s = 0; s <= t_max; ++s)
      out[static_cast<size_t>(s)] = binomial(s + live_vars - 1, live_vars - 1);
    return out;
  }

  // Pivot on the most frequent variable among the degree >= 2 generators.
  std::vector<int> freq(static_cast<size_t>(ideal.vars()), 0);
  for (const Monomial& g : rest)
    for (int v : g.support().elements()) freq[static_cast<size_t>(v)]++;
  const int pivot = static_cast<int>(
      std::max_element(freq.begin(), freq.end()) - freq.begin());
  const Monomial xv = Monomial::variable(pivot, ideal.vars());

  // Standard monomials split by divisibility by x_pivot:
  //   h_{S/J}(s) = h_{S/(J + (x))}(s) + h_{S/(J : x)}(s - 1).
  std::vector<BigInt> plus = graded_dims_rec(ideal.plus(xv), t_max);
  std::vector<BigInt> colon =
      t_max >= 1 ? graded_dims_rec(ideal.colon(xv), t_max - 1)
                 : std::vector<BigInt>{};
  for (int s = 0; s <= t_max; ++s) {
    out[static_cast<size_t>(s)] = plus[static_cast<size_t>(s)];
    if (s >= 1) out[static_cast<size_t>(s)] += colon[static_cast<size_t>(s) - 1];
  }
  return out;
}

}  // namespace

std::vector<BigInt> graded_piece_dims(const MonomialIdeal& ideal, int t_max) {
  if (t_max < 0) throw InputError("graded_piece_dims: negative degree");
  return graded_dims_rec(ideal, t_max);
}

BigInt graded_piece_dim(const MonomialIdeal& ideal, int t) {
  return graded_piece_dims(ideal, t).back();
}

BigInt hilbert_cumulative(const MonomialIdeal& ideal, int t) {
  if (t < 0) throw InputError("hilbert_cumulative: negative degree");
  ideal.require_proper_nonzero("hilbert_cumulative");
  ideal.require_squarefree("hilbert_cumulative");

  // f[k] = number of faces with k vertices of the complex of I; a face
  // is any subset of [n] containing no generator support.
  const int n = ideal.vars();
  std::vector<VertexSet> supports;
  for (const Monomial& g : ideal.generators()) supports.push_back(g.support());
  std::vector<VertexSet> facets;
  for (const VertexSet& tr : minimal_transversals(n, supports))
    facets.push_back(tr.complement());
  const SimplicialComplex cplx = SimplicialComplex::relaxed(n, facets);
  const std::vector<long long> f = cplx.f_vector();

  // H(t) = sum_{s=0..t} h(s), h(0) = 1, h(s) = sum_k f[k] C(s-1, k-1).
  // Summed in closed form over s: sum_{s=1..t} C(s-1, k-1) = C(t, k).
  BigInt total = 1;
  for (size_t k = 1; k < f.size(); ++k)
    total += BigInt(f[k]) * binomial(t, static_cast<long long>(k));
  return total;
}

BigInt localization_length(const MonomialIdeal& ideal, const MonomialPrime& p) {
  ideal.require_proper_nonzero("localization_length");

  // Invert every variable outside p: generators lose those exponents.
  std::vector<Monomial> local_gens;
  for (const Monomial& g : ideal.generators()) {
    Monomial r = g.restrict_to(p.support);
    if (r.is_one())
      throw NonFiniteLength(
          "localization at a prime not containing the ideal");
    local_gens.push_back(r);
  }
  const MonomialIdeal local(ideal.vars(), std::move(local_gens));

  // Finite length needs a pure power of every p-variable among the minimal
  // generators; the exponent caps the standard monomials in that variable.
  std::vector<int> cap(static_cast<size_t>(ideal.vars()), 0);
  for (int v : p.support.elements()) {
    int c = -1;
    for (const Monomial& g : local.generators())
      if (g.support() == VertexSet::of({v}, ideal.vars())) c = g.exponent(v);
    if (c < 0)
      throw NonFiniteLength("no pure power of x" + std::to_string(v) +
                            " after localization; p is not minimal over the "
                            "ideal");
    cap[static_cast<size_t>(v)] = c;
  }

  // Count monomials in the p-variables below the caps and outside the ideal.
  const std::vector<int> vars = p.support.elements();
  BigInt count = 0;
  std::vector<int> exps(static_cast<size_t>(ideal.vars()), 0);
  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == vars.size()) {
      if (!local.contains(Monomial(exps))) ++count;
      return;
    }
    const int v = vars[idx];
    for (int e = 0; e < cap[static_cast<size_t>(v)]; ++e) {
      exps[static_cast<size_t>(v)] = e;
      self(self, idx + 1);
    }
    exps[static_cast<size_t>(v)] = 0;
  };
  rec(rec, 0);
  return count;
}

BigInt multiplicity(const MonomialIdeal& ideal) {
  ideal.require_proper_nonzero("multiplicity");
  const int d = krull_dimension(ideal);
  const std::vector<MonomialPrime> primes =
      minimal_primes_via_transversals(ideal.radical());
  BigInt e = 0;
  for (const MonomialPrime& p : primes) {
    if (p.dim() != d) continue;
    e += localization_length(ideal, p);
  }
  if (e <= 0) throw InternalBugError("multiplicity must be positive");
  return e;
}

BigInt multiplicity_in_dim(const MonomialIdeal& ideal, int d) {
  const int dim = krull_dimension(ideal);
  if (dim > d)
    throw InputError("multiplicity_in_dim: dimension exceeds the ambient one");
  if (dim < d) return 0;
  return multiplicity(ideal);
}

std::pair<int, BigRational> hilbert_polynomial_leading(
    const MonomialIdeal& ideal) {
  ideal.require_proper_nonzero("hilbert_polynomial_leading");
  const int n = ideal.vars();
  const int d = krull_dimension(ideal);

  // Evaluate the cumulative Hilbert function at d + 2 points safely past
  // stabilization, then take finite differences: for a degree-d polynomial,
  // Delta^d H = d! * leading coefficient and Delta^{d+1} H = 0.
  const int start = n * std::max(ideal.max_generator_degree(), 1) + 1;
  const int t_hi = start + d + 1;
  const std::vector<BigInt> h = graded_piece_dims(ideal, t_hi);
  std::vector<BigInt> values(static_cast<size_t>(d) + 2);
  {
    BigInt acc = 0;
    for (int s = 0; s <= t_hi; ++s) {
      acc += h[static_cast<size_t>(s)];
      if (s >= start) values[static_cast<size_t>(s - start)] = acc;
    }
  }

  for (int step = 0; step < d; ++step)
    for (size_t i = 0; i + 1 < values.size(); ++i)
      values[i] = values[i + 1] - values[i];
  const BigInt dth = values[0];
  const BigInt dp1 = values[1] - values[0];

  if (dp1 != 0)
    throw InterpolationMismatch(
        "cumulative Hilbert function is not a degree-" + std::to_string(d) +
        " polynomial past t=" + std::to_string(start));
  if (dth <= 0)
    throw InterpolationMismatch(
        "interpolated leading coefficient is not positive; degree "
        "disagrees with the Krull dimension");

  BigInt dfact = 1;
  for (int i = 2; i <= d; ++i) dfact *= i;
  return {d, BigRational(dth, dfact)};
}

}  // namespace srdelta
