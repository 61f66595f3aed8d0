#include "srdelta/mindist.hpp"

#include <algorithm>
#include <bit>

#include "srdelta/hilbert.hpp"
#include "srdelta/stanley_reisner.hpp"

namespace srdelta {

std::string to_string(DeltaMethod m) {
  switch (m) {
    case DeltaMethod::kFormula: return "formula";
    case DeltaMethod::kMonomialSearch: return "monomial-search";
    case DeltaMethod::kMonomialRestricted: return "monomial-restricted";
    case DeltaMethod::kOracle: return "oracle";
  }
  return "?";
}

namespace {

struct PrimeData {
  std::vector<MonomialPrime> primes;
  std::vector<char> is_top;  // maximal-dimension flag per prime
  int dim = 0;               // dim S/I
  long long degree = 0;      // e(S/I) = number of top primes, radical case
  bool unmixed = false;

  bool is_prime_ideal() const { return primes.size() == 1; }
};

PrimeData analyze(const MonomialIdeal& ideal) {
  ideal.require_proper_nonzero("mindist");
  ideal.require_squarefree("mindist");
  PrimeData pd;
  pd.primes = minimal_primes_via_transversals(ideal);
  pd.dim = 0;
  for (const MonomialPrime& p : pd.primes) pd.dim = std::max(pd.dim, p.dim());
  pd.is_top.resize(pd.primes.size());
  for (size_t i = 0; i < pd.primes.size(); ++i) {
    pd.is_top[i] = pd.primes[i].dim() == pd.dim;
    if (pd.is_top[i]) ++pd.degree;
  }
  pd.unmixed = pd.degree == static_cast<long long>(pd.primes.size());
  return pd;
}

// Faces of the complex of I (supports of square-free monomials outside I),
// including the empty face.
std::vector<uint32_t> faces_of_ideal(const MonomialIdeal& ideal) {
  std::vector<VertexSet> supports;
  for (const Monomial& g : ideal.generators()) supports.push_back(g.support());
  std::vector<VertexSet> facets;
  for (const VertexSet& t : minimal_transversals(ideal.vars(), supports))
    facets.push_back(t.complement());
  return SimplicialComplex::relaxed(ideal.vars(), facets).faces();
}

// For each candidate support size k, the largest number of maximal-dimension
// primes hit by a face of size <= k, and whether any zero-divisor support of
// size <= k exists at all.
struct SupportSearch {
  std::vector<long long> best_top_hits;  // index k, -1 when no candidate
  std::vector<bool> any_candidate;       // index k
};

SupportSearch scan_supports(const MonomialIdeal& ideal, const PrimeData& pd) {
  const int n = ideal.vars();
  SupportSearch s;
  s.best_top_hits.assign(static_cast<size_t>(n) + 1, -1);
  s.any_candidate.assign(static_cast<size_t>(n) + 1, false);

  for (uint32_t face : faces_of_ideal(ideal)) {
    if (face == 0) continue;
    const int k = std::popcount(face);
    long long top_hits = 0;
    bool zero_divisor = false;
    for (size_t i = 0; i < pd.primes.size(); ++i) {
      if ((pd.primes[i].support.bits() & face) != 0) {
        zero_divisor = true;
        if (pd.is_top[i]) ++top_hits;
      }
    }
    if (!zero_divisor) continue;
    s.any_candidate[static_cast<size_t>(k)] = true;
    s.best_top_hits[static_cast<size_t>(k)] =
        std::max(s.best_top_hits[static_cast<size_t>(k)], top_hits);
  }
  // A support realizable in degree k is realizable in every larger degree
  // (pad the exponent of any of its variables).
  for (size_t k = 1; k < s.best_top_hits.size(); ++k) {
    if (s.any_candidate[k - 1]) s.any_candidate[k] = true;
    s.best_top_hits[k] = std::max(s.best_top_hits[k], s.best_top_hits[k - 1]);
  }
  return s;
}

}  // namespace

std::vector<Monomial> zero_divisor_monomials(const MonomialIdeal& ideal, int t) {
  if (t < 1) throw InputError("zero_divisor_monomials: t >= 1 required");
  const PrimeData pd = analyze(ideal);
  std::vector<Monomial> out;
  for (const Monomial& m : monomials_of_degree(ideal.vars(), t)) {
    if (ideal.contains(m)) continue;
    const VertexSet supp = m.support();
    const bool zero_divisor =
        std::any_of(pd.primes.begin(), pd.primes.end(),
                    [&](const MonomialPrime& p) {
                      return supp.intersects(p.support);
                    });
    if (zero_divisor) out.push_back(m);
  }
  return out;
}

DeltaValue delta(const MonomialIdeal& ideal, int t) {
  if (t < 1) throw InputError("delta: t >= 1 required");
  const PrimeData pd = analyze(ideal);

  if (pd.is_prime_ideal())
    return {pd.degree, DeltaMethod::kFormula};

  const SupportSearch s = scan_supports(ideal, pd);
  const size_t k = static_cast<size_t>(std::min(t, ideal.vars()));
  if (!s.any_candidate[k])
    return {pd.degree, DeltaMethod::kFormula};  // F_t empty

  const long long best = std::max(s.best_top_hits[k], 0ll);
  DeltaValue v;
  v.value = pd.degree - best;
  v.method = pd.unmixed ? DeltaMethod::kMonomialSearch
                        : (v.value > 0 ? DeltaMethod::kMonomialRestricted
                                       : DeltaMethod::kMonomialSearch);
  return v;
}

namespace {

// Smallest degree of a monomial in J \ I, for monomial ideals I c J. Any
// minimal-degree member is itself a minimal generator of J (a proper
// multiple of a generator g not in I has larger degree, and multiples of
// generators inside I stay inside I), so it suffices to scan J's minimal
// generators. Returns -1 when J = I.
int min_degree_outside(const MonomialIdeal& j, const MonomialIdeal& i) {
  int best = -1;
  for (const Monomial& g : j.generators()) {
    if (i.contains(g)) continue;
    if (best < 0 || g.degree() < best) best = g.degree();
  }
  return best;
}

}  // namespace

int r_index_mixed(const MonomialIdeal& ideal) {
  const PrimeData pd = analyze(ideal);
  if (pd.unmixed) throw NotMixed("r_index_mixed: ideal is unmixed");

  std::vector<MonomialPrime> top;
  for (size_t i = 0; i < pd.primes.size(); ++i)
    if (pd.is_top[i]) top.push_back(pd.primes[i]);
  const MonomialIdeal j1 = intersect_primes(top);
  const int r = min_degree_outside(j1, ideal);
  if (r < 0)
    throw InternalBugError("mixed ideal equals the intersection of its "
                           "top-dimensional primes");
  return r;
}

int r_index_unmixed(const MonomialIdeal& ideal) {
  const PrimeData pd = analyze(ideal);
  if (!pd.unmixed) throw InputError("r_index_unmixed: ideal is mixed");
  if (pd.is_prime_ideal()) return 1;  // constant profile, stabilized at once

  int best = -1;
  for (size_t drop = 0; drop < pd.primes.size(); ++drop) {
    std::vector<MonomialPrime> kept;
    for (size_t i = 0; i < pd.primes.size(); ++i)
      if (i != drop) kept.push_back(pd.primes[i]);
    const MonomialIdeal ji = intersect_primes(kept);
    const int r = min_degree_outside(ji, ideal);
    if (r < 0)
      throw InternalBugError(
          "dropping a minimal prime did not enlarge the intersection");
    if (best < 0 || r < best) best = r;
  }
  return best;
}

long long stable_value(const MonomialIdeal& ideal) {
  const PrimeData pd = analyze(ideal);
  // Monomial primes all have e(S/p) = 1, so the unmixed limit min e(S/p)
  // is 1; mixed ideals decay to 0.
  return pd.unmixed ? 1 : 0;
}

DeltaProfile delta_profile(const MonomialIdeal& ideal, int t_max) {
  const PrimeData pd = analyze(ideal);
  DeltaProfile profile;
  profile.unmixed = pd.unmixed;
  profile.constant_profile = pd.is_prime_ideal();
  profile.r_index = pd.unmixed ? r_index_unmixed(ideal) : r_index_mixed(ideal);
  profile.stable_value =
      profile.constant_profile ? pd.degree : stable_value(ideal);

  const int t_end = std::max(t_max, profile.r_index + 2);
  for (int t = 1; t <= t_end; ++t) profile.values[t] = delta(ideal, t);

  // Cross-validation: non-increasing, and the empirical stabilization point
  // equals the closed-form index.
  long long prev = -1;
  int empirical = -1;
  for (const auto& [t, dv] : profile.values) {
    if (prev >= 0 && dv.value > prev)
      throw CrossValidationMismatch(
          "delta increased from " + std::to_string(prev) + " to " +
          std::to_string(dv.value) + " at t=" + std::to_string(t) + " for " +
          ideal.str());
    prev = dv.value;
    if (empirical < 0 && dv.value == profile.stable_value) empirical = t;
    if (empirical >= 0 && dv.value != profile.stable_value)
      throw CrossValidationMismatch("delta left its stable value at t=" +
                                    std::to_string(t) + " for " + ideal.str());
  }
  if (empirical != profile.r_index)
    throw CrossValidationMismatch(
        "empirical stabilization at t=" + std::to_string(empirical) +
        " but closed form gives r=" + std::to_string(profile.r_index) +
        " for " + ideal.str());
  return profile;
}

long long oracle_delta_forms(const MonomialIdeal& ideal, int t, int q) {
  if (q != 2 && q != 3)
    throw InputError("oracle_delta_forms: q must be 2 or 3");
  if (t < 1) throw InputError("oracle_delta_forms: t >= 1 required");
  const PrimeData pd = analyze(ideal);
  if (!pd.unmixed)
    throw MixedInputUnsupported(
        "oracle_delta_forms: only unmixed ideals are supported");
  if (pd.primes.size() > 64)
    throw InputError("oracle_delta_forms: more than 64 minimal primes");

  const std::vector<Monomial> monomials = monomials_of_degree(ideal.vars(), t);
  const int m_count = static_cast<int>(monomials.size());
  if (m_count > 16)
    throw TooManyMonomials("oracle_delta_forms: " + std::to_string(m_count) +
                           " degree-" + std::to_string(t) +
                           " monomials exceed the enumeration bound of 16");

  // Per-monomial data: membership in I and the mask of primes containing it.
  std::vector<char> outside(static_cast<size_t>(m_count));
  std::vector<uint64_t> prime_mask(static_cast<size_t>(m_count), 0);
  for (int j = 0; j < m_count; ++j) {
    outside[static_cast<size_t>(j)] =
        !ideal.contains(monomials[static_cast<size_t>(j)]);
    const VertexSet supp = monomials[static_cast<size_t>(j)].support();
    for (size_t i = 0; i < pd.primes.size(); ++i)
      if (supp.intersects(pd.primes[i].support))
        prime_mask[static_cast<size_t>(j)] |= 1ull << i;
  }
  const uint64_t all_primes = pd.primes.size() == 64
                                  ? ~0ull
                                  : (1ull << pd.primes.size()) - 1;

  // Walk every nonzero coefficient vector c in F_q^M. A form lies in a
  // monomial prime exactly when each of its supporting monomials does, and
  // lies outside I exactly when some supporting monomial does. A
  // dimension-preserving zero divisor f leaves e(S/(I,f)) = #{ primes
  // containing f }; unmixed input makes every zero divisor dimension
  // preserving with all localization lengths one.
  std::vector<int> digits(static_cast<size_t>(m_count), 0);
  long long best = -1;
  while (true) {
    // Increment the base-q odometer.
    int pos = 0;
    while (pos < m_count && digits[static_cast<size_t>(pos)] == q - 1) {
      digits[static_cast<size_t>(pos)] = 0;
      ++pos;
    }
    if (pos == m_count) break;
    digits[static_cast<size_t>(pos)]++;

    uint64_t in_all = all_primes;
    bool not_in_ideal = false;
    for (int j = 0; j < m_count; ++j) {
      if (digits[static_cast<size_t>(j)] == 0) continue;
      in_all &= prime_mask[static_cast<size_t>(j)];
      if (outside[static_cast<size_t>(j)]) not_in_ideal = true;
    }
    if (!not_in_ideal || in_all == 0) continue;  // f in I, or not a zero divisor
    best = std::max(best, static_cast<long long>(std::popcount(in_all)));
  }

  if (best < 0) return pd.degree;  // F_t empty
  return pd.degree - best;
}

}  // namespace srdelta
