#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "srdelta/hilbert.hpp"

namespace srdelta::oracles {

std::vector<uint32_t> minimal_nonfaces_bruteforce(
    const SimplicialComplex& cplx) {
  const int n = cplx.vertices();
  std::vector<uint32_t> out;
  for (uint32_t s = 1; s < (1u << n); ++s) {
    const VertexSet sigma(s, n);
    if (cplx.is_face(sigma)) continue;
    bool minimal = true;
    for (uint32_t b = s; b != 0; b &= b - 1) {
      const uint32_t sub = s & ~(b & ~(b - 1));
      if (!cplx.is_face(VertexSet(sub, n))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> minimal_primes_bruteforce(const MonomialIdeal& ideal) {
  const int n = ideal.vars();
  std::vector<uint32_t> containing;
  for (uint32_t s = 1; s < (1u << n); ++s) {
    bool contains_all = true;
    for (const Monomial& g : ideal.generators())
      if ((g.support().bits() & s) == 0) {
        contains_all = false;
        break;
      }
    if (contains_all) containing.push_back(s);
  }
  std::vector<VertexSet> out;
  for (uint32_t s : containing) {
    bool minimal = true;
    for (uint32_t t : containing)
      if (t != s && (t & ~s) == 0) {
        minimal = false;
        break;
      }
    if (minimal) out.emplace_back(s, n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> intersect_primes_bruteforce(
    const std::vector<VertexSet>& prime_supports, int n) {
  std::vector<uint32_t> members;
  for (uint32_t s = 1; s < (1u << n); ++s) {
    bool in_all = true;
    for (const VertexSet& p : prime_supports)
      if ((p.bits() & s) == 0) {
        in_all = false;
        break;
      }
    if (in_all) members.push_back(s);
  }
  std::vector<VertexSet> out;
  for (uint32_t s : members) {
    bool minimal = true;
    for (uint32_t t : members)
      if (t != s && (t & ~s) == 0) {
        minimal = false;
        break;
      }
    if (minimal) out.emplace_back(s, n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long standard_monomial_count(const MonomialIdeal& ideal, int t) {
  long long count = 0;
  for (int s = 0; s <= t; ++s)
    for (const Monomial& m : monomials_of_degree(ideal.vars(), s))
      if (!ideal.contains(m)) ++count;
  return count;
}

long long delta_bruteforce(const MonomialIdeal& ideal, int t) {
  const int d = krull_dimension(ideal);
  const BigInt e = multiplicity(ideal);
  BigInt best = -1;
  for (const Monomial& m : monomials_of_degree(ideal.vars(), t)) {
    if (ideal.contains(m)) continue;
    if (ideal.colon(m) == ideal) continue;  // not a zero divisor
    best = std::max(best, multiplicity_in_dim(ideal.plus(m), d));
  }
  if (best < 0) return static_cast<long long>(e);  // F_t empty
  return static_cast<long long>(e - best);
}

int min_degree_gap_bruteforce(const MonomialIdeal& inner,
                              const MonomialIdeal& outer, int t_limit) {
  for (int t = 1; t <= t_limit; ++t)
    if (graded_piece_dim(inner, t) > graded_piece_dim(outer, t)) return t;
  return -1;
}

int r_index_bruteforce(const MonomialIdeal& ideal, int t_limit) {
  // Stable value from the structure of the minimal primes alone.
  const std::vector<VertexSet> primes_supports = [&] {
    std::vector<VertexSet> s;
    for (const VertexSet& p : minimal_primes_bruteforce(ideal)) s.push_back(p);
    return s;
  }();
  int max_dim = 0;
  for (const VertexSet& p : primes_supports)
    max_dim = std::max(max_dim, ideal.vars() - p.count());
  bool unmixed = true;
  for (const VertexSet& p : primes_supports)
    if (ideal.vars() - p.count() != max_dim) unmixed = false;
  const long long stable =
      primes_supports.size() == 1
          ? delta_bruteforce(ideal, 1)  // prime: constant profile
          : (unmixed ? 1 : 0);

  for (int t = 1; t <= t_limit; ++t)
    if (delta_bruteforce(ideal, t) == stable) return t;
  return -1;
}

namespace {

bool shelling_order_ok(const std::vector<uint32_t>& order, int d) {
  // closure(sigma_i) n (U_{j<i} closure(sigma_j)) is pure of dim d-1 iff
  // every maximal pairwise meet sigma_i n sigma_j has exactly d vertices.
  for (size_t i = 1; i < order.size(); ++i) {
    std::vector<uint32_t> meets;
    for (size_t j = 0; j < i; ++j) meets.push_back(order[i] & order[j]);
    for (uint32_t m : meets) {
      bool maximal = true;
      for (uint32_t o : meets)
        if (o != m && (m & ~o) == 0) maximal = false;
      if (maximal && std::popcount(m) != d) return false;
    }
  }
  return true;
}

}  // namespace

bool shellable_bruteforce(const SimplicialComplex& cplx) {
  std::vector<uint32_t> order;
  for (const VertexSet& f : cplx.facets()) order.push_back(f.bits());
  std::sort(order.begin(), order.end());
  const int d = cplx.dim();
  do {
    if (shelling_order_ok(order, d)) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

long long count_complexes_bruteforce(int n) {
  // Every labeled antichain of nonempty proper subsets covering [n],
  // deduplicated by the smallest facet list over all n! relabelings.
  const uint32_t full = (1u << n) - 1u;
  std::vector<int> perm_base(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) perm_base[static_cast<size_t>(v)] = v;

  std::set<std::vector<uint32_t>> classes;
  std::vector<uint32_t> chosen;
  auto canonical = [&](const std::vector<uint32_t>& facets) {
    std::vector<uint32_t> best;
    std::vector<int> perm = perm_base;
    do {
      std::vector<uint32_t> mapped;
      for (uint32_t f : facets) {
        uint32_t m = 0;
        for (uint32_t b = f; b != 0; b &= b - 1)
          m |= 1u << perm[static_cast<size_t>(std::countr_zero(b))];
        mapped.push_back(m);
      }
      std::sort(mapped.begin(), mapped.end());
      if (best.empty() || mapped < best) best = mapped;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };

  auto rec = [&](auto&& self, uint32_t min_next) -> void {
    {
      uint32_t covered = 0;
      for (uint32_t f : chosen) covered |= f;
      if (covered == full && !chosen.empty()) classes.insert(canonical(chosen));
    }
    for (uint32_t f = min_next; f < full; ++f) {
      bool ok = f != 0;
      for (uint32_t g : chosen)
        if ((f & ~g) == 0 || (g & ~f) == 0) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(f);
      self(self, f + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 1);
  return static_cast<long long>(classes.size());
}

}  // namespace srdelta::oracles
