#include "srdelta/stanley_reisner.hpp"

#include <algorithm>
#include <unordered_set>

namespace srdelta {

std::vector<VertexSet> minimal_transversals(
    int n, const std::vector<VertexSet>& family) {
  for (const VertexSet& s : family)
    if (s.is_empty()) return {};  // nothing can meet the empty set

  // Drop non-minimal members; the transversals only depend on the minimal
  // ones.
  std::vector<uint32_t> sets;
  {
    std::vector<VertexSet> reduced;
    for (const VertexSet& s : family) {
      bool dominated = false;
      for (const VertexSet& t : family)
        if (!(t == s) && (t.subset_of(s))) {
          dominated = true;
          break;
        }
      if (!dominated) reduced.push_back(s);
    }
    std::sort(reduced.begin(), reduced.end());
    reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
    sets.reserve(reduced.size());
    for (const VertexSet& s : reduced) sets.push_back(s.bits());
  }

  std::vector<uint32_t> covers;
  std::vector<uint32_t> stack;
  // Branch on the elements of the first unhit set. Every complete branch is
  // an irredundant cover; a final minimality filter removes the rest.
  auto rec = [&](auto&& self, uint32_t current) -> void {
    uint32_t unhit = 0;
    bool all_hit = true;
    for (uint32_t s : sets) {
      if ((s & current) == 0) {
        unhit = s;
        all_hit = false;
        break;
      }
    }
    if (all_hit) {
      covers.push_back(current);
      return;
    }
    for (uint32_t b = unhit; b != 0; b &= b - 1) {
      uint32_t v = b & ~(b - 1);
      self(self, current | v);
    }
  };
  rec(rec, 0u);

  std::sort(covers.begin(), covers.end());
  covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  std::vector<VertexSet> out;
  for (uint32_t c : covers) {
    bool minimal = true;
    for (uint32_t d : covers) {
      if (d != c && (d & ~c) == 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.emplace_back(c, n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& cplx) {
  const int n = cplx.vertices();
  std::vector<uint32_t> face_list = cplx.faces();
  std::unordered_set<uint32_t> faces(face_list.begin(), face_list.end());

  // A minimal non-face is sigma = tau + v with tau a face and every proper
  // subset of sigma a face. Candidates therefore come from face x vertex
  // pairs; this never touches the 2^n non-face bulk.
  std::unordered_set<uint32_t> minimal_nonfaces;
  for (uint32_t tau : face_list) {
    for (int v = 0; v < n; ++v) {
      if ((tau >> v) & 1u) continue;
      uint32_t sigma = tau | (1u << v);
      if (faces.count(sigma)) continue;
      bool all_proper_subsets_faces = true;
      for (uint32_t b = sigma; b != 0; b &= b - 1) {
        uint32_t removed = sigma & ~(b & ~(b - 1));
        if (!faces.count(removed)) {
          all_proper_subsets_faces = false;
          break;
        }
      }
      if (all_proper_subsets_faces) minimal_nonfaces.insert(sigma);
    }
  }

  if (minimal_nonfaces.empty())
    throw ZeroOrUnitIdeal(
        "stanley_reisner_ideal: the full simplex has ideal (0)");

  std::vector<VertexSet> supports;
  supports.reserve(minimal_nonfaces.size());
  for (uint32_t s : minimal_nonfaces) supports.emplace_back(s, n);
  return MonomialIdeal::squarefree(n, supports);
}

SimplicialComplex complex_from_ideal(const MonomialIdeal& ideal,
                                     VertexPolicy policy) {
  ideal.require_proper_nonzero("complex_from_ideal");
  ideal.require_squarefree("complex_from_ideal");
  const int n = ideal.vars();

  // Faces are the independent sets of the generator-support hypergraph; the
  // facets are the complements of the minimal transversals.
  std::vector<VertexSet> supports;
  supports.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) supports.push_back(g.support());

  std::vector<VertexSet> facets;
  for (const VertexSet& t : minimal_transversals(n, supports))
    facets.push_back(t.complement());
  return SimplicialComplex::from_facets(n, std::move(facets), policy);
}

std::vector<MonomialPrime> minimal_primes_via_facets(const MonomialIdeal& ideal) {
  SimplicialComplex cplx = complex_from_ideal(ideal, VertexPolicy::kReject);
  std::vector<MonomialPrime> primes;
  primes.reserve(cplx.facets().size());
  for (const VertexSet& f : cplx.facets())
    primes.emplace_back(f.complement());
  std::sort(primes.begin(), primes.end());
  return primes;
}

std::vector<MonomialPrime> minimal_primes_via_transversals(
    const MonomialIdeal& ideal) {
  ideal.require_proper_nonzero("minimal_primes");
  ideal.require_squarefree("minimal_primes");
  std::vector<VertexSet> supports;
  supports.reserve(ideal.generators().size());
  for (const Monomial& g : ideal.generators()) supports.push_back(g.support());
  std::vector<MonomialPrime> primes;
  for (const VertexSet& t : minimal_transversals(ideal.vars(), supports))
    primes.emplace_back(t);
  std::sort(primes.begin(), primes.end());
  return primes;
}

std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal) {
  // The transversal route tolerates ideals whose complex misses vertices
  // (x_v in I), which the facet route rejects; use it as the primary path.
  return minimal_primes_via_transversals(ideal);
}

MonomialIdeal intersect_primes(const std::vector<MonomialPrime>& primes) {
  if (primes.empty())
    throw EmptyInput("intersect_primes: empty prime list");
  const int n = primes.front().support.ambient();
  std::vector<VertexSet> supports;
  supports.reserve(primes.size());
  for (const MonomialPrime& p : primes) {
    if (p.support.ambient() != n)
      throw InputError("intersect_primes: mixed ambient sizes");
    supports.push_back(p.support);
  }
  return MonomialIdeal::squarefree(n, minimal_transversals(n, supports));
}

}  // namespace srdelta
