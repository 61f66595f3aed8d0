// Shared test corpora: canonical complexes per vertex count, cached across
// test cases, plus a deterministic random-ideal source for the double-entry
// checks.

#ifndef SRDELTA_TESTS_CORPUS_HPP
#define SRDELTA_TESTS_CORPUS_HPP

#include <map>
#include <random>
#include <vector>

#include "srdelta/generator.hpp"
#include "srdelta/monomial.hpp"
#include "srdelta/simplicial_complex.hpp"

namespace srdelta::testing {

inline const std::vector<SimplicialComplex>& exhaustive(int n) {
  static std::map<int, std::vector<SimplicialComplex>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_complexes(n)).first;
  return it->second;
}

// Canonical complexes for every vertex count in [2, n_max].
inline std::vector<SimplicialComplex> exhaustive_upto(int n_max) {
  std::vector<SimplicialComplex> out;
  for (int n = 2; n <= n_max; ++n)
    for (const SimplicialComplex& c : exhaustive(n)) out.push_back(c);
  return out;
}

// Random monomial ideal (not necessarily square-free), proper and nonzero.
inline MonomialIdeal random_ideal(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n_dist(2, 6);
  const int n = n_dist(rng);
  std::uniform_int_distribution<int> count_dist(1, 6);
  std::uniform_int_distribution<int> exp_dist(0, 3);
  while (true) {
    std::vector<Monomial> gens;
    const int count = count_dist(rng);
    for (int i = 0; i < count; ++i) {
      std::vector<int> exps(static_cast<size_t>(n), 0);
      int deg = 0;
      for (int v = 0; v < n; ++v) deg += exps[static_cast<size_t>(v)] = exp_dist(rng);
      if (deg == 0) continue;
      gens.emplace_back(exps);
    }
    MonomialIdeal ideal(n, gens);
    if (!ideal.is_zero() && !ideal.is_unit()) return ideal;
  }
}

}  // namespace srdelta::testing

#endif  // SRDELTA_TESTS_CORPUS_HPP
