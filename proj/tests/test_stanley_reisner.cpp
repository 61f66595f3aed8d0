#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "srdelta/stanley_reisner.hpp"

using namespace srdelta;

namespace {

SimplicialComplex hollow_triangle() {
  return SimplicialComplex::from_facets(
      3, {VertexSet::of({0, 1}, 3), VertexSet::of({1, 2}, 3),
          VertexSet::of({0, 2}, 3)});
}

}  // namespace

TEST_CASE("stanley-reisner ideal of the worked examples") {
  CHECK(stanley_reisner_ideal(hollow_triangle()) ==
        MonomialIdeal(3, {Monomial({1, 1, 1})}));

  auto path = SimplicialComplex::from_facets(
      3, {VertexSet::of({0, 2}, 3), VertexSet::of({1, 2}, 3)});
  CHECK(stanley_reisner_ideal(path) == MonomialIdeal(3, {Monomial({1, 1, 0})}));

  auto full = SimplicialComplex::from_facets(3, {VertexSet::of({0, 1, 2}, 3)});
  CHECK_THROWS_AS(stanley_reisner_ideal(full), ZeroOrUnitIdeal);
}

TEST_CASE("stanley-reisner generators match the subset-scan oracle") {
  for (const SimplicialComplex& cplx : testing::exhaustive_upto(5)) {
    const MonomialIdeal ideal = stanley_reisner_ideal(cplx);
    std::vector<uint32_t> got;
    for (const Monomial& g : ideal.generators())
      got.push_back(g.support().bits());
    std::sort(got.begin(), got.end());
    CHECK(got == oracles::minimal_nonfaces_bruteforce(cplx));
    for (const Monomial& g : ideal.generators()) CHECK(g.is_squarefree());
  }
}

TEST_CASE("complex <-> ideal round trip is the identity") {
  for (const SimplicialComplex& cplx : testing::exhaustive_upto(5)) {
    const MonomialIdeal ideal = stanley_reisner_ideal(cplx);
    CHECK(complex_from_ideal(ideal) == cplx);
  }
}

TEST_CASE("complex_from_ideal validates input") {
  CHECK_THROWS_AS(complex_from_ideal(MonomialIdeal::zero(3)), ZeroOrUnitIdeal);
  CHECK_THROWS_AS(complex_from_ideal(MonomialIdeal(2, {Monomial({2, 0})})),
                  NonSquareFreeInput);
  // x0 as a generator kills vertex 0: reject by default, reindex on request.
  MonomialIdeal with_var(3, {Monomial({1, 0, 0}), Monomial({0, 1, 1})});
  CHECK_THROWS_AS(complex_from_ideal(with_var), IsolatedVertexPolicyViolation);
  auto reindexed = complex_from_ideal(with_var, VertexPolicy::kReindex);
  CHECK(reindexed.vertices() == 2);
}

TEST_CASE("minimal primes of the worked examples") {
  auto primes_of = [](const MonomialIdeal& ideal) {
    std::vector<VertexSet> s;
    for (const MonomialPrime& p : minimal_primes(ideal)) s.push_back(p.support);
    return s;
  };

  MonomialIdeal tri(3, {Monomial({1, 1, 1})});
  CHECK(primes_of(tri) == std::vector<VertexSet>{VertexSet::of({0}, 3),
                                                 VertexSet::of({1}, 3),
                                                 VertexSet::of({2}, 3)});

  MonomialIdeal mixed(3, {Monomial({1, 1, 0}), Monomial({1, 0, 1})});
  CHECK(primes_of(mixed) == std::vector<VertexSet>{VertexSet::of({0}, 3),
                                                   VertexSet::of({1, 2}, 3)});

  MonomialIdeal edge(3, {Monomial({1, 1, 0})});
  CHECK(primes_of(edge) == std::vector<VertexSet>{VertexSet::of({0}, 3),
                                                  VertexSet::of({1}, 3)});
}

TEST_CASE("both minimal-prime routes agree with each other and the oracle") {
  std::mt19937_64 rng(2024);
  std::vector<SimplicialComplex> corpus = testing::exhaustive_upto(5);
  for (const SimplicialComplex& c : sample_complexes(6, 120, rng))
    corpus.push_back(c);
  for (const SimplicialComplex& c : sample_complexes(7, 120, rng))
    corpus.push_back(c);

  for (const SimplicialComplex& cplx : corpus) {
    const MonomialIdeal ideal = stanley_reisner_ideal(cplx);
    const auto via_facets = minimal_primes_via_facets(ideal);
    const auto via_transversals = minimal_primes_via_transversals(ideal);
    REQUIRE(via_facets == via_transversals);

    std::vector<VertexSet> got;
    for (const MonomialPrime& p : via_transversals) got.push_back(p.support);
    CHECK(got == oracles::minimal_primes_bruteforce(ideal));

    // One prime per facet.
    CHECK(via_facets.size() == static_cast<size_t>(cplx.facet_count()));
  }
}

TEST_CASE("intersect_primes on the worked examples") {
  std::vector<MonomialPrime> two = {MonomialPrime(VertexSet::of({0}, 3)),
                                    MonomialPrime(VertexSet::of({1}, 3))};
  CHECK(intersect_primes(two) == MonomialIdeal(3, {Monomial({1, 1, 0})}));

  std::vector<MonomialPrime> split = {MonomialPrime(VertexSet::of({0}, 3)),
                                      MonomialPrime(VertexSet::of({1, 2}, 3))};
  CHECK(intersect_primes(split) ==
        MonomialIdeal(3, {Monomial({1, 1, 0}), Monomial({1, 0, 1})}));

  std::vector<MonomialPrime> one = {MonomialPrime(VertexSet::of({0}, 3))};
  CHECK(intersect_primes(one) == MonomialIdeal(3, {Monomial({1, 0, 0})}));

  CHECK_THROWS_AS(intersect_primes({}), EmptyInput);
}

TEST_CASE("radical decomposition: intersecting the minimal primes returns I") {
  std::mt19937_64 rng(99);
  std::vector<SimplicialComplex> corpus = testing::exhaustive_upto(5);
  for (const SimplicialComplex& c : sample_complexes(6, 150, rng))
    corpus.push_back(c);
  for (const SimplicialComplex& c : sample_complexes(7, 150, rng))
    corpus.push_back(c);

  for (const SimplicialComplex& cplx : corpus) {
    const MonomialIdeal ideal = stanley_reisner_ideal(cplx);
    CHECK(intersect_primes(minimal_primes(ideal)) == ideal);

    // And the generator list agrees with the square-free-member oracle.
    std::vector<VertexSet> prime_supports;
    for (const MonomialPrime& p : minimal_primes(ideal))
      prime_supports.push_back(p.support);
    std::vector<VertexSet> expected = oracles::intersect_primes_bruteforce(
        prime_supports, ideal.vars());
    std::vector<VertexSet> got;
    for (const Monomial& g : ideal.generators()) got.push_back(g.support());
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
  }
}
