#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "corpus.hpp"
#include "oracles.hpp"
#include "srdelta/generator.hpp"
#include "srdelta/stanley_reisner.hpp"

using namespace srdelta;

TEST_CASE("exhaustive counts: tiny cases against the brute-force oracle") {
  CHECK(oracles::count_complexes_bruteforce(2) == 1);
  CHECK(oracles::count_complexes_bruteforce(3) == 4);
  CHECK(oracles::count_complexes_bruteforce(4) == 19);
  CHECK(enumerate_complexes(2).size() == 1);
  CHECK(enumerate_complexes(3).size() == 4);
  CHECK(enumerate_complexes(4).size() == 19);
}

TEST_CASE("exhaustive counts: regression constants") {
  // Verified once against the oracle machinery above; frozen thereafter.
  CHECK(testing::exhaustive(5).size() == 179);
  CHECK(testing::exhaustive(6).size() == 16142);
}

TEST_CASE("n=2 emits only the two-point complex") {
  const auto cs = enumerate_complexes(2);
  REQUIRE(cs.size() == 1);
  CHECK(cs[0].facets() == std::vector<VertexSet>{VertexSet::of({0}, 2),
                                                 VertexSet::of({1}, 2)});
}

TEST_CASE("every emitted complex is valid, covering, and non-simplex") {
  for (const SimplicialComplex& cplx : testing::exhaustive_upto(5)) {
    CHECK(cplx.covers_all_vertices());
    // I != (0): more than one facet or a facet smaller than the vertex set.
    const bool is_full_simplex = cplx.facet_count() == 1 &&
                                 cplx.facets()[0].count() == cplx.vertices();
    CHECK_FALSE(is_full_simplex);
    // Round trip through the dictionary.
    CHECK(complex_from_ideal(stanley_reisner_ideal(cplx)) == cplx);
  }
}

TEST_CASE("emitted complexes are pairwise non-isomorphic and canonical") {
  std::set<std::vector<uint32_t>> seen;
  for (const SimplicialComplex& cplx : testing::exhaustive(4)) {
    const std::vector<uint32_t> canon = canonical_facets(cplx);
    // The emitted representative is its own canonical form.
    std::vector<uint32_t> as_masks;
    for (const VertexSet& f : cplx.facets()) as_masks.push_back(f.bits());
    std::sort(as_masks.begin(), as_masks.end());
    CHECK(as_masks == canon);
    CHECK(seen.insert(canon).second);
  }
}

TEST_CASE("canonical form is a relabeling invariant") {
  std::mt19937_64 rng(777);
  for (const SimplicialComplex& cplx : testing::exhaustive(5)) {
    std::vector<int> perm(5);
    for (int i = 0; i < 5; ++i) perm[static_cast<size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<VertexSet> facets;
    for (const VertexSet& f : cplx.facets()) {
      uint32_t bits = 0;
      for (int v : f.elements()) bits |= 1u << perm[static_cast<size_t>(v)];
      facets.emplace_back(bits, 5);
    }
    auto relabeled = SimplicialComplex::from_facets(5, facets);
    REQUIRE(canonical_facets(cplx) == canonical_facets(relabeled));
  }
}

TEST_CASE("canonical ids are readable") {
  auto tri = SimplicialComplex::from_facets(
      3, {VertexSet::of({0, 1}, 3), VertexSet::of({1, 2}, 3),
          VertexSet::of({0, 2}, 3)});
  CHECK(canonical_id(tri) == "01|02|12");
}

TEST_CASE("random sampling is deterministic in the seed") {
  std::mt19937_64 a(12345), b(12345), c(54321);
  const auto sa = sample_complexes(6, 50, a);
  const auto sb = sample_complexes(6, 50, b);
  REQUIRE(sa.size() == sb.size());
  for (size_t i = 0; i < sa.size(); ++i) REQUIRE(sa[i] == sb[i]);
  const auto sc = sample_complexes(6, 50, c);
  bool all_equal = sa.size() == sc.size();
  for (size_t i = 0; all_equal && i < sa.size(); ++i)
    all_equal = sa[i] == sc[i];
  CHECK_FALSE(all_equal);
}

TEST_CASE("random samples cover all vertices and avoid the full simplex") {
  std::mt19937_64 rng(9);
  for (const SimplicialComplex& cplx : sample_complexes(7, 200, rng)) {
    CHECK(cplx.covers_all_vertices());
    const bool is_full_simplex = cplx.facet_count() == 1 &&
                                 cplx.facets()[0].count() == cplx.vertices();
    CHECK_FALSE(is_full_simplex);
    CHECK(complex_from_ideal(stanley_reisner_ideal(cplx)) == cplx);
  }
}

TEST_CASE("sweep config validation") {
  SweepConfig cfg;
  cfg.n_min = 4;
  cfg.n_max = 3;
  CHECK_THROWS_AS(cfg.validate(), InputError);
  cfg = SweepConfig{};
  cfg.n_min = cfg.n_max = 8;
  cfg.mode = SweepMode::kExhaustive;
  CHECK_THROWS_AS(cfg.validate(), InputError);
  CHECK_THROWS_AS(enumerate_complexes(8), InputError);
  cfg.mode = SweepMode::kRandom;
  CHECK_NOTHROW(cfg.validate());
}
