#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "srdelta/homology.hpp"

using namespace srdelta;

namespace {

const FieldDescriptor kQ = FieldDescriptor::rationals();
const FieldDescriptor kF2 = FieldDescriptor::prime(2);

SimplicialComplex hollow_triangle() {
  return SimplicialComplex::from_facets(
      3, {VertexSet::of({0, 1}, 3), VertexSet::of({1, 2}, 3),
          VertexSet::of({0, 2}, 3)});
}

}  // namespace

TEST_CASE("boundary of boundary vanishes") {
  for (const SimplicialComplex& cplx : testing::exhaustive_upto(5)) {
    const ChainComplexMatrices cc = ChainComplexMatrices::build(cplx.faces());
    for (size_t c = 2; c < cc.boundary.size(); ++c) {
      const IntMatrix& hi = cc.boundary[c];
      const IntMatrix& lo = cc.boundary[c - 1];
      for (int i = 0; i < lo.rows; ++i)
        for (int j = 0; j < hi.cols; ++j) {
          BigInt acc = 0;
          for (int k = 0; k < hi.rows; ++k) acc += lo.at(i, k) * hi.at(k, j);
          REQUIRE(acc == 0);
        }
    }
  }
}

TEST_CASE("betti numbers of the worked examples") {
  const HomologyRanks tri = reduced_homology(hollow_triangle(), kQ);
  CHECK(tri.betti(-1) == 0);
  CHECK(tri.betti(0) == 0);
  CHECK(tri.betti(1) == 1);

  auto edges = SimplicialComplex::from_facets(
      4, {VertexSet::of({0, 1}, 4), VertexSet::of({2, 3}, 4)});
  const HomologyRanks two = reduced_homology(edges, kQ);
  CHECK(two.betti(0) == 1);
  CHECK(two.betti(1) == 0);

  auto full = SimplicialComplex::from_facets(3, {VertexSet::of({0, 1, 2}, 3)});
  CHECK(reduced_homology(full, kQ).trivial());
  CHECK(reduced_homology(full, kF2).trivial());
  CHECK(reduced_homology(full, FieldDescriptor::prime(7)).trivial());
}

TEST_CASE("empty and void complexes") {
  auto empty = SimplicialComplex::relaxed(3, {VertexSet::empty(3)});
  const HomologyRanks h = reduced_homology(empty, kQ);
  CHECK(h.betti(-1) == 1);
  CHECK(h.top_dim == -1);

  auto void_complex = SimplicialComplex::relaxed(3, {});
  CHECK(reduced_homology(void_complex, kQ).trivial());
}

TEST_CASE("unsupported fields are rejected") {
  CHECK_THROWS_AS(FieldDescriptor::prime(4), UnsupportedField);
  CHECK_THROWS_AS(FieldDescriptor::prime(1 << 16), UnsupportedField);
  CHECK_THROWS_AS(reduced_homology(hollow_triangle(),
                                   FieldDescriptor{FieldDescriptor::Kind::kPrime, 9}),
                  UnsupportedField);
}

TEST_CASE("euler characteristic consistency") {
  // sum (-1)^i f_i = 1 + sum (-1)^i betti~_i over the whole small corpus.
  for (const SimplicialComplex& cplx : testing::exhaustive_upto(5)) {
    const std::vector<long long> f = cplx.f_vector();
    long long chi = 0;
    for (size_t k = 1; k < f.size(); ++k)
      chi += (k % 2 == 1 ? 1 : -1) * f[k];
    const HomologyRanks h = reduced_homology(cplx, kF2);
    long long chi_b = 1;  // from betti~_{-1} sign convention
    for (int i = -1; i <= h.top_dim; ++i)
      chi_b += (i % 2 == 0 ? 1 : -1) * h.betti(i);
    CHECK(chi == chi_b);
  }
}

TEST_CASE("rationals and F2 agree on torsion-free sizes") {
  // No torsion is reachable on <= 5 vertices, so the ranks must coincide.
  for (const SimplicialComplex& cplx : testing::exhaustive_upto(5)) {
    const HomologyRanks hq = reduced_homology(cplx, kQ);
    const HomologyRanks h2 = reduced_homology(cplx, kF2);
    REQUIRE(hq.reduced == h2.reduced);
  }
}

TEST_CASE("induced subcomplex") {
  const SimplicialComplex tri = hollow_triangle();
  auto edge = induced_subcomplex(tri, VertexSet::of({0, 1}, 3));
  CHECK(edge.facets() == std::vector<VertexSet>{VertexSet::of({0, 1}, 3)});

  CHECK(induced_subcomplex(tri, VertexSet::full(3)) == tri);

  auto nothing = induced_subcomplex(tri, VertexSet::empty(3));
  CHECK(nothing.is_empty_complex());
}

TEST_CASE("links") {
  const SimplicialComplex tri = hollow_triangle();
  auto lk0 = link(tri, VertexSet::of({0}, 3));
  CHECK(lk0.facets() == std::vector<VertexSet>{VertexSet::of({1}, 3),
                                               VertexSet::of({2}, 3)});
  CHECK(link(tri, VertexSet::empty(3)) == tri);

  auto full = SimplicialComplex::from_facets(3, {VertexSet::of({0, 1, 2}, 3)});
  auto lk01 = link(full, VertexSet::of({0, 1}, 3));
  CHECK(lk01.facets() == std::vector<VertexSet>{VertexSet::of({2}, 3)});

  CHECK_THROWS_AS(link(tri, VertexSet::of({0, 1, 2}, 3)), NotAFace);
}

TEST_CASE("spheres have one top betti number") {
  // Octahedron boundary: the 2-sphere as the join of three 0-spheres.
  std::vector<VertexSet> facets;
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) facets.push_back(VertexSet::of({a, b, c}, 6));
  auto octa = SimplicialComplex::from_facets(6, facets);
  for (const FieldDescriptor& f : {kQ, kF2, FieldDescriptor::prime(3)}) {
    const HomologyRanks h = reduced_homology(octa, f);
    CHECK(h.betti(2) == 1);
    CHECK(h.betti(1) == 0);
    CHECK(h.betti(0) == 0);
  }
}

TEST_CASE("projective plane separates fields") {
  // 6-vertex triangulation of the real projective plane (antipodal quotient
  // of the icosahedron): 2-torsion makes F2 see ranks the rationals do not.
  std::vector<VertexSet> facets = {
      VertexSet::of({0, 1, 2}, 6), VertexSet::of({0, 2, 3}, 6),
      VertexSet::of({0, 3, 4}, 6), VertexSet::of({0, 4, 5}, 6),
      VertexSet::of({0, 1, 5}, 6), VertexSet::of({1, 2, 4}, 6),
      VertexSet::of({2, 4, 5}, 6), VertexSet::of({2, 3, 5}, 6),
      VertexSet::of({1, 3, 5}, 6), VertexSet::of({1, 3, 4}, 6)};
  auto rp2 = SimplicialComplex::from_facets(6, facets);
  const HomologyRanks hq = reduced_homology(rp2, kQ);
  CHECK(hq.betti(1) == 0);
  CHECK(hq.betti(2) == 0);
  const HomologyRanks h2 = reduced_homology(rp2, kF2);
  CHECK(h2.betti(1) == 1);
  CHECK(h2.betti(2) == 1);
  const HomologyRanks h3 = reduced_homology(rp2, FieldDescriptor::prime(3));
  CHECK(h3.betti(1) == 0);
  CHECK(h3.betti(2) == 0);
}
