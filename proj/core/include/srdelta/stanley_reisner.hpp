#ifndef SRDELTA_STANLEY_REISNER_HPP
#define SRDELTA_STANLEY_REISNER_HPP

#include <vector>

#include "srdelta/monomial.hpp"
#include "srdelta/simplicial_complex.hpp"

namespace srdelta {

// Minimal transversals of a family of vertex sets: the inclusion-minimal
// sets meeting every member of the family. The workhorse behind minimal
// primes, prime intersections and the ideal -> complex direction.
// An empty family has the single transversal {} ; a family containing the
// empty set has none.
std::vector<VertexSet> minimal_transversals(int n,
                                            const std::vector<VertexSet>& family);

// Stanley-Reisner ideal of a complex: generated by the products x^sigma over
// the minimal non-faces sigma. Throws ZeroOrUnitIdeal for the full simplex
// (its ideal is (0)).
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& cplx);

// Inverse direction: the complex whose faces are the supports of square-free
// monomials outside I. Requires square-free proper nonzero I. If some
// variable x_v is itself a generator, vertex v is not a face and the vertex
// policy decides (reject by default, reindex on request).
SimplicialComplex complex_from_ideal(const MonomialIdeal& ideal,
                                     VertexPolicy policy = VertexPolicy::kReject);

// Minimal primes of a square-free monomial ideal. Computed two independent
// ways -- complements of the facets of the associated complex, and minimal
// transversals of the generator supports -- which must agree.
std::vector<MonomialPrime> minimal_primes(const MonomialIdeal& ideal);

// The two individual routes, exposed for cross-checking.
std::vector<MonomialPrime> minimal_primes_via_facets(const MonomialIdeal& ideal);
std::vector<MonomialPrime> minimal_primes_via_transversals(
    const MonomialIdeal& ideal);

// Intersection of monomial primes as a square-free monomial ideal: the
// generators are the minimal transversals of the prime supports.
MonomialIdeal intersect_primes(const std::vector<MonomialPrime>& primes);

}  // namespace srdelta

#endif  // SRDELTA_STANLEY_REISNER_HPP
