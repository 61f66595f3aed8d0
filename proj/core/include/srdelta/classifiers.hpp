#ifndef SRDELTA_CLASSIFIERS_HPP
#define SRDELTA_CLASSIFIERS_HPP

#include <optional>
#include <vector>

#include "srdelta/field.hpp"
#include "srdelta/simplicial_complex.hpp"

namespace srdelta {

bool is_pure(const SimplicialComplex& cplx);

// Shellability is defined for pure complexes only; non-pure input is
// reported as kNotPure rather than false.
enum class ShellabilityStatus { kShellable, kNotShellable, kNotPure };

struct ShellabilityResult {
  ShellabilityStatus status = ShellabilityStatus::kNotPure;
  // Facet ordering witnessing shellability, when found.
  std::optional<std::vector<VertexSet>> shelling;
};

// Backtracking search for a shelling order. Each placement step uses the
// facet-pair criterion: sigma_i can follow the placed set when for every
// placed sigma_j there is a placed sigma_k with |sigma_i \ sigma_k| = 1 and
// sigma_i n sigma_j c sigma_i n sigma_k. Failed placed-sets are memoized
// (whether an ordering can be completed depends only on the set).
ShellabilityResult shellability(const SimplicialComplex& cplx);

// Strict variant: throws NotPure on non-pure input.
bool is_shellable(const SimplicialComplex& cplx);

// Definition-level recheck of a shelling order: every prefix intersection
// complex closure(sigma_i) n (union of closures of predecessors) must be
// pure of dimension dim - 1. Used to validate witnesses independently of
// the search.
bool verify_shelling_order(const SimplicialComplex& cplx,
                           const std::vector<VertexSet>& order);

// Reisner's criterion: K[Delta] is Cohen-Macaulay over K iff for every face
// sigma (including the empty one) the link has vanishing reduced homology
// below its dimension.
bool is_cohen_macaulay(const SimplicialComplex& cplx,
                       const FieldDescriptor& field);

// Restriction of Delta to its core vertices (those whose star is not all of
// Delta, i.e. some facet misses them). The core of a full simplex is the
// empty complex.
SimplicialComplex core_complex(const SimplicialComplex& cplx);

// Stanley's criterion on the core: K[Delta] is Gorenstein over K iff for
// every face sigma of Gamma = core(Delta), the link of sigma in Gamma is a
// K-homology sphere: reduced betti 1 in its dimension and 0 below.
bool is_gorenstein(const SimplicialComplex& cplx, const FieldDescriptor& field);

}  // namespace srdelta

#endif  // SRDELTA_CLASSIFIERS_HPP
