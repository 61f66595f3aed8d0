#ifndef SRDELTA_GENERATOR_HPP
#define SRDELTA_GENERATOR_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "srdelta/field.hpp"
#include "srdelta/simplicial_complex.hpp"

namespace srdelta {

// Canonical labeled form of a complex under vertex relabeling: the
// lexicographically smallest sorted facet-bitmask list over the relabelings
// that respect the per-vertex invariant classes (facet-degree profiles by
// facet size). Isomorphic complexes share the invariant classes, so they
// share the canonical form. Avoids full n! scans on class-asymmetric
// complexes, which is nearly all of them.
std::vector<uint32_t> canonical_facets(const SimplicialComplex& cplx);

// Compact id string for reports: canonical facets with vertices as base-32
// digits, e.g. "01|02|12" for the hollow triangle.
std::string canonical_id(const SimplicialComplex& cplx);

// Every complex on exactly n vertices with I != (0) -- facet antichains
// covering all n vertices, other than the full simplex -- up to isomorphism,
// in a deterministic order. Exponential in n; n <= 7 enforced.
std::vector<SimplicialComplex> enumerate_complexes(int n);

// Seeded random complexes on exactly n vertices: rejection sampling of facet
// antichains built from uniform k-subsets (k < n, so I != (0) always), until
// the facets cover every vertex. Duplicates across draws are allowed.
std::vector<SimplicialComplex> sample_complexes(int n, int count,
                                                std::mt19937_64& rng);

enum class SweepMode { kExhaustive, kRandom };

struct SweepConfig {
  int n_min = 3;
  int n_max = 3;
  SweepMode mode = SweepMode::kExhaustive;
  int samples = 100;          // per n, random mode only
  uint64_t seed = 0;          // fully determines random mode output
  std::vector<FieldDescriptor> fields = {FieldDescriptor::prime(2)};
  std::string out_path;       // empty: stdout only

  void validate() const;
};

}  // namespace srdelta

#endif  // SRDELTA_GENERATOR_HPP
