#ifndef SRDELTA_HOMOLOGY_HPP
#define SRDELTA_HOMOLOGY_HPP

#include <vector>

#include "srdelta/exact_linalg.hpp"
#include "srdelta/field.hpp"
#include "srdelta/simplicial_complex.hpp"

namespace srdelta {

// Augmented (reduced) simplicial chain complex of a face list. Chain group
// index c counts vertices, so c = 0 is spanned by the empty face and the
// boundary map boundary[c] sends c-vertex faces to (c-1)-vertex faces.
// Orientation: vertices in increasing order, signs alternate by position.
struct ChainComplexMatrices {
  std::vector<std::vector<uint32_t>> faces_by_card;  // index c = cardinality
  std::vector<IntMatrix> boundary;  // boundary[c] : C_c -> C_{c-1}, c >= 1

  static ChainComplexMatrices build(const std::vector<uint32_t>& faces);
};

// Reduced Betti numbers over a fixed coefficient field, indexed from -1
// (the empty complex {emptyset} has betti(-1) = 1 and nothing else).
struct HomologyRanks {
  FieldDescriptor field;
  int top_dim = -2;          // dim of the complex; -2 for the void complex
  std::vector<int> reduced;  // reduced[i + 1] = betti_i, i = -1..top_dim

  int betti(int i) const {
    const int idx = i + 1;
    if (idx < 0 || idx >= static_cast<int>(reduced.size())) return 0;
    return reduced[static_cast<size_t>(idx)];
  }
  bool trivial() const {
    for (int b : reduced)
      if (b != 0) return false;
    return true;
  }
};

// Reduced homology ranks of a complex (relaxed complexes welcome: links and
// induced subcomplexes may miss vertices). Exact arithmetic: fraction-free
// elimination over Z for the rationals, modular elimination for F_p.
HomologyRanks reduced_homology(const SimplicialComplex& cplx,
                               const FieldDescriptor& field);

// Same, from a pre-enumerated face list (sorted by cardinality not
// required). Lets Hochster-style scans reuse one face enumeration.
HomologyRanks reduced_homology_of_faces(const std::vector<uint32_t>& faces,
                                        const FieldDescriptor& field);

// Faces of cplx contained in W. May be the empty complex {emptyset} (W
// misses every vertex) but never void for non-void input.
SimplicialComplex induced_subcomplex(const SimplicialComplex& cplx,
                                     const VertexSet& w);

// link(sigma) = { tau : tau disjoint from sigma, tau U sigma a face }.
// Throws NotAFace when sigma is not a face.
SimplicialComplex link(const SimplicialComplex& cplx, const VertexSet& sigma);

}  // namespace srdelta

#endif  // SRDELTA_HOMOLOGY_HPP
