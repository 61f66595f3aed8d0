#ifndef SRDELTA_SIMPLICIAL_COMPLEX_HPP
#define SRDELTA_SIMPLICIAL_COMPLEX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "srdelta/vertex_set.hpp"

namespace srdelta {

// What to do with an input whose facets do not cover every vertex of the
// ambient set. The default rejects: silently dropping a vertex changes the
// ambient polynomial ring and every invariant computed from it.
enum class VertexPolicy {
  kReject,
  kReindex,  // shrink the ambient set to the spanned vertices
};

// Simplicial complex on vertices 0..n-1, stored as its facet list
// (inclusion-maximal faces). Strict complexes contain every singleton {v} as
// a face; links, induced subcomplexes and cores are "relaxed" complexes that
// may miss vertices, and the empty complex {emptyset} is the single facet
// list [ {} ]. A void complex (no faces at all) is the empty facet list.
// Immutable after construction.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  // Validating factory for user input: deduplicates, drops non-maximal
  // facets, and enforces the vertex cover condition per `policy`.
  static SimplicialComplex from_facets(int n, std::vector<VertexSet> facets,
                                       VertexPolicy policy = VertexPolicy::kReject);

  // Internal factory: still reduces to maximal faces, but performs no vertex
  // cover check. Used for links, induced subcomplexes and cores.
  static SimplicialComplex relaxed(int n, std::vector<VertexSet> facets);

  int vertices() const { return n_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  int facet_count() const { return static_cast<int>(facets_.size()); }

  bool is_void() const { return facets_.empty(); }
  bool is_empty_complex() const {
    return facets_.size() == 1 && facets_[0].is_empty();
  }
  // Faces on exactly the full vertex set, i.e. the complex of a proper
  // nonzero Stanley-Reisner ideal plus the full simplex.
  bool covers_all_vertices() const;

  // dim = max |facet| - 1; the empty complex has dim -1, the void complex
  // reports -2.
  int dim() const;

  // Union of the facets.
  VertexSet vertex_support() const;

  bool is_face(const VertexSet& sigma) const;

  // Every face, as bitmasks sorted by (cardinality, value). Includes the
  // empty face whenever the complex is non-void. Cost is proportional to the
  // number of faces, which is exponential in dim; fine at survey scale.
  std::vector<uint32_t> faces() const;

  // f[k] = number of faces with k vertices (f[0] = 1 for the empty face).
  std::vector<long long> f_vector() const;

  std::string str() const;

  friend bool operator==(const SimplicialComplex& a,
                         const SimplicialComplex& b) {
    return a.n_ == b.n_ && a.facets_ == b.facets_;
  }

 private:
  SimplicialComplex(int n, std::vector<VertexSet> facets)
      : n_(n), facets_(std::move(facets)) {}

  int n_ = 0;
  std::vector<VertexSet> facets_;  // sorted by (cardinality, value)
};

}  // namespace srdelta

#endif  // SRDELTA_SIMPLICIAL_COMPLEX_HPP
