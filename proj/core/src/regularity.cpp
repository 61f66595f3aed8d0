#include "srdelta/regularity.hpp"

#include <algorithm>
#include <bit>

#include "srdelta/homology.hpp"

namespace srdelta {

int regularity(const SimplicialComplex& cplx, const FieldDescriptor& field) {
  const int n = cplx.vertices();
  if (cplx.is_void())
    throw InputError("regularity: void complex has no Stanley-Reisner ring");
  const VertexSet span = cplx.vertex_support();
  for (const VertexSet& f : cplx.facets())
    if (f == span)
      throw ZeroOrUnitIdeal("regularity: full simplex has ideal (0)");

  // One face enumeration, filtered per W.
  const std::vector<uint32_t> all_faces = cplx.faces();

  int reg = 0;
  const uint32_t span_bits = span.bits();
  std::vector<uint32_t> sub;
  // Walk the submasks of the vertex support; W outside it adds nothing.
  uint32_t w = 0;
  while (true) {
    // Delta|_W is not the full simplex on W, so its homology sits in
    // dimension <= |W| - 2 and W can contribute at most |W| - 1.
    if (std::popcount(w) - 1 > reg) {
      sub.clear();
      for (uint32_t f : all_faces)
        if ((f & ~w) == 0) sub.push_back(f);
      HomologyRanks h = reduced_homology_of_faces(sub, field);
      for (int i = h.top_dim; i >= -1; --i) {
        if (h.betti(i) != 0) {
          reg = std::max(reg, i + 1);
          break;
        }
      }
    }
    if (w == span_bits) break;
    w = (w - span_bits) & span_bits;
  }
  return reg;
}

}  // namespace srdelta
