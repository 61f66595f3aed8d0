#ifndef SRDELTA_REGULARITY_HPP
#define SRDELTA_REGULARITY_HPP

#include "srdelta/field.hpp"
#include "srdelta/simplicial_complex.hpp"

namespace srdelta {

// Castelnuovo-Mumford regularity of the Stanley-Reisner ring S/I_Delta over
// the given field, by Hochster's formula:
//
//   reg(S/I_Delta) = max{ i : betti~_{i-1}(Delta|_W; K) != 0 for some subset
//                         W of the vertices },
//
// maximizing over all 2^n induced subcomplexes. The W = {} term contributes
// 0 (betti~_{-1} of the empty complex), so the result is >= 0, and >= 1 for
// any ideal generated in degrees >= 2.
//
// Accepts relaxed complexes (missing vertices allowed); requires I != (0),
// i.e. the complex must not be the full simplex on its vertex support.
int regularity(const SimplicialComplex& cplx, const FieldDescriptor& field);

}  // namespace srdelta

#endif  // SRDELTA_REGULARITY_HPP
