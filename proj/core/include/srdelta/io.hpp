#ifndef SRDELTA_IO_HPP
#define SRDELTA_IO_HPP

#include <iosfwd>
#include <string>

#include "srdelta/monomial.hpp"
#include "srdelta/simplicial_complex.hpp"

namespace srdelta {

// Parsed input: a complex and its Stanley-Reisner ideal, whichever way the
// file specified it.
//
// Grammar (one object per file, '#' starts a comment, blank lines ignored):
//
//   file       = header (facet_line+ | ideal_block)
//   header     = "n=" INT
//   facet_line = INT ("," INT)*          ; one facet per line
//   ideal_block= "ideal" gen_line+
//   gen_line   = INT ("," INT)*          ; one square-free generator support
//
// Anything else, including trailing garbage on a line, is a ParseError with
// the offending line number.
struct ParsedInput {
  SimplicialComplex complex;
  MonomialIdeal ideal;
};

ParsedInput parse_input(std::istream& in,
                        VertexPolicy policy = VertexPolicy::kReject);
ParsedInput parse_input_file(const std::string& path,
                             VertexPolicy policy = VertexPolicy::kReject);

}  // namespace srdelta

#endif  // SRDELTA_IO_HPP
