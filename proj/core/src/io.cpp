#include "srdelta/io.hpp"

#include <fstream>
#include <sstream>

#include "srdelta/stanley_reisner.hpp"

namespace srdelta {

namespace {

std::string strip(const std::string& line) {
  std::string s = line;
  if (const size_t hash = s.find('#'); hash != std::string::npos)
    s.resize(hash);
  const size_t first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const size_t last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// "0,1,2" -> vertex set; rejects anything else.
VertexSet parse_index_set(const std::string& text, int n, int line_no) {
  uint32_t bits = 0;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = pos;
    while (end < text.size() && text[end] >= '0' && text[end] <= '9') ++end;
    if (end == pos)
      throw ParseError(line_no, "expected a vertex index, found '" +
                                    text.substr(pos) + "'");
    long v = -1;
    try {
      v = std::stol(text.substr(pos, end - pos));
    } catch (const std::exception&) {
      throw ParseError(line_no, "vertex index out of range");
    }
    if (v < 0 || v >= n)
      throw ParseError(line_no, "vertex " + std::to_string(v) +
                                    " out of range for n=" + std::to_string(n));
    bits |= 1u << v;
    pos = end;
    if (pos < text.size()) {
      if (text[pos] != ',')
        throw ParseError(line_no, std::string("expected ',' , found '") +
                                      text[pos] + "'");
      ++pos;
      if (pos == text.size())
        throw ParseError(line_no, "trailing ',' in index list");
    }
  }
  if (bits == 0) throw ParseError(line_no, "empty index list");
  return VertexSet(bits, n);
}

}  // namespace

ParsedInput parse_input(std::istream& in, VertexPolicy policy) {
  std::string line;
  int line_no = 0;

  // Header.
  int n = -1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string s = strip(line);
    if (s.empty()) continue;
    if (s.rfind("n=", 0) != 0)
      throw ParseError(line_no, "expected header 'n=<int>'");
    try {
      size_t used = 0;
      const long value = std::stol(s.substr(2), &used);
      if (used != s.size() - 2)
        throw ParseError(line_no, "trailing characters after n=<int>");
      if (value < 1 || value > kMaxVertices)
        throw ParseError(line_no, "n must be between 1 and 32");
      n = static_cast<int>(value);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError(line_no, "cannot parse vertex count in '" + s + "'");
    }
    break;
  }
  if (n < 0) throw ParseError(line_no, "missing header 'n=<int>'");

  bool ideal_mode = false;
  std::vector<VertexSet> sets;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string s = strip(line);
    if (s.empty()) continue;
    if (s == "ideal") {
      if (ideal_mode || !sets.empty())
        throw ParseError(line_no, "'ideal' must come before any facet line");
      ideal_mode = true;
      continue;
    }
    sets.push_back(parse_index_set(s, n, line_no));
  }
  if (sets.empty())
    throw ParseError(line_no, ideal_mode ? "ideal block has no generators"
                                         : "no facet lines");

  ParsedInput out;
  if (ideal_mode) {
    out.ideal = MonomialIdeal::squarefree(n, sets);
    out.ideal.require_proper_nonzero("input ideal");
    out.complex = complex_from_ideal(out.ideal, policy);
  } else {
    out.complex = SimplicialComplex::from_facets(n, sets, policy);
    out.ideal = stanley_reisner_ideal(out.complex);
  }
  return out;
}

ParsedInput parse_input_file(const std::string& path, VertexPolicy policy) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  return parse_input(in, policy);
}

}  // namespace srdelta
