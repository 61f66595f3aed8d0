#include "srdelta/homology.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

namespace srdelta {

ChainComplexMatrices ChainComplexMatrices::build(
    const std::vector<uint32_t>& faces) {
  ChainComplexMatrices cc;
  if (faces.empty()) return cc;

  int max_card = 0;
  for (uint32_t f : faces) max_card = std::max(max_card, std::popcount(f));
  cc.faces_by_card.assign(static_cast<size_t>(max_card) + 1, {});
  for (uint32_t f : faces)
    cc.faces_by_card[static_cast<size_t>(std::popcount(f))].push_back(f);
  for (auto& level : cc.faces_by_card) std::sort(level.begin(), level.end());

  // Index maps per level for column/row lookup.
  std::vector<std::unordered_map<uint32_t, int>> index(cc.faces_by_card.size());
  for (size_t c = 0; c < cc.faces_by_card.size(); ++c)
    for (size_t i = 0; i < cc.faces_by_card[c].size(); ++i)
      index[c][cc.faces_by_card[c][i]] = static_cast<int>(i);

  cc.boundary.assign(cc.faces_by_card.size(), IntMatrix());
  for (size_t c = 1; c < cc.faces_by_card.size(); ++c) {
    const auto& cur = cc.faces_by_card[c];
    const auto& below = cc.faces_by_card[c - 1];
    IntMatrix d(static_cast<int>(below.size()), static_cast<int>(cur.size()));
    for (size_t j = 0; j < cur.size(); ++j) {
      const uint32_t face = cur[j];
      int pos = 0;
      for (uint32_t b = face; b != 0; b &= b - 1, ++pos) {
        const uint32_t v = b & ~(b - 1);
        const uint32_t sub = face & ~v;
        auto it = index[c - 1].find(sub);
        // In a downward-closed face list the subface always exists.
        if (it == index[c - 1].end())
          throw InternalBugError("chain complex: missing subface");
        d.at(it->second, static_cast<int>(j)) = (pos % 2 == 0) ? 1 : -1;
      }
    }
    cc.boundary[c] = std::move(d);
  }
  return cc;
}

namespace {

int rank_of(const IntMatrix& m, const FieldDescriptor& field) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (field.kind == FieldDescriptor::Kind::kRationals) return rank_over_q(m);
  return rank_mod_p(m, field.p);
}

}  // namespace

HomologyRanks reduced_homology_of_faces(const std::vector<uint32_t>& faces,
                                        const FieldDescriptor& field) {
  if (field.kind == FieldDescriptor::Kind::kPrime)
    FieldDescriptor::prime(field.p);  // validates

  HomologyRanks out;
  out.field = field;
  if (faces.empty()) {
    out.top_dim = -2;
    return out;
  }

  ChainComplexMatrices cc = ChainComplexMatrices::build(faces);
  const int levels = static_cast<int>(cc.faces_by_card.size());  // max card + 1
  out.top_dim = levels - 2;  // dim = max cardinality - 1
  out.reduced.assign(static_cast<size_t>(levels), 0);

  std::vector<int> rank(static_cast<size_t>(levels) + 1, 0);
  for (int c = 1; c < levels; ++c) rank[static_cast<size_t>(c)] = rank_of(cc.boundary[static_cast<size_t>(c)], field);

  for (int c = 0; c < levels; ++c) {
    const int dim_c = static_cast<int>(cc.faces_by_card[static_cast<size_t>(c)].size());
    // betti_{c-1} = dim ker d_c - rank d_{c+1}
    const int kernel = dim_c - rank[static_cast<size_t>(c)];
    const int b = kernel - (c + 1 < static_cast<int>(rank.size())
                                ? rank[static_cast<size_t>(c) + 1]
                                : 0);
    if (b < 0) throw InternalBugError("negative Betti number");
    out.reduced[static_cast<size_t>(c)] = b;
  }

#ifndef NDEBUG
  // Reduced Euler characteristic consistency on every call:
  // sum_c (-1)^c f_c = sum_c (-1)^c betti_{c-1} over chain-group index c.
  {
    long long chi_f = 0, chi_b = 0;
    for (int c = 0; c < levels; ++c) {
      const long long sign = (c % 2 == 0) ? 1 : -1;
      chi_f += sign * static_cast<long long>(
                          cc.faces_by_card[static_cast<size_t>(c)].size());
      chi_b += sign * out.reduced[static_cast<size_t>(c)];
    }
    if (chi_f != chi_b)
      throw InternalBugError("Euler characteristic mismatch in homology");
  }
#endif
  return out;
}

HomologyRanks reduced_homology(const SimplicialComplex& cplx,
                               const FieldDescriptor& field) {
  return reduced_homology_of_faces(cplx.faces(), field);
}

SimplicialComplex induced_subcomplex(const SimplicialComplex& cplx,
                                     const VertexSet& w) {
  std::vector<VertexSet> facets;
  facets.reserve(cplx.facets().size());
  for (const VertexSet& f : cplx.facets()) facets.push_back(f.intersect(w));
  return SimplicialComplex::relaxed(cplx.vertices(), std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& cplx, const VertexSet& sigma) {
  if (!cplx.is_face(sigma))
    throw NotAFace("link: " + sigma.str() + " is not a face");
  std::vector<VertexSet> facets;
  for (const VertexSet& f : cplx.facets())
    if (sigma.subset_of(f)) facets.push_back(f.difference(sigma));
  return SimplicialComplex::relaxed(cplx.vertices(), std::move(facets));
}

}  // namespace srdelta
