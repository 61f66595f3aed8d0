#include "srdelta/classifiers.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "srdelta/homology.hpp"

namespace srdelta {

bool is_pure(const SimplicialComplex& cplx) {
  const auto& facets = cplx.facets();
  if (facets.empty()) return true;
  const int c = facets.front().count();
  return std::all_of(facets.begin(), facets.end(),
                     [c](const VertexSet& f) { return f.count() == c; });
}

namespace {

// Can `candidate` extend the placed facet set? Facet-pair criterion.
bool can_place(const std::vector<uint32_t>& facets, uint64_t placed,
               uint32_t candidate) {
  const int c = std::popcount(candidate);
  for (uint64_t rest = placed; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    const uint32_t meet_j = candidate & facets[static_cast<size_t>(j)];
    bool covered = false;
    for (uint64_t r2 = placed; r2 != 0; r2 &= r2 - 1) {
      const int k = std::countr_zero(r2);
      const uint32_t meet_k = candidate & facets[static_cast<size_t>(k)];
      if (std::popcount(meet_k) == c - 1 && (meet_j & ~meet_k) == 0) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace

ShellabilityResult shellability(const SimplicialComplex& cplx) {
  ShellabilityResult result;
  if (!is_pure(cplx)) {
    result.status = ShellabilityStatus::kNotPure;
    return result;
  }
  const int count = cplx.facet_count();
  if (count > 63)
    throw InputError("shellability: more than 63 facets is out of scope");
  std::vector<uint32_t> facets;
  facets.reserve(static_cast<size_t>(count));
  for (const VertexSet& f : cplx.facets()) facets.push_back(f.bits());

  if (count <= 1) {
    result.status = ShellabilityStatus::kShellable;
    result.shelling = cplx.facets();
    return result;
  }

  std::unordered_set<uint64_t> dead;  // placed-sets with no completion
  std::vector<int> order;
  order.reserve(static_cast<size_t>(count));

  auto dfs = [&](auto&& self, uint64_t placed, uint32_t covered) -> bool {
    if (static_cast<int>(order.size()) == count) return true;
    if (dead.count(placed)) return false;

    // Candidates, most-overlapping-first.
    std::vector<std::pair<int, int>> ranked;  // (-overlap, index)
    for (int i = 0; i < count; ++i) {
      if ((placed >> i) & 1ull) continue;
      ranked.emplace_back(-std::popcount(facets[static_cast<size_t>(i)] & covered), i);
    }
    std::sort(ranked.begin(), ranked.end());
    for (const auto& [neg_overlap, i] : ranked) {
      if (placed != 0 && !can_place(facets, placed, facets[static_cast<size_t>(i)]))
        continue;
      order.push_back(i);
      if (self(self, placed | (1ull << i), covered | facets[static_cast<size_t>(i)]))
        return true;
      order.pop_back();
    }
    dead.insert(placed);
    return false;
  };

  if (dfs(dfs, 0, 0)) {
    result.status = ShellabilityStatus::kShellable;
    std::vector<VertexSet> witness;
    witness.reserve(order.size());
    for (int i : order) witness.push_back(cplx.facets()[static_cast<size_t>(i)]);
    result.shelling = std::move(witness);
  } else {
    result.status = ShellabilityStatus::kNotShellable;
  }
  return result;
}

bool is_shellable(const SimplicialComplex& cplx) {
  if (!is_pure(cplx)) throw NotPure("is_shellable: complex is not pure");
  return shellability(cplx).status == ShellabilityStatus::kShellable;
}

bool verify_shelling_order(const SimplicialComplex& cplx,
                           const std::vector<VertexSet>& order) {
  if (!is_pure(cplx)) return false;
  if (order.size() != cplx.facets().size()) return false;
  {
    std::vector<VertexSet> a = order, b = cplx.facets();
    std::sort(a.begin(), a.end());
    if (a != b) return false;
  }
  const int d = cplx.dim();

  // closure(sigma_i) n (U_{j<i} closure(sigma_j)) has the sets
  // sigma_i n sigma_j as its generating faces; purity of dimension d-1
  // means every maximal one has exactly d vertices.
  for (size_t i = 1; i < order.size(); ++i) {
    std::vector<uint32_t> meets;
    for (size_t j = 0; j < i; ++j)
      meets.push_back(order[i].bits() & order[j].bits());
    for (uint32_t m : meets) {
      bool maximal = true;
      for (uint32_t other : meets)
        if (other != m && (m & ~other) == 0) maximal = false;
      if (maximal && std::popcount(m) != d) return false;
    }
  }
  return true;
}

bool is_cohen_macaulay(const SimplicialComplex& cplx,
                       const FieldDescriptor& field) {
  const int n = cplx.vertices();
  for (uint32_t face : cplx.faces()) {
    const SimplicialComplex lk = link(cplx, VertexSet(face, n));
    const HomologyRanks h = reduced_homology(lk, field);
    for (int i = -1; i < lk.dim(); ++i)
      if (h.betti(i) != 0) return false;
  }
  return true;
}

SimplicialComplex core_complex(const SimplicialComplex& cplx) {
  const int n = cplx.vertices();
  uint32_t core = 0;
  for (int v = 0; v < n; ++v) {
    if (!cplx.is_face(VertexSet::of({v}, n))) continue;  // not a vertex of it
    const bool cone_point =
        std::all_of(cplx.facets().begin(), cplx.facets().end(),
                    [v](const VertexSet& f) { return f.contains(v); });
    if (!cone_point) core |= 1u << v;
  }
  return induced_subcomplex(cplx, VertexSet(core, n));
}

bool is_gorenstein(const SimplicialComplex& cplx,
                   const FieldDescriptor& field) {
  const SimplicialComplex gamma = core_complex(cplx);
  const int n = gamma.vertices();
  for (uint32_t face : gamma.faces()) {
    const SimplicialComplex lk = link(gamma, VertexSet(face, n));
    const HomologyRanks h = reduced_homology(lk, field);
    const int top = lk.dim();
    if (h.betti(top) != 1) return false;
    for (int i = -1; i < top; ++i)
      if (h.betti(i) != 0) return false;
  }
  return true;
}

}  // namespace srdelta
