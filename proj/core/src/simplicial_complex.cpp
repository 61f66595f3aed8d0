#include "srdelta/simplicial_complex.hpp"

#include <algorithm>
#include <unordered_set>

namespace srdelta {

namespace {

// Deduplicate and keep only inclusion-maximal sets.
std::vector<VertexSet> reduce_to_maximal(std::vector<VertexSet> facets) {
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  std::vector<VertexSet> out;
  for (const VertexSet& f : facets) {
    bool dominated = false;
    for (const VertexSet& g : facets) {
      if (!(g == f) && f.subset_of(g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(f);
  }
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(int n,
                                                 std::vector<VertexSet> facets,
                                                 VertexPolicy policy) {
  if (n < 1 || n > kMaxVertices)
    throw VertexOutOfRange("vertex count n=" + std::to_string(n));
  if (facets.empty()) throw EmptyInput("complex needs at least one facet");
  for (const VertexSet& f : facets) {
    if (f.ambient() != n)
      throw VertexOutOfRange("facet " + f.str() + " has ambient " +
                             std::to_string(f.ambient()) + ", expected " +
                             std::to_string(n));
    if (f.is_empty())
      throw EmptyInput("empty facet in input (the empty complex is not a "
                       "valid strict input)");
  }

  facets = reduce_to_maximal(std::move(facets));

  uint32_t covered = 0;
  for (const VertexSet& f : facets) covered |= f.bits();
  const uint32_t all = VertexSet::full(n).bits();
  if (covered != all) {
    if (policy == VertexPolicy::kReject) {
      VertexSet missing(all & ~covered, n);
      throw IsolatedVertexPolicyViolation(
          "vertices " + missing.str() +
          " are not in any facet; pass the reindex policy to shrink the "
          "ambient vertex set");
    }
    // Reindex onto the spanned vertices, preserving relative order.
    std::vector<int> new_index(static_cast<size_t>(n), -1);
    int m = 0;
    for (int v = 0; v < n; ++v)
      if ((covered >> v) & 1u) new_index[static_cast<size_t>(v)] = m++;
    std::vector<VertexSet> remapped;
    remapped.reserve(facets.size());
    for (const VertexSet& f : facets) {
      uint32_t bits = 0;
      for (int v : f.elements()) bits |= 1u << new_index[static_cast<size_t>(v)];
      remapped.emplace_back(bits, m);
    }
    std::sort(remapped.begin(), remapped.end());
    return SimplicialComplex(m, std::move(remapped));
  }

  return SimplicialComplex(n, std::move(facets));
}

SimplicialComplex SimplicialComplex::relaxed(int n,
                                             std::vector<VertexSet> facets) {
  if (n < 0 || n > kMaxVertices)
    throw VertexOutOfRange("vertex count n=" + std::to_string(n));
  return SimplicialComplex(n, reduce_to_maximal(std::move(facets)));
}

bool SimplicialComplex::covers_all_vertices() const {
  return vertex_support().count() == n_;
}

int SimplicialComplex::dim() const {
  if (facets_.empty()) return -2;
  int d = -1;
  for (const VertexSet& f : facets_) d = std::max(d, f.count() - 1);
  return d;
}

VertexSet SimplicialComplex::vertex_support() const {
  uint32_t bits = 0;
  for (const VertexSet& f : facets_) bits |= f.bits();
  return VertexSet(bits, n_);
}

bool SimplicialComplex::is_face(const VertexSet& sigma) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const VertexSet& f) { return sigma.subset_of(f); });
}

std::vector<uint32_t> SimplicialComplex::faces() const {
  std::unordered_set<uint32_t> seen;
  for (const VertexSet& f : facets_) {
    // Enumerate all submasks of the facet, including 0.
    uint32_t bits = f.bits();
    uint32_t sub = bits;
    while (true) {
      seen.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & bits;
    }
  }
  std::vector<uint32_t> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](uint32_t a, uint32_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca < cb;
    return a < b;
  });
  return out;
}

std::vector<long long> SimplicialComplex::f_vector() const {
  std::vector<long long> f(static_cast<size_t>(std::max(dim() + 2, 0)), 0);
  for (uint32_t face : faces()) f[static_cast<size_t>(std::popcount(face))]++;
  return f;
}

std::string SimplicialComplex::str() const {
  if (is_void()) return "void";
  std::string s = "<";
  for (size_t i = 0; i < facets_.size(); ++i) {
    if (i) s += ", ";
    s += facets_[i].str();
  }
  return s + ">";
}

}  // namespace srdelta
