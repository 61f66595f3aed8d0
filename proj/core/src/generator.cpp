#include "srdelta/generator.hpp"

#include <algorithm>
#include <bit>
#include <bitset>
#include <map>
#include <unordered_set>

namespace srdelta {

namespace {

// Remap a facet bitmask through a vertex permutation (perm[v] = new label).
uint32_t remap(uint32_t mask, const std::vector<int>& perm) {
  uint32_t out = 0;
  for (uint32_t b = mask; b != 0; b &= b - 1)
    out |= 1u << perm[static_cast<size_t>(std::countr_zero(b))];
  return out;
}

}  // namespace

std::vector<uint32_t> canonical_facets(const SimplicialComplex& cplx) {
  const int n = cplx.vertices();
  std::vector<uint32_t> masks;
  masks.reserve(cplx.facets().size());
  for (const VertexSet& f : cplx.facets()) masks.push_back(f.bits());

  // Per-vertex invariant: how many facets of each cardinality contain it.
  // Relabelings may only move a vertex within its invariant class; the
  // classes themselves are ordered by invariant value.
  std::vector<std::vector<int>> profile(static_cast<size_t>(n),
                                        std::vector<int>(static_cast<size_t>(n) + 1, 0));
  for (uint32_t m : masks) {
    const int c = std::popcount(m);
    for (uint32_t b = m; b != 0; b &= b - 1)
      profile[static_cast<size_t>(std::countr_zero(b))][static_cast<size_t>(c)]++;
  }

  std::vector<int> order(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return profile[static_cast<size_t>(a)] < profile[static_cast<size_t>(b)];
  });

  // Class blocks: consecutive vertices in `order` with equal profiles.
  std::vector<std::pair<int, int>> blocks;  // [begin, end) into order
  for (int i = 0; i < n;) {
    int j = i + 1;
    while (j < n && profile[static_cast<size_t>(order[static_cast<size_t>(j)])] ==
                        profile[static_cast<size_t>(order[static_cast<size_t>(i)])])
      ++j;
    blocks.emplace_back(i, j);
    i = j;
  }

  std::vector<uint32_t> best;
  std::vector<int> perm(static_cast<size_t>(n), 0);
  std::vector<uint32_t> candidate(masks.size());

  // Permute within each block, in block order; perm[old vertex] = new index.
  auto try_assignment = [&]() {
    for (size_t i = 0; i < masks.size(); ++i) candidate[i] = remap(masks[i], perm);
    std::sort(candidate.begin(), candidate.end());
    if (best.empty() || candidate < best) best = candidate;
  };
  auto rec = [&](auto&& self, size_t block_idx) -> void {
    if (block_idx == blocks.size()) {
      try_assignment();
      return;
    }
    auto [lo, hi] = blocks[block_idx];
    std::vector<int> members(order.begin() + lo, order.begin() + hi);
    std::sort(members.begin(), members.end());
    do {
      for (int i = lo; i < hi; ++i)
        perm[static_cast<size_t>(members[static_cast<size_t>(i - lo)])] = i;
      self(self, block_idx + 1);
    } while (std::next_permutation(members.begin(), members.end()));
  };
  rec(rec, 0);
  return best;
}

std::string canonical_id(const SimplicialComplex& cplx) {
  static const char digits[] = "0123456789abcdefghijklmnopqrstuv";
  std::string id;
  bool first = true;
  for (uint32_t mask : canonical_facets(cplx)) {
    if (!first) id += "|";
    first = false;
    for (uint32_t b = mask; b != 0; b &= b - 1)
      id += digits[std::countr_zero(b)];
    if (mask == 0) id += "-";
  }
  return id;
}

std::vector<SimplicialComplex> enumerate_complexes(int n) {
  if (n < 1 || n > 7)
    throw InputError("exhaustive enumeration requires 1 <= n <= 7");

  // Candidate facets: nonempty proper subsets of [n]. The full set is only
  // an antichain on its own (the full simplex), which has ideal (0).
  const uint32_t full = (1u << n) - 1u;
  std::vector<uint32_t> cand;
  for (uint32_t m = 1; m < full; ++m) cand.push_back(m);
  std::sort(cand.begin(), cand.end(), [](uint32_t a, uint32_t b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    if (ca != cb) return ca > cb;  // large facets first
    return a < b;
  });
  const int c_count = static_cast<int>(cand.size());

  // comparable[i] = candidate indices comparable with cand[i]. Up to 126
  // candidates at n = 7.
  using CandMask = std::bitset<128>;
  std::vector<CandMask> incomparable(static_cast<size_t>(c_count));
  for (int i = 0; i < c_count; ++i)
    for (int j = 0; j < c_count; ++j) {
      const uint32_t a = cand[static_cast<size_t>(i)], b = cand[static_cast<size_t>(j)];
      if (!((a & ~b) == 0 || (b & ~a) == 0))
        incomparable[static_cast<size_t>(i)].set(static_cast<size_t>(j));
    }

  std::unordered_set<std::string> seen;
  std::vector<SimplicialComplex> out;
  std::vector<uint32_t> chosen;

  auto emit = [&](const std::vector<uint32_t>& facet_masks) {
    std::vector<VertexSet> facets;
    facets.reserve(facet_masks.size());
    for (uint32_t m : facet_masks) facets.emplace_back(m, n);
    SimplicialComplex cplx = SimplicialComplex::from_facets(n, facets);
    std::vector<uint32_t> canon = canonical_facets(cplx);
    std::string key(reinterpret_cast<const char*>(canon.data()),
                    canon.size() * sizeof(uint32_t));
    if (seen.insert(std::move(key)).second) {
      std::vector<VertexSet> canon_facets;
      canon_facets.reserve(canon.size());
      for (uint32_t m : canon) canon_facets.emplace_back(m, n);
      out.push_back(SimplicialComplex::from_facets(n, canon_facets));
    }
  };

  // Depth-first over antichains: indices strictly increasing, pairwise
  // incomparable (usable mask tracks both).
  auto rec = [&](auto&& self, int min_idx, const CandMask& usable,
                 uint32_t covered) -> void {
    for (int i = min_idx; i < c_count; ++i) {
      if (!usable.test(static_cast<size_t>(i))) continue;
      chosen.push_back(cand[static_cast<size_t>(i)]);
      const uint32_t cov = covered | cand[static_cast<size_t>(i)];
      if (cov == full) emit(chosen);
      self(self, i + 1, usable & incomparable[static_cast<size_t>(i)], cov);
      chosen.pop_back();
    }
  };
  CandMask all_usable;
  for (int i = 0; i < c_count; ++i) all_usable.set(static_cast<size_t>(i));
  rec(rec, 0, all_usable, 0);

  // Deterministic emission order independent of the search order.
  std::sort(out.begin(), out.end(),
            [](const SimplicialComplex& a, const SimplicialComplex& b) {
              if (a.facet_count() != b.facet_count())
                return a.facet_count() < b.facet_count();
              return a.facets() < b.facets();
            });
  return out;
}

std::vector<SimplicialComplex> sample_complexes(int n, int count,
                                                std::mt19937_64& rng) {
  if (n < 2 || n > kMaxVertices)
    throw InputError("sample_complexes: need 2 <= n <= 32");
  std::vector<SimplicialComplex> out;
  out.reserve(static_cast<size_t>(count));

  std::uniform_int_distribution<int> facet_count_dist(1, n + 1);
  std::uniform_int_distribution<int> size_dist(1, n - 1);

  std::vector<int> deck(static_cast<size_t>(n));
  while (static_cast<int>(out.size()) < count) {
    const int draws = facet_count_dist(rng);
    std::vector<VertexSet> facets;
    for (int i = 0; i < draws; ++i) {
      const int k = size_dist(rng);
      // Partial Fisher-Yates for a uniform k-subset.
      for (int v = 0; v < n; ++v) deck[static_cast<size_t>(v)] = v;
      uint32_t bits = 0;
      for (int j = 0; j < k; ++j) {
        std::uniform_int_distribution<int> pick(j, n - 1);
        std::swap(deck[static_cast<size_t>(j)], deck[static_cast<size_t>(pick(rng))]);
        bits |= 1u << deck[static_cast<size_t>(j)];
      }
      facets.emplace_back(bits, n);
    }
    uint32_t covered = 0;
    for (const VertexSet& f : facets) covered |= f.bits();
    if (covered != VertexSet::full(n).bits()) continue;  // must cover [n]
    out.push_back(SimplicialComplex::from_facets(n, facets));
  }
  return out;
}

void SweepConfig::validate() const {
  if (n_min < 1 || n_max < n_min)
    throw InputError("sweep: invalid n range");
  if (mode == SweepMode::kExhaustive && n_max > 7)
    throw InputError("sweep: exhaustive mode requires n <= 7");
  if (mode == SweepMode::kRandom && (n_min < 2 || n_max > kMaxVertices))
    throw InputError("sweep: random mode requires 2 <= n <= 32");
  if (mode == SweepMode::kRandom && samples < 1)
    throw InputError("sweep: random mode needs at least one sample");
  if (fields.empty()) throw InputError("sweep: at least one field required");
}

}  // namespace srdelta
