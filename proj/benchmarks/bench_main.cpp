#include <benchmark/benchmark.h>

#include <random>

#include "srdelta/generator.hpp"
#include "srdelta/harness.hpp"
#include "srdelta/homology.hpp"
#include "srdelta/regularity.hpp"
#include "srdelta/stanley_reisner.hpp"

using namespace srdelta;

namespace {

SimplicialComplex octahedron() {
  std::vector<VertexSet> facets;
  for (int a : {0, 1})
    for (int b : {2, 3})
      for (int c : {4, 5}) facets.push_back(VertexSet::of({a, b, c}, 6));
  return SimplicialComplex::from_facets(6, facets);
}

void BM_ReducedHomologyQ(benchmark::State& state) {
  const SimplicialComplex octa = octahedron();
  const FieldDescriptor q = FieldDescriptor::rationals();
  for (auto _ : state)
    benchmark::DoNotOptimize(reduced_homology(octa, q).betti(2));
}
BENCHMARK(BM_ReducedHomologyQ);

void BM_ReducedHomologyF2(benchmark::State& state) {
  const SimplicialComplex octa = octahedron();
  const FieldDescriptor f2 = FieldDescriptor::prime(2);
  for (auto _ : state)
    benchmark::DoNotOptimize(reduced_homology(octa, f2).betti(2));
}
BENCHMARK(BM_ReducedHomologyF2);

void BM_Regularity(benchmark::State& state) {
  const SimplicialComplex octa = octahedron();
  const FieldDescriptor f2 = FieldDescriptor::prime(2);
  for (auto _ : state) benchmark::DoNotOptimize(regularity(octa, f2));
}
BENCHMARK(BM_Regularity);

void BM_DeltaProfile(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto corpus = sample_complexes(7, 32, rng);
  size_t i = 0;
  for (auto _ : state) {
    const MonomialIdeal ideal = stanley_reisner_ideal(corpus[i++ % corpus.size()]);
    benchmark::DoNotOptimize(delta_profile(ideal, 1).r_index);
  }
}
BENCHMARK(BM_DeltaProfile);

void BM_EnumerateComplexes(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_complexes(n).size());
}
BENCHMARK(BM_EnumerateComplexes)->Arg(4)->Arg(5);

void BM_VerifyBounds(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto corpus = sample_complexes(6, 32, rng);
  const std::vector<FieldDescriptor> fields = {FieldDescriptor::prime(2)};
  size_t i = 0;
  for (auto _ : state)
    benchmark::DoNotOptimize(
        verify_bounds(corpus[i++ % corpus.size()], fields).r_index);
}
BENCHMARK(BM_VerifyBounds);

}  // namespace

BENCHMARK_MAIN();
