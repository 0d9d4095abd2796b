#include <benchmark/benchmark.h>

#include <map>
#include <vector>

#include "diffop/derivation.hpp"
#include "diffop/jacobi.hpp"
#include "diffop/parse.hpp"
#include "diffop/quotient.hpp"
#include "diffop/relations.hpp"
#include "diffop/variety.hpp"
#include "diffop/verify.hpp"

using namespace diffop;

namespace {

RingPtr make(const char* name) {
  return ring_from_variety(catalog_find(name)->variety);
}

void BM_ring_construction(benchmark::State& state, const char* name) {
  for (auto _ : state) {
    RingPtr ring = make(name);
    benchmark::DoNotOptimize(ring);
  }
}
BENCHMARK_CAPTURE(BM_ring_construction, cusp, "cusp");
BENCHMARK_CAPTURE(BM_ring_construction, twisted_cubic, "twisted_cubic");
BENCHMARK_CAPTURE(BM_ring_construction, double_cusp, "double_cusp");

void BM_jacobi_analysis(benchmark::State& state, const char* name) {
  for (auto _ : state) {
    RingPtr ring = make(name);
    benchmark::DoNotOptimize(jacobi_data(*ring).r);
  }
}
BENCHMARK_CAPTURE(BM_jacobi_analysis, whitney_umbrella, "whitney_umbrella");
BENCHMARK_CAPTURE(BM_jacobi_analysis, double_cusp, "double_cusp");

void BM_natural_generators(benchmark::State& state) {
  RingPtr ring = make("double_cusp");
  for (auto _ : state) benchmark::DoNotOptimize(natural_generators(*ring));
}
BENCHMARK(BM_natural_generators);

void BM_relation_instances(benchmark::State& state) {
  RingPtr ring = make("double_cusp");
  for (auto _ : state) benchmark::DoNotOptimize(relation_instances(*ring));
}
BENCHMARK(BM_relation_instances);

void BM_verify_relations(benchmark::State& state) {
  RingPtr ring = make("whitney_umbrella");
  std::vector<Relation> rels = relation_instances(*ring);
  for (auto _ : state) {
    bool all = true;
    for (const Relation& rel : rels) all = all && verify_relation(*ring, rel);
    benchmark::DoNotOptimize(all);
  }
}
BENCHMARK(BM_verify_relations);

void BM_submodule_membership(benchmark::State& state) {
  RingPtr ring = make("cusp");
  Derivation gen(ring, {ring->project("2*y"), ring->project("3*x^2")});
  Derivation probe = gen.times(ring->project("x + 3")) - gen.scaled(Rational(7));
  for (auto _ : state) benchmark::DoNotOptimize(in_natural_submodule(probe));
}
BENCHMARK(BM_submodule_membership);

void BM_order_membership(benchmark::State& state) {
  RingPtr ring = make("cusp");
  IndexTuple i(std::vector<int>{0}), j(std::vector<int>{1});
  std::vector<FiltrationTerm> candidate = {
      {LocalizedElement::in_ring(ring->project("4*x")), {2}},
      {LocalizedElement::in_ring(ring->project("-2")), {1}}};
  int bound = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(order_membership(*ring, i, j, candidate, bound));
}
BENCHMARK(BM_order_membership)->DenseRange(2, 5);

void BM_reconstruct(benchmark::State& state) {
  RingPtr ring = make("circle");
  const JacobiData& d = jacobi_data(*ring);
  Residue delta = minor_det(*ring, d.pivot_rows, d.pivot_cols);
  std::map<int, Residue> values;
  for (int k = 0; k < ring->nvars(); ++k)
    if (!d.pivot_cols.contains(k))
      values.emplace(k, delta * ring->project("x - 2*y + 1"));
  for (auto _ : state)
    benchmark::DoNotOptimize(reconstruct(*ring, d.pivot_rows, d.pivot_cols, values));
}
BENCHMARK(BM_reconstruct);

void BM_property_suites(benchmark::State& state, const char* name) {
  RingPtr ring = make(name);
  for (auto _ : state) benchmark::DoNotOptimize(run_property_suites(ring));
}
BENCHMARK_CAPTURE(BM_property_suites, cusp, "cusp");
BENCHMARK_CAPTURE(BM_property_suites, double_cusp, "double_cusp");

}  // namespace

BENCHMARK_MAIN();
