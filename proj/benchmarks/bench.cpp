#include "areal/area_assignment.hpp"
#include "areal/generators.hpp"
#include "areal/porder.hpp"
#include "areal/realizer.hpp"
#include "areal/sturm.hpp"
#include "areal/symbolic.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace areal;

namespace {

void BM_placement_build(benchmark::State& state) {
  int l = static_cast<int>(state.range(0));
  PlaneTriangulation t = accordion(l);
  POrder po = porder_from_order(t, accordion_order(l), accordion_unoriented_edge(l));
  std::mt19937_64 rng(1);
  AreaAssignment a = sample_generic(t, rng);
  for (auto _ : state) {
    SymbolicPlacement pl = build_placement(t, po, a);
    benchmark::DoNotOptimize(pl.last_face.numerator_degree());
  }
}
BENCHMARK(BM_placement_build)->Arg(3)->Arg(6)->Arg(9);

void BM_analyze_accordion(benchmark::State& state) {
  PlaneTriangulation t = accordion(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    AnalysisReport r = analyze(t, 3, 1);
    benchmark::DoNotOptimize(r.verdict);
  }
}
BENCHMARK(BM_analyze_accordion)->Arg(3)->Arg(5);

void BM_isolate_roots(benchmark::State& state) {
  // Wilkinson-style expanded product with well separated roots.
  Polynomial p{Rational(1)};
  for (long r = 1; r <= state.range(0); ++r)
    p = p * (Polynomial::variable() - Polynomial(make_rational(r, 1)));
  for (auto _ : state) {
    auto ivs = isolate_real_roots(p);
    benchmark::DoNotOptimize(ivs.size());
  }
}
BENCHMARK(BM_isolate_roots)->Arg(6)->Arg(10);

void BM_realize_accordion(benchmark::State& state) {
  PlaneTriangulation t = accordion(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(2);
  AreaAssignment a = sample_unit(t, rng);
  Rational tol = make_rational(1, 1000000000);
  for (auto _ : state) {
    RealizeOutcome out = realize(t, a, tol);
    benchmark::DoNotOptimize(out.status);
  }
}
BENCHMARK(BM_realize_accordion)->Arg(1)->Arg(3);

void BM_decompose_stacked(benchmark::State& state) {
  PlaneTriangulation t = stacked_3tree(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    DecompositionTree tree = decompose(t);
    benchmark::DoNotOptimize(tree.root->piece.n);
  }
}
BENCHMARK(BM_decompose_stacked)->Arg(20)->Arg(50);

}  // namespace

BENCHMARK_MAIN();
