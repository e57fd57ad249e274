// Microbenchmarks for the hot paths: ideal powers, decomposition, symbolic
// powers, both Cohen-Macaulayness oracles, the two homology routes, and a
// small end-to-end sweep.  Run with --benchmark_filter=<regex> to narrow.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "weid/cm.hpp"
#include "weid/complex.hpp"
#include "weid/decompose.hpp"
#include "weid/graph.hpp"
#include "weid/harness.hpp"
#include "weid/ideal.hpp"

namespace {

using namespace weid;

/// Weighted path y1 - x1 - x2 - y2 whose powers stay CM.
MonomialIdeal path_ideal() {
  WeightedGraph g({"a", "b", "x", "y"}, {{0, 1, 1}, {0, 2, 2}, {1, 3, 3}});
  return edge_ideal(g);
}

/// Star core on three pairs: hub pendant 4, spokes 1 and 2, pendants 2 and 4.
MonomialIdeal star_ideal() {
  WeightedGraph g({"x1", "x2", "x3", "y1", "y2", "y3"},
                  {{0, 2, 1}, {1, 2, 2}, {0, 3, 2}, {1, 4, 4}, {2, 5, 4}});
  return edge_ideal(g);
}

/// Six-vertex triangulation of the real projective plane (ten nonfaces).
SimplicialComplex projective_plane() {
  std::vector<VarMask> nonfaces;
  for (auto t : {std::vector<int>{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5},
                 {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 5}, {2, 4, 5},
                 {3, 4, 5}}) {
    VarMask m;
    for (int v : t) m.set(static_cast<std::size_t>(v));
    nonfaces.push_back(m);
  }
  return SimplicialComplex(6, std::move(nonfaces));
}

void BM_Power(benchmark::State& state) {
  MonomialIdeal I = star_ideal();
  const unsigned n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(power(I, n));
}
BENCHMARK(BM_Power)->Arg(2)->Arg(3)->Arg(4);

void BM_PrimaryDecomposition(benchmark::State& state) {
  MonomialIdeal J = power(star_ideal(), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(primary_decomposition(J));
}
BENCHMARK(BM_PrimaryDecomposition)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SymbolicPower(benchmark::State& state) {
  MonomialIdeal I = star_ideal();
  const std::uint64_t n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(symbolic_power(I, n));
}
BENCHMARK(BM_SymbolicPower)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_DepthOracle(benchmark::State& state) {
  MonomialIdeal J = power(path_ideal(), static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(is_cm_depth(J, FieldConfig::q(), Budgets{}));
}
BENCHMARK(BM_DepthOracle)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_DepthOracleStar(benchmark::State& state) {
  MonomialIdeal J = power(star_ideal(), static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(is_cm_depth(J, FieldConfig::q(), Budgets{}));
}
BENCHMARK(BM_DepthOracleStar)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ReisnerOracle(benchmark::State& state) {
  MonomialIdeal J = power(path_ideal(), static_cast<unsigned>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(is_cm_reisner(J, FieldConfig::q(), Budgets{}));
}
BENCHMARK(BM_ReisnerOracle)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Polarize(benchmark::State& state) {
  MonomialIdeal J = power(star_ideal(), 3);
  for (auto _ : state) benchmark::DoNotOptimize(polarize(J));
}
BENCHMARK(BM_Polarize);

void BM_HomologyDirect(benchmark::State& state) {
  SimplicialComplex C = projective_plane();
  FieldConfig field = state.range(0) ? FieldConfig::fp(2) : FieldConfig::q();
  for (auto _ : state) {
    CellBudget budget;
    benchmark::DoNotOptimize(reduced_homology_ranks(C, field, budget));
  }
}
BENCHMARK(BM_HomologyDirect)->Arg(0)->Arg(1);

void BM_HomologyDualRoute(benchmark::State& state) {
  // Boundary of a large simplex: one minimal nonface on 18 vertices, so the
  // face count is astronomical and the Alexander-dual route must carry it.
  VarMask all;
  for (std::size_t v = 0; v < 18; ++v) all.set(v);
  SimplicialComplex C(18, {all});
  for (auto _ : state) {
    CellBudget budget;
    benchmark::DoNotOptimize(reduced_homology_ranks(C, FieldConfig::q(), budget));
  }
}
BENCHMARK(BM_HomologyDualRoute);

void BM_SweepPath(benchmark::State& state) {
  SweepSpec spec;
  spec.family = "path3";
  spec.max_weight = 2;
  spec.max_power = 2;
  for (auto _ : state) benchmark::DoNotOptimize(sweep(spec));
}
BENCHMARK(BM_SweepPath)->Unit(benchmark::kMillisecond);

void BM_GenerateVwc(benchmark::State& state) {
  SweepSpec spec;
  spec.family = "vwc-enum";
  spec.max_weight = 2;
  spec.max_pairs = 3;
  for (auto _ : state) benchmark::DoNotOptimize(generate(spec));
}
BENCHMARK(BM_GenerateVwc)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
