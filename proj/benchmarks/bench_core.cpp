#include <benchmark/benchmark.h>

#include "wmult/bz.hpp"
#include "wmult/oracle.hpp"
#include "wmult/rootsystem.hpp"
#include "wmult/survey.hpp"

using namespace wmult;

static void BM_weight_diagram_G2_adjoint(benchmark::State& state) {
  RootCoordWeight lam{{Family::G, 2}, {3, 2}};
  for (auto _ : state) benchmark::DoNotOptimize(oracle::weight_diagram(lam));
}
BENCHMARK(BM_weight_diagram_G2_adjoint);

static void BM_weight_diagram_B4(benchmark::State& state) {
  RootCoordWeight lam{{Family::B, 4}, {4, 5, 6, 6}};
  for (auto _ : state) benchmark::DoNotOptimize(oracle::weight_diagram(lam));
}
BENCHMARK(BM_weight_diagram_B4);

static void BM_weight_diagram_E8_3875(benchmark::State& state) {
  RootCoordWeight lam{{Family::E, 8}, {4, 5, 7, 10, 8, 6, 4, 2}};
  for (auto _ : state) benchmark::DoNotOptimize(oracle::weight_diagram(lam));
}
BENCHMARK(BM_weight_diagram_E8_3875);

static void BM_make_dominant_E8(benchmark::State& state) {
  RootCoordWeight low{{Family::E, 8}, {-2, -3, -4, -6, -5, -4, -3, -2}};
  for (auto _ : state) benchmark::DoNotOptimize(make_dominant(low));
}
BENCHMARK(BM_make_dominant_E8);

static void BM_multiplicity_one_fastpath(benchmark::State& state) {
  RootCoordWeight lam{{Family::E, 7}, {2, 3, 4, 6, 5, 4, 2}};
  RootCoordWeight mu{{Family::E, 7}, {2, 2, 3, 4, 3, 2, 1}};
  for (auto _ : state)
    benchmark::DoNotOptimize(bz::multiplicity_one(lam, mu, bz::Projection::Restrict));
}
BENCHMARK(BM_multiplicity_one_fastpath);

static void BM_enumerate_B6_cap8(benchmark::State& state) {
  LieType t{Family::B, 6};
  RootCoordWeight mu2 = highest_roots(t).second;
  for (auto _ : state) benchmark::DoNotOptimize(survey::enumerate_dominant_above(t, mu2, 8));
}
BENCHMARK(BM_enumerate_B6_cap8);

static void BM_verify_type_B4(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        survey::verify_theorem_main({Family::B, 4}, survey::SweepOptions{8, false}));
}
BENCHMARK(BM_verify_type_B4);

BENCHMARK_MAIN();
