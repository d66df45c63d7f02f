#include <benchmark/benchmark.h>

#include "orbifold/dihedral.hpp"
#include "orbifold/part3d.hpp"

using namespace orbifold;

static void BM_z3d_mu3(benchmark::State& state) {
  const ColourGroup g = ColourGroup::cyclic(3, {1, 1, 1});
  const EnumOptions opt{static_cast<int>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(z3d(g, static_cast<int>(state.range(0)), opt));
}
BENCHMARK(BM_z3d_mu3)->Args({16, 1})->Args({20, 1})->Args({24, 1})->Args({24, 4})->Unit(benchmark::kMillisecond);

static void BM_reduce_mu3(benchmark::State& state) {
  const TruncatedSeries z = z3d(ColourGroup::cyclic(3, {1, 1, 1}), 24);
  for (auto _ : state) benchmark::DoNotOptimize(reduce3d(z, 3, 24));
}
BENCHMARK(BM_reduce_mu3)->Unit(benchmark::kMillisecond);

static void BM_mul(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  const TruncatedSeries m = std_series(StdSeries::M, Monomial{1, 1, 1}, 3, bound);
  const TruncatedSeries z = z3d(ColourGroup::cyclic(3, {1, 1, 1}), bound);
  for (auto _ : state) benchmark::DoNotOptimize(mul(z, m));
}
BENCHMARK(BM_mul)->Arg(12)->Arg(18)->Arg(24)->Unit(benchmark::kMillisecond);

static void BM_pexp_type_a(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(young_product_A(static_cast<int>(state.range(0)), 12));
}
BENCHMARK(BM_pexp_type_a)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

static void BM_z_dr(benchmark::State& state) {
  const OctantLayout layout(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(z_dr(layout, 10));
}
BENCHMARK(BM_z_dr)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
