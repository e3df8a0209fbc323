#include <benchmark/benchmark.h>

#include "vfunc/experiments.hpp"
#include "vfunc/functional2d.hpp"
#include "vfunc/subdivision.hpp"

using namespace vfunc;

static void BM_Delaunay(benchmark::State& state) {
  const PointSet2 ps = random_point_set(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(delaunay(ps));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Delaunay)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

static void BM_Enumerate(benchmark::State& state) {
  const PointSet2 ps = random_point_set(static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_triangulations(ps));
}
BENCHMARK(BM_Enumerate)->DenseRange(5, 9);

static void BM_VfClosedForm(benchmark::State& state) {
  const Triangulation2 d = delaunay(random_point_set(200, 3));
  for (auto _ : state) benchmark::DoNotOptimize(vf_triangulation(d).total);
}
BENCHMARK(BM_VfClosedForm);

static void BM_VfViaSubdivision(benchmark::State& state) {
  const Triangulation2 d = delaunay(random_point_set(200, 3));
  for (auto _ : state) benchmark::DoNotOptimize(vf_via_sd(d));
}
BENCHMARK(BM_VfViaSubdivision);

static void BM_GField(benchmark::State& state) {
  const auto pair = validate_topological_configuration(topological_golden_points());
  Point2 x{-2.0, -1.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(g_field(pair.folded, x));
    x.x = x.x > 2.0 ? -2.0 : x.x + 1e-3;
  }
}
BENCHMARK(BM_GField);

static void BM_McTopological(benchmark::State& state) {
  const auto threads = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(topological_counterexample(200'000, kDefaultSeed, threads));
}
BENCHMARK(BM_McTopological)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_Octahedron(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(octahedron_counterexample());
}
BENCHMARK(BM_Octahedron);

BENCHMARK_MAIN();
