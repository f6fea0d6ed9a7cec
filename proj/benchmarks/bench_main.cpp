#include <benchmark/benchmark.h>

#include "ehrhart/catalog.hpp"
#include "ehrhart/counting.hpp"
#include "ehrhart/rootcert.hpp"

namespace {

using namespace ehrhart;

void BM_BuildCrossPolytope(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cross_polytope(d));
}
BENCHMARK(BM_BuildCrossPolytope)->DenseRange(2, 5);

void BM_CountPoints(benchmark::State& state) {
  const auto p = cross_polytope(static_cast<std::size_t>(state.range(0)));
  const auto m = static_cast<std::uint64_t>(state.range(1));
  const unsigned threads = static_cast<unsigned>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(count_points(p, m, {threads}));
}
BENCHMARK(BM_CountPoints)->Args({4, 8, 1})->Args({4, 8, 4})->Args({5, 10, 1})->Args({5, 10, 4});

void BM_Ehrhart(benchmark::State& state) {
  const auto catalog = smooth_catalog();
  const auto& p = catalog[static_cast<std::size_t>(state.range(0))].polytope;
  state.SetLabel(catalog[static_cast<std::size_t>(state.range(0))].name);
  for (auto _ : state) benchmark::DoNotOptimize(ehrhart::ehrhart(p));
}
BENCHMARK(BM_Ehrhart)->DenseRange(0, 11);

void BM_Certificate(benchmark::State& state) {
  const auto poly = dim6_offline_fixtures()[1].poly;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_line_certificate(poly, 6));
}
BENCHMARK(BM_Certificate);

void BM_FindRoots(benchmark::State& state) {
  const auto poly = dim6_offline_fixtures()[1].poly;
  const auto digits = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(find_roots(poly, 1e-9, digits));
}
BENCHMARK(BM_FindRoots)->Arg(50)->Arg(100)->Arg(200)->Arg(400);

}  // namespace
BENCHMARK_MAIN();
