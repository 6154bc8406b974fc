#include <benchmark/benchmark.h>

#include <latcvx/latcvx.hpp>

using namespace latcvx;

namespace {

void BM_SimplexWidth(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const Polytope s = standard_simplex(d);
  const Lattice l = Lattice::standard(d);
  for (auto _ : state) benchmark::DoNotOptimize(width(s, l));
}
BENCHMARK(BM_SimplexWidth)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_SimplexDiameter(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const Polytope s = standard_simplex(d);
  const Lattice l = Lattice::standard(d);
  for (auto _ : state) benchmark::DoNotOptimize(diameter(s, l));
}
BENCHMARK(BM_SimplexDiameter)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_SimplexCertify(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const Polytope s = standard_simplex(d);
  const Lattice l = Lattice::standard(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_reduced(s, l));
    benchmark::DoNotOptimize(is_complete(s, l));
  }
}
BENCHMARK(BM_SimplexCertify)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_PermutohedronComplete(benchmark::State& state) {
  const auto e = gallery("permutohedron", {Rational(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(is_complete(e.polytope, e.lattice));
}
BENCHMARK(BM_PermutohedronComplete)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_VoronoiCell(benchmark::State& state) {
  const Lattice l = Lattice::from_gram(a_star_gram(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(voronoi_cell(l));
}
BENCHMARK(BM_VoronoiCell)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_TriangleGrid(benchmark::State& state) {
  const Lattice z2 = Lattice::standard(2);
  for (auto _ : state) {
    int reduced = 0;
    for (int i = -10; i <= 10; ++i)
      for (int j = -10; j <= 10; ++j) {
        if (i == 10 && j == 10) continue;
        reduced += is_reduced(triangle_xy(Rational(i, 10), Rational(j, 10)), z2).verdict;
      }
    benchmark::DoNotOptimize(reduced);
  }
}
BENCHMARK(BM_TriangleGrid)->Unit(benchmark::kMillisecond);

void BM_ReduceSquare(benchmark::State& state) {
  const Polytope sq = Polytope::hull({{-3, -3}, {-3, 3}, {3, -3}, {3, 3}});
  const Lattice z2 = Lattice::standard(2);
  for (auto _ : state) benchmark::DoNotOptimize(reduce(sq, z2));
}
BENCHMARK(BM_ReduceSquare)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
