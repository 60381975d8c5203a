#include <benchmark/benchmark.h>

#include "csinv/evaluate.hpp"
#include "csinv/lattice.hpp"

namespace {

using namespace csinv;

void BM_MaximizeAplus(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const AmbientLattice amb = build_ambient_per_block({2, 2, 2}, k);
  RatMatrix basis(amb.lattice().rank(), 3);
  for (std::size_t c = 0; c < 3; ++c) {
    basis(c, c) = 1;
    for (std::size_t i = 0; i < k; ++i) basis(amb.generator_axis(i), c) = Rational(1, 4 + c + i);
  }
  const PeriodSubspace period(amb.lattice(), basis);
  const auto classes = enumerate_monopole_classes(amb);
  for (auto _ : state) benchmark::DoNotOptimize(maximize_aplus_squared(amb, period, classes));
  state.counters["classes"] = static_cast<double>(classes.size());
}
BENCHMARK(BM_MaximizeAplus)->DenseRange(0, 6, 2);

void BM_DiagonalizeE8(benchmark::State& state) {
  IntMatrix e8(8, 8);
  for (std::size_t i = 0; i < 8; ++i) e8(i, i) = -2;
  for (auto [a, b] : {std::pair{0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}}) e8(a, b) = e8(b, a) = 1;
  const IntersectionLattice lattice(e8);
  for (auto _ : state) benchmark::DoNotOptimize(diagonalize_definite(lattice));
}
BENCHMARK(BM_DiagonalizeE8);

void BM_DiagonalizeMinusIdentity(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  const IntersectionLattice lattice(IntMatrix::diagonal(std::vector<std::int64_t>(k, -1)));
  for (auto _ : state) benchmark::DoNotOptimize(diagonalize_definite(lattice));
}
BENCHMARK(BM_DiagonalizeMinusIdentity)->DenseRange(2, 8, 2);

void BM_EvaluateGolden(benchmark::State& state) {
  const Catalog catalog;
  EvalOptions opts;
  opts.witness = {"DC8", "DC8", "DC8", "DC8"};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate("2*DC8 # S4", catalog, opts));
}
BENCHMARK(BM_EvaluateGolden);

void BM_EvaluateFamily(benchmark::State& state) {
  const Catalog catalog;
  EvalOptions opts;
  opts.auto_witness = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evaluate("4*DC8 # 5*CP2bar # 2*S1xS3", catalog, opts));
  }
}
BENCHMARK(BM_EvaluateFamily);

}  // namespace

BENCHMARK_MAIN();
