// Serial reference pivot vs the OpenMP kernel, on bare tableaus and inside
// full simplex solves.

#include <random>

#include <benchmark/benchmark.h>

#include "gamefit/kernels.hpp"
#include "gamefit/reduce.hpp"
#include "gamefit/simplex.hpp"
#include "test_support.hpp"

namespace {

using namespace gamefit;

Matrix dense_tableau(std::size_t rows, std::size_t cols) {
  std::mt19937_64 rng(rows * 1000 + cols);
  Matrix t(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t(i, j) = testing::random_rational(rng, 50, 17);
  }
  t(0, 0) = Rational(mpz_class(7), mpz_class(3));
  return t;
}

template <void (*Pivot)(Matrix&, std::size_t, std::size_t)>
void BM_Pivot(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix base = dense_tableau(n, 2 * n);
  for (auto _ : state) {
    state.PauseTiming();
    Matrix t = base;
    state.ResumeTiming();
    Pivot(t, 0, 0);
    benchmark::DoNotOptimize(t);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n * 2 * n));
}

BENCHMARK(BM_Pivot<kernels::pivot_serial>)->Name("pivot/serial")->RangeMultiplier(2)->Range(16, 256);
BENCHMARK(BM_Pivot<kernels::pivot_parallel>)->Name("pivot/parallel")->RangeMultiplier(2)->Range(16, 256);

// Chebyshev LP of a random symmetrized m x m game.
StandardLP game_fit_lp(std::size_t m) {
  std::mt19937_64 rng(m);
  const Matrix a = testing::random_int_matrix(rng, m, m, -9, 9);
  const Matrix s = symmetrize(a, choose_offset(a)).matrix;
  return lp_to_standard(cheb_to_lp(*game_to_chebyshev(s).problem).lp).lp;
}

void BM_Solve(benchmark::State& state, PivotKernel kernel) {
  const StandardLP lp = game_fit_lp(static_cast<std::size_t>(state.range(0)));
  SimplexStats stats;
  for (auto _ : state) {
    stats = {};
    benchmark::DoNotOptimize(simplex_solve(lp, {kernel, false}, &stats));
  }
  state.counters["pivots"] = static_cast<double>(stats.phase1_pivots + stats.phase2_pivots);
  state.counters["threads"] = kernels::max_threads();
}

BENCHMARK_CAPTURE(BM_Solve, serial, PivotKernel::kSerial)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Solve, parallel, PivotKernel::kParallel)->DenseRange(4, 16, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
