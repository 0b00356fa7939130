#include <random>

#include <gtest/gtest.h>

#include "gamefit/kernels.hpp"
#include "test_support.hpp"

namespace gamefit {
namespace {

Matrix random_tableau(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Matrix t(rows, cols);
  std::uniform_int_distribution<int> zero(0, 3);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (zero(rng) != 0) t(i, j) = testing::random_rational(rng, 9, 7);
    }
  }
  return t;
}

TEST(Pivot, SmallExample) {
  Matrix t{{2, 4, 6}, {1, 3, 5}};
  kernels::pivot_serial(t, 0, 0);
  EXPECT_EQ(t, (Matrix{{1, 2, 3}, {0, 1, 2}}));
}

TEST(Pivot, ParallelMatchesSerial) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    // Cover both sides of the parallel threshold.
    const std::size_t rows = trial % 2 ? 80 : 6;
    const std::size_t cols = trial % 2 ? 60 : 9;
    Matrix a = random_tableau(rng, rows, cols);
    std::uniform_int_distribution<std::size_t> r(0, rows - 1);
    std::uniform_int_distribution<std::size_t> c(0, cols - 1);
    std::size_t pr = r(rng);
    std::size_t pc = c(rng);
    a(pr, pc) = testing::random_rational(rng, 5, 3);
    if (a(pr, pc).is_zero()) a(pr, pc) = 1;
    Matrix b = a;
    kernels::pivot_serial(a, pr, pc);
    kernels::pivot_parallel(b, pr, pc);
    EXPECT_EQ(a, b);
    EXPECT_EQ(a(pr, pc), Rational(1));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != pr) EXPECT_TRUE(a(i, pc).is_zero());
    }
  }
}

TEST(Pivot, ThreadCountIsPositive) { EXPECT_GE(kernels::max_threads(), 1); }

}  // namespace
}  // namespace gamefit
