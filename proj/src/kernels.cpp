#include "gamefit/kernels.hpp"

#include <cstddef>

#include <omp.h>

namespace gamefit::kernels {
namespace {

void normalize_pivot_row(Matrix& t, std::size_t row, std::size_t col) {
  const Rational pivot = t(row, col);
  for (auto& x : t.row(row)) {
    if (!x.is_zero()) x /= pivot;
  }
}

void eliminate_row(Matrix& t, std::size_t target, std::size_t row, std::size_t col) {
  const Rational factor = t(target, col);
  if (factor.is_zero()) return;
  const auto src = t.row(row);
  auto dst = t.row(target);
  for (std::size_t j = 0; j < src.size(); ++j) {
    if (!src[j].is_zero()) dst[j] -= factor * src[j];
  }
}

}  // namespace

void pivot_serial(Matrix& tableau, std::size_t row, std::size_t col) {
  normalize_pivot_row(tableau, row, col);
  for (std::size_t i = 0; i < tableau.rows(); ++i) {
    if (i != row) eliminate_row(tableau, i, row, col);
  }
}

void pivot_parallel(Matrix& tableau, std::size_t row, std::size_t col) {
  normalize_pivot_row(tableau, row, col);
  const auto rows = static_cast<std::ptrdiff_t>(tableau.rows());
  const bool wide = tableau.rows() * tableau.cols() >= kParallelThreshold;
#pragma omp parallel for schedule(dynamic, 4) if (wide)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    const auto target = static_cast<std::size_t>(i);
    if (target != row) eliminate_row(tableau, target, row, col);
  }
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace gamefit::kernels
