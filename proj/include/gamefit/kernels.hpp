#pragma once

#include <cstddef>

#include "gamefit/matrix.hpp"

namespace gamefit::kernels {

// Gauss-Jordan pivot on tableau entry (row, col): the pivot row is divided by
// the pivot and the column is eliminated from every other row. The two
// variants produce identical tableaus; pivot_serial is the reference.
void pivot_serial(Matrix& tableau, std::size_t row, std::size_t col);
void pivot_parallel(Matrix& tableau, std::size_t row, std::size_t col);

// Below this many entries pivot_parallel runs on the calling thread.
inline constexpr std::size_t kParallelThreshold = 2048;

int max_threads();

}  // namespace gamefit::kernels
