#pragma once

#include <cstddef>

#include "gamefit/model.hpp"

namespace gamefit {

// Independent checks. Nothing here calls the simplex code or the reductions;
// linear systems are solved by a local Gaussian elimination.

/// Throws kDimensionMismatch if strategy lengths do not match the payoff.
bool verify_equilibrium(const MatrixGame& game, const Equilibrium& e);

bool verify_lp_solution(const StandardLP& lp, const LPSolution& solution);

inline constexpr std::size_t kDefaultBasisCap = 184756;  // C(20, 10)

/// Enumerates every basis of [A I]. Throws kCapExceeded if there are more
/// than `basis_cap` candidate bases.
LPSolution brute_force_lp(const StandardLP& lp, std::size_t basis_cap = kDefaultBasisCap);

/// Enumerates square submatrices (Shapley-Snow kernels) and their
/// indifference systems. Throws kCapExceeded if either dimension exceeds
/// `max_dim`.
Equilibrium brute_force_game(const MatrixGame& game, std::size_t max_dim = 4);

struct CountReport {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t dimension = 0;  // N = m + n + 1
  std::size_t expected_functions = 0;
  std::size_t actual_functions = 0;
  std::size_t arity = 0;
  bool ok = false;
  // Sup-norm only: the closed-form count 2m + 2n + 3 quoted alongside the
  // construction, which itself yields 2m + 2n + 4.
  std::size_t quoted_sup_count = 0;
  bool quoted_count_differs = false;
};

/// Checks a game_to_chebyshev / game_to_l1 output built from a symmetrized
/// m x n game: 2N + 2 (sup) or 4N + 2 (sum) functions of N variables.
CountReport check_reduction_counts(const ApproxProblem& problem, std::size_t m, std::size_t n);

}  // namespace gamefit
