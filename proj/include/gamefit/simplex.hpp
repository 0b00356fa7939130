#pragma once

#include <cstddef>

#include "gamefit/model.hpp"
#include "gamefit/reduce.hpp"

namespace gamefit {

enum class PivotKernel { kSerial, kParallel };

struct SimplexOptions {
  PivotKernel kernel = PivotKernel::kParallel;
  // Throws kInternal if a basis is ever revisited. Costs a set lookup per pivot.
  bool track_bases = false;
};

struct SimplexStats {
  std::size_t phase1_pivots = 0;
  std::size_t phase2_pivots = 0;
};

/// Two-phase primal simplex over exact rationals with Bland's rule.
///
/// Optimal results carry the dual y (y >= 0, A^T y >= c, b^T y = c^T x).
/// Infeasible results carry y >= 0 with A^T y >= 0 and b^T y < 0, read off the
/// phase-one tableau. Unbounded results carry the improving edge direction.
LPSolution simplex_solve(const StandardLP& lp, const SimplexOptions& options = {},
                         SimplexStats* stats = nullptr);

/// Standardize, solve, map back. x and value are in the LP's own variables;
/// certificates stay in standard-form coordinates.
LPSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options = {});

/// Row LP from game_to_lp_pair, solved once; q is read off the dual.
Equilibrium solve_game(const MatrixGame& game, const SimplexOptions& options = {});

/// Game pipeline with simplex_solve as both the game solver and the auxiliary solver.
LPSolution solve_lp_via_game(const LinearProgram& lp, const SimplexOptions& options = {});
GamePipelineTrace solve_lp_via_game_traced(const LinearProgram& lp,
                                           const SimplexOptions& options = {});

struct ApproxSolution {
  Vector x;
  Rational value;
};

/// Minimizes a fit through cheb_to_lp / l1_to_lp.
ApproxSolution solve_approx(const ApproxProblem& problem, const SimplexOptions& options = {});

}  // namespace gamefit
