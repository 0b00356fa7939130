#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "gamefit/matrix.hpp"
#include "gamefit/model.hpp"
#include "gamefit/rational.hpp"

namespace gamefit {

// ---------------------------------------------------------------------------
// Game -> symmetric game.

struct SymmetrizationRecord {
  Rational offset;  // C, with A + C > 0 entrywise
  std::size_t m = 0;
  std::size_t n = 0;

  std::size_t dimension() const { return m + n + 1; }
};

/// C = max(0, 1 - min A).
Rational choose_offset(const Matrix& a);

struct Symmetrized {
  Matrix matrix;
  SymmetrizationRecord record;
};

/// Builds the (m+n+1)-square skew-symmetric matrix
///
///   [ 0           A + C   -J  ]
///   [ -(A + C)^T  0        J' ]
///   [ J^T        -J'^T     0  ]
///
/// where J, J' are all-ones columns. Throws kOffsetTooSmall unless A + C > 0.
Symmetrized symmetrize(const Matrix& a, const Rational& offset);

/// (p, q, v) -> (p, q, v + C) / (2 + v + C).
MixedStrategy embed_equilibrium(const Equilibrium& e, const SymmetrizationRecord& rec);

/// Inverse of embed_equilibrium. The payoff overload also checks the result
/// is an equilibrium of `payoff` and throws kNotOptimal otherwise.
Equilibrium extract_equilibrium(const MixedStrategy& z, const SymmetrizationRecord& rec);
Equilibrium extract_equilibrium(const MixedStrategy& z, const SymmetrizationRecord& rec,
                                const Matrix& payoff);

// ---------------------------------------------------------------------------
// Symmetric game -> Chebyshev / LAD fit.

struct ChebyshevGameRecord {
  Rational c;      // largest entry of the input matrix; 0 marks the trivial case
  Rational scale;  // 1 / c
  std::size_t dimension = 0;
};

struct ChebyshevReduction {
  std::optional<ApproxProblem> problem;  // empty when the matrix is zero
  ChebyshevGameRecord record;

  bool trivial() const { return !problem.has_value(); }
};

/// For skew-symmetric M with largest entry c > 0, emits a sup-norm problem in
/// N variables with 2N + 2 functions whose minimizers are exactly the optimal
/// strategies of M and whose optimal value is exactly 1:
///
///   (M/c + 1) x,   1 - x_i,   sum x,   2 - sum x.
///
/// The last function replaces the textbook -sum x - c + 1, which lets x = 0
/// tie the optimum.
ChebyshevReduction game_to_chebyshev(const Matrix& m);

/// Validates a minimizer of the emitted problem as an optimal strategy.
/// Throws kNotOptimal if the objective at x exceeds 1.
MixedStrategy chebyshev_argmin_to_strategy(const ApproxProblem& problem, const Vector& x,
                                           const ChebyshevGameRecord& rec);

struct L1GameRecord {
  Rational c;
  std::size_t dimension = 0;

  Rational optimum() const { return c * Rational(dimension) + Rational(dimension); }
};

struct L1Reduction {
  std::optional<ApproxProblem> problem;
  L1GameRecord record;

  bool trivial() const { return !problem.has_value(); }
};

/// Sum-norm problem with 4N + 2 functions:
///   M x,  c + M x,  x_i,  1 - x_i,  -1 + sum x,  1 - sum x.
/// Its optimal value is N c + N, attained exactly on optimal strategies.
L1Reduction game_to_l1(const Matrix& m);

/// Throws kNotOptimal if f(x) > N c + N.
MixedStrategy l1_argmin_to_strategy(const ApproxProblem& problem, const Vector& x,
                                    const L1GameRecord& rec);

// ---------------------------------------------------------------------------
// Fits -> LP.

/// Keeps the first `arity` coordinates of an LP solution.
struct ProjectionMap {
  std::size_t arity = 0;
  std::size_t auxiliary = 0;

  Vector recover(const Vector& lp_x) const;
};

struct ApproxLp {
  LinearProgram lp;
  ProjectionMap map;
};

/// min t  s.t.  -t <= f_i <= t.  Variables (x_1..x_n, t); 2m constraints.
ApproxLp cheb_to_lp(const ApproxProblem& problem);

/// min sum t_i  s.t.  -t_i <= f_i <= t_i.  Variables (x, t_1..t_m).
ApproxLp l1_to_lp(const ApproxProblem& problem);

/// max_s |f_1 + s_2 f_2 + ... + s_m f_m| over all sign vectors s.
/// Throws kExponentialBlowup when m > cap.
ApproxProblem l1_to_cheb_naive(const ApproxProblem& problem, std::size_t cap = 16);

// ---------------------------------------------------------------------------
// Game <-> LP.

struct GameLpPair {
  LinearProgram row;  // variables (p_1..p_m, v): max v, pA >= v, sum p = 1, p >= 0
  LinearProgram col;  // variables (q_1..q_n, w): min w, Aq <= w, sum q = 1, q >= 0
};

GameLpPair game_to_lp_pair(const MatrixGame& game);

/// Maps between the variables of a LinearProgram and its standard form.
struct VariableMap {
  struct Column {
    std::size_t positive = 0;
    std::optional<std::size_t> negative;  // set for free variables
  };

  std::vector<Column> columns;
  std::size_t standard_cols = 0;
  bool negated = false;   // objective was MIN
  Rational constant;      // objective constant

  Vector to_original(const Vector& standard_x) const;
  Vector to_standard(const Vector& original_x) const;
  Rational value_to_original(const Rational& standard_value) const;
  Rational value_to_standard(const Rational& original_value) const;
};

struct Standardized {
  StandardLP lp;
  VariableMap map;
};

/// Rows are emitted in constraint order: "<=" as one row, ">=" negated,
/// "=" as the "<=" row followed by the ">=" row.
Standardized lp_to_standard(const LinearProgram& lp);

/// [[0, A, -b], [-A^T, 0, c], [b^T, -c^T, 0]].
Matrix standard_lp_to_game(const StandardLP& lp);

struct AlphaBound {
  Rational beta;
  std::size_t dimension = 0;
  Rational alpha;
};

/// alpha = beta^(-2N) * N^(-ceil(N/2)). Throws kTooSmall for N < 2.
AlphaBound alpha_bound(const Matrix& m);

/// Adds alpha/(1 - alpha) times the last column to every other column.
Matrix modify_game(const Matrix& m, const Rational& alpha);

/// x = normalize(x' + alpha/(1 - alpha) * (sum_{j<N} x'_j) e_N).
/// M x is a positive multiple of M' x', and x_N >= alpha.
MixedStrategy shift_mass_to_last(const MixedStrategy& modified_strategy, const Rational& alpha);

/// shift_mass_to_last followed by the check M x <= 0 (kNotOptimal otherwise).
MixedStrategy recover_from_modified(const MixedStrategy& modified_strategy,
                                    const Rational& alpha, const Matrix& m);

using GameSolver = std::function<Equilibrium(const MatrixGame&)>;
using StandardSolver = std::function<LPSolution(const StandardLP&)>;

struct GamePipelineTrace {
  Standardized standard;
  Matrix game;
  AlphaBound alpha;
  Matrix modified;
  Rational modified_value;
  std::optional<MixedStrategy> recovered;  // set when the modified value is 0
  LPSolution solution = LpInfeasible{};
};

/// Solves a LinearProgram through the symmetric-game embedding. x and value
/// of an optimal result are in the caller's variables; dual, certificate and
/// ray refer to the standard form from lp_to_standard. `auxiliary` is only
/// used to tell infeasible from unbounded when the modified game has a
/// nonzero value.
GamePipelineTrace solve_lp_via_game_traced(const LinearProgram& lp, const GameSolver& solve_game,
                                           const StandardSolver& auxiliary);

inline LPSolution solve_lp_via_game(const LinearProgram& lp, const GameSolver& solve_game,
                                    const StandardSolver& auxiliary) {
  return solve_lp_via_game_traced(lp, solve_game, auxiliary).solution;
}

}  // namespace gamefit
