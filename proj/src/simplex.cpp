#include "gamefit/simplex.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gamefit/error.hpp"
#include "gamefit/kernels.hpp"

namespace gamefit {
namespace {

// Dense dictionary for max c^T x, A x <= b, x >= 0.
//
// Columns: n structural, m slacks, then phase-one artificials; the final
// column is the right-hand side. The last row holds reduced costs
// r_j = c_j - c_B B^-1 a_j and, in the rhs column, minus the objective value.
class Tableau {
 public:
  Tableau(const StandardLP& lp, const SimplexOptions& options)
      : options_(options), m_(lp.num_rows()), n_(lp.num_cols()) {
    std::vector<std::size_t> flipped;
    for (std::size_t i = 0; i < m_; ++i) {
      if (lp.b[i].sign() < 0) flipped.push_back(i);
    }
    artificials_ = flipped.size();
    t_ = Matrix(m_ + 1, n_ + m_ + artificials_ + 1);
    basis_.resize(m_);

    std::size_t next_artificial = n_ + m_;
    auto flip = flipped.begin();
    for (std::size_t i = 0; i < m_; ++i) {
      const bool negative = flip != flipped.end() && *flip == i;
      const Rational sign = negative ? Rational(-1) : Rational(1);
      for (std::size_t j = 0; j < n_; ++j) {
        if (!lp.A(i, j).is_zero()) t_(i, j) = sign * lp.A(i, j);
      }
      t_(i, n_ + i) = sign;
      t_(i, rhs()) = sign * lp.b[i];
      if (negative) {
        t_(i, next_artificial) = 1;
        basis_[i] = next_artificial++;
        ++flip;
      } else {
        basis_[i] = n_ + i;
      }
    }
  }

  // Maximizes -(sum of artificials). Returns the phase-one optimum (<= 0).
  Rational phase_one(std::size_t& pivots) {
    auto obj = t_.row(m_);
    for (auto& x : obj) x = Rational{};
    for (std::size_t i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      const auto row = t_.row(i);
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (!is_artificial(j)) obj[j] += row[j];
      }
    }
    run(t_.cols() - 1, pivots);
    return -t_(m_, rhs());
  }

  // y_i = -r(slack_i); the same formula holds for flipped rows.
  Vector slack_duals() const {
    Vector y(m_);
    for (std::size_t i = 0; i < m_; ++i) y[i] = -t_(m_, n_ + i);
    return y;
  }

  // Pivots remaining zero-level artificials out of the basis and drops the
  // artificial columns.
  void drop_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < n_ + m_; ++j) {
        if (!t_(i, j).is_zero()) {
          entering = j;
          break;
        }
      }
      // The slack block of B^-1 D is invertible, so some entry is nonzero.
      if (!entering) throw Error(ErrorCode::kInternal, "simplex: artificial row has no exit");
      pivot(i, *entering);
    }
    if (artificials_ == 0) return;
    Matrix trimmed(m_ + 1, n_ + m_ + 1);
    for (std::size_t i = 0; i <= m_; ++i) {
      for (std::size_t j = 0; j < n_ + m_; ++j) trimmed(i, j) = t_(i, j);
      trimmed(i, n_ + m_) = t_(i, rhs());
    }
    t_ = std::move(trimmed);
    artificials_ = 0;
  }

  void load_objective(const Vector& c) {
    auto obj = t_.row(m_);
    for (auto& x : obj) x = Rational{};
    for (std::size_t j = 0; j < n_; ++j) obj[j] = c[j];
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= n_) continue;
      const Rational cb = c[basis_[i]];
      if (cb.is_zero()) continue;
      const auto row = t_.row(i);
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (!row[j].is_zero()) obj[j] -= cb * row[j];
      }
    }
  }

  // Returns the entering column of an unbounded edge, if any.
  std::optional<std::size_t> phase_two(std::size_t& pivots) {
    bases_seen_.clear();
    return run(n_ + m_, pivots);
  }

  Vector primal() const {
    Vector x(n_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = t_(i, rhs());
    }
    return x;
  }

  Rational value() const { return -t_(m_, rhs()); }

  Vector ray(std::size_t entering) const {
    Vector d(n_);
    if (entering < n_) d[entering] = 1;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) d[basis_[i]] = -t_(i, entering);
    }
    return d;
  }

 private:
  std::size_t rhs() const { return t_.cols() - 1; }
  bool is_artificial(std::size_t j) const { return j >= n_ + m_ && j < n_ + m_ + artificials_; }

  // Bland's rule over columns [0, limit). Returns the unbounded column, if any.
  std::optional<std::size_t> run(std::size_t limit, std::size_t& pivots) {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < limit; ++j) {
        if (t_(m_, j).sign() > 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return std::nullopt;

      std::optional<std::size_t> leaving;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        const Rational& a = t_(i, *entering);
        if (a.sign() <= 0) continue;
        Rational ratio = t_(i, rhs()) / a;
        if (!leaving || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best_ratio = std::move(ratio);
        }
      }
      if (!leaving) return entering;
      pivot(*leaving, *entering);
      ++pivots;
    }
  }

  void pivot(std::size_t row, std::size_t col) {
    if (options_.kernel == PivotKernel::kParallel) {
      kernels::pivot_parallel(t_, row, col);
    } else {
      kernels::pivot_serial(t_, row, col);
    }
    basis_[row] = col;
    if (options_.track_bases) {
      std::vector<std::size_t> key = basis_;
      std::sort(key.begin(), key.end());
      if (!bases_seen_.insert(std::move(key)).second) {
        throw Error(ErrorCode::kInternal, "simplex: basis revisited (cycling)");
      }
    }
  }

  SimplexOptions options_;
  std::size_t m_;
  std::size_t n_;
  std::size_t artificials_ = 0;
  Matrix t_;
  std::vector<std::size_t> basis_;
  std::set<std::vector<std::size_t>> bases_seen_;
};

}  // namespace

LPSolution simplex_solve(const StandardLP& lp, const SimplexOptions& options, SimplexStats* stats) {
  lp.check();
  SimplexStats local;
  SimplexStats& st = stats ? *stats : local;
  st = {};

  Tableau tableau(lp, options);
  if (tableau.phase_one(st.phase1_pivots).sign() < 0) {
    return LpInfeasible{tableau.slack_duals()};
  }
  tableau.drop_artificials();
  tableau.load_objective(lp.c);
  if (const auto edge = tableau.phase_two(st.phase2_pivots)) {
    return LpUnbounded{tableau.ray(*edge), tableau.primal()};
  }
  return LpOptimal{tableau.primal(), tableau.value(), tableau.slack_duals()};
}

LPSolution solve_lp(const LinearProgram& lp, const SimplexOptions& options) {
  const Standardized s = lp_to_standard(lp);
  LPSolution sol = simplex_solve(s.lp, options);
  if (!sol.optimal()) return sol;
  const LpOptimal& o = sol.as_optimal();
  return LpOptimal{s.map.to_original(o.x), s.map.value_to_original(o.value), o.dual};
}

Equilibrium solve_game(const MatrixGame& game, const SimplexOptions& options) {
  const std::size_t m = game.rows();
  const std::size_t n = game.cols();
  const Standardized s = lp_to_standard(game_to_lp_pair(game).row);
  const LPSolution sol = simplex_solve(s.lp, options);
  if (!sol.optimal()) {
    throw Error(ErrorCode::kInternal, "solve_game: row LP reported " + std::string(to_string(sol.status())));
  }
  const LpOptimal& o = sol.as_optimal();
  const Vector x = s.map.to_original(o.x);
  // The first n standard rows are the column constraints pA_j >= v.
  Equilibrium e{validate_strategy(Vector(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(m))),
                validate_strategy(Vector(o.dual.begin(), o.dual.begin() + static_cast<std::ptrdiff_t>(n))),
                s.map.value_to_original(o.value)};
  if (!satisfies_equilibrium(game.payoff(), e)) {
    throw Error(ErrorCode::kInternal, "solve_game: certificate does not verify");
  }
  return e;
}

GamePipelineTrace solve_lp_via_game_traced(const LinearProgram& lp, const SimplexOptions& options) {
  return solve_lp_via_game_traced(
      lp, [&](const MatrixGame& g) { return solve_game(g, options); },
      [&](const StandardLP& s) { return simplex_solve(s, options); });
}

LPSolution solve_lp_via_game(const LinearProgram& lp, const SimplexOptions& options) {
  return solve_lp_via_game_traced(lp, options).solution;
}

ApproxSolution solve_approx(const ApproxProblem& problem, const SimplexOptions& options) {
  const ApproxLp reduced =
      problem.norm() == Norm::kSup ? cheb_to_lp(problem) : l1_to_lp(problem);
  const LPSolution sol = solve_lp(reduced.lp, options);
  if (!sol.optimal()) {
    throw Error(ErrorCode::kInternal, "solve_approx: fit LP reported " + std::string(to_string(sol.status())));
  }
  ApproxSolution out{reduced.map.recover(sol.as_optimal().x), sol.as_optimal().value};
  if (evaluate_objective(problem, out.x) != out.value) {
    throw Error(ErrorCode::kInternal, "solve_approx: LP value disagrees with the objective");
  }
  return out;
}

}  // namespace gamefit
