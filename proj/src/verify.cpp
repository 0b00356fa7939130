#include "gamefit/verify.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gamefit/error.hpp"

namespace gamefit {
namespace {

using Rows = std::vector<Vector>;

Rational inner(const Vector& a, const Vector& b) {
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
  }
  return acc;
}

bool nonnegative(const Vector& v) {
  for (const auto& x : v) {
    if (x.sign() < 0) return false;
  }
  return true;
}

// Gauss-Jordan on an augmented system [a | rhs]. Returns the unique solution,
// or nullopt if the square matrix is singular.
std::optional<Vector> solve_square(Rows a, Vector rhs) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (auto& x : a[col]) x *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      rhs[r] -= f * rhs[col];
    }
  }
  return rhs;
}

// Spans the null space of `a` (rows x n) when it is one-dimensional.
std::optional<Vector> null_line(Rows a, std::size_t n) {
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n && rank < a.size(); ++col) {
    std::size_t piv = rank;
    while (piv < a.size() && a[piv][col].is_zero()) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[rank]);
    const Rational inv = Rational(1) / a[rank][col];
    for (auto& x : a[rank]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][col].is_zero()) continue;
      const Rational f = a[r][col];
      for (std::size_t k = 0; k < n; ++k) a[r][k] -= f * a[rank][k];
    }
    pivot_cols.push_back(col);
    ++rank;
  }
  if (rank + 1 != n) return std::nullopt;
  std::size_t free_col = 0;
  for (std::size_t k = 0; k < pivot_cols.size() && pivot_cols[k] == free_col; ++k) ++free_col;
  Vector d(n);
  d[free_col] = 1;
  for (std::size_t r = 0; r < rank; ++r) d[pivot_cols[r]] = -a[r][free_col];
  return d;
}

mpz_class binomial(std::size_t n, std::size_t k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

void require_cap(std::size_t n, std::size_t k, std::size_t cap) {
  if (binomial(n, k) > cap) {
    throw Error(ErrorCode::kCapExceeded, "brute force: C(" + std::to_string(n) + ", " +
                                             std::to_string(k) + ") subsets exceed cap " +
                                             std::to_string(cap));
  }
}

// Calls visit(subset) for every k-subset of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Polyhedron {x : G x <= h, E x = e}.
struct Polyhedron {
  Rows g;
  Vector h;
  Rows e;
  Vector e_rhs;
  std::size_t dim = 0;

  bool contains(const Vector& x) const {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (inner(g[i], x) > h[i]) return false;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (inner(e[i], x) != e_rhs[i]) return false;
    }
    return true;
  }

  // Every vertex: dim - |E| inequalities made tight alongside the equalities.
  void for_each_vertex(const std::function<void(const Vector&)>& visit) const {
    const std::size_t k = dim - e.size();
    for_each_subset(g.size(), k, [&](const std::vector<std::size_t>& tight) {
      Rows a = e;
      Vector rhs = e_rhs;
      for (std::size_t i : tight) {
        a.push_back(g[i]);
        rhs.push_back(h[i]);
      }
      if (auto x = solve_square(std::move(a), std::move(rhs)); x && contains(*x)) visit(*x);
    });
  }
};

// {x >= 0 : A x <= b}
Polyhedron primal_region(const StandardLP& lp) {
  const std::size_t m = lp.num_rows();
  const std::size_t n = lp.num_cols();
  Polyhedron p;
  p.dim = n;
  for (std::size_t i = 0; i < m; ++i) {
    p.g.push_back(lp.A.row_vector(i));
    p.h.push_back(lp.b[i]);
  }
  for (std::size_t j = 0; j < n; ++j) {
    Vector unit(n);
    unit[j] = -1;
    p.g.push_back(std::move(unit));
    p.h.push_back(0);
  }
  return p;
}

// {y >= 0 : A^T y >= rhs}, optionally with b^T y = -1.
Polyhedron dual_region(const StandardLP& lp, const Vector& rhs, bool farkas) {
  const std::size_t m = lp.num_rows();
  const std::size_t n = lp.num_cols();
  Polyhedron p;
  p.dim = m;
  for (std::size_t j = 0; j < n; ++j) {
    Vector row(m);
    for (std::size_t i = 0; i < m; ++i) row[i] = -lp.A(i, j);
    p.g.push_back(std::move(row));
    p.h.push_back(-rhs[j]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    Vector unit(m);
    unit[i] = -1;
    p.g.push_back(std::move(unit));
    p.h.push_back(0);
  }
  if (farkas) {
    p.e.push_back(lp.b);
    p.e_rhs.push_back(-1);
  }
  return p;
}

Vector matvec(const Matrix& a, const Vector& x) {
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out[i] = inner(a.row_vector(i), x);
  return out;
}

Vector transposed_matvec(const Matrix& a, const Vector& y) {
  Vector out(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t i = 0; i < a.rows(); ++i) out[j] += a(i, j) * y[i];
  }
  return out;
}

bool primal_feasible(const StandardLP& lp, const Vector& x) {
  if (x.size() != lp.num_cols() || !nonnegative(x)) return false;
  const Vector ax = matvec(lp.A, x);
  for (std::size_t i = 0; i < ax.size(); ++i) {
    if (ax[i] > lp.b[i]) return false;
  }
  return true;
}

}  // namespace

bool verify_equilibrium(const MatrixGame& game, const Equilibrium& e) {
  const Matrix& a = game.payoff();
  if (e.row.size() != a.rows() || e.col.size() != a.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "verify_equilibrium: strategy sizes vs payoff");
  }
  for (const auto* s : {&e.row.weights(), &e.col.weights()}) {
    Rational total;
    for (const auto& w : *s) {
      if (w.sign() < 0) return false;
      total += w;
    }
    if (total != 1) return false;
  }
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Rational payoff;
    for (std::size_t i = 0; i < a.rows(); ++i) payoff += e.row[i] * a(i, j);
    if (payoff < e.value) return false;
  }
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Rational payoff;
    for (std::size_t j = 0; j < a.cols(); ++j) payoff += a(i, j) * e.col[j];
    if (payoff > e.value) return false;
  }
  return true;
}

bool verify_lp_solution(const StandardLP& lp, const LPSolution& solution) {
  const std::size_t m = lp.num_rows();
  const std::size_t n = lp.num_cols();
  switch (solution.status()) {
    case LpStatus::kOptimal: {
      const auto& o = solution.as_optimal();
      if (!primal_feasible(lp, o.x)) return false;
      if (o.dual.size() != m || !nonnegative(o.dual)) return false;
      const Vector aty = transposed_matvec(lp.A, o.dual);
      for (std::size_t j = 0; j < n; ++j) {
        if (aty[j] < lp.c[j]) return false;
      }
      return inner(lp.c, o.x) == o.value && inner(lp.b, o.dual) == o.value;
    }
    case LpStatus::kInfeasible: {
      const auto& y = solution.as_infeasible().certificate;
      if (y.size() != m || !nonnegative(y)) return false;
      for (const auto& v : transposed_matvec(lp.A, y)) {
        if (v.sign() < 0) return false;
      }
      return inner(lp.b, y).sign() < 0;
    }
    case LpStatus::kUnbounded: {
      const auto& u = solution.as_unbounded();
      if (u.ray.size() != n || !nonnegative(u.ray)) return false;
      for (const auto& v : matvec(lp.A, u.ray)) {
        if (v.sign() > 0) return false;
      }
      return inner(lp.c, u.ray).sign() > 0 && primal_feasible(lp, u.point);
    }
  }
  return false;
}

LPSolution brute_force_lp(const StandardLP& lp, std::size_t basis_cap) {
  lp.check();
  const std::size_t m = lp.num_rows();
  const std::size_t n = lp.num_cols();
  require_cap(m + n, n, basis_cap);

  const Polyhedron primal = primal_region(lp);
  std::optional<Vector> best;
  Rational best_value;
  primal.for_each_vertex([&](const Vector& x) {
    Rational v = inner(lp.c, x);
    if (!best || v > best_value) {
      best = x;
      best_value = std::move(v);
    }
  });

  if (!best) {
    std::optional<Vector> cert;
    dual_region(lp, Vector(n), true).for_each_vertex([&](const Vector& y) {
      if (!cert) cert = y;
    });
    if (!cert) throw Error(ErrorCode::kInternal, "brute_force_lp: no vertex and no Farkas vector");
    return LpInfeasible{*cert};
  }

  // Extreme rays of {d >= 0 : A d <= 0}: n - 1 tight homogeneous rows.
  if (n >= 1) {
    std::optional<Vector> ray;
    for_each_subset(primal.g.size(), n - 1, [&](const std::vector<std::size_t>& tight) {
      if (ray) return;
      Rows a;
      for (std::size_t i : tight) a.push_back(primal.g[i]);
      auto d = null_line(std::move(a), n);
      if (!d) return;
      for (int flip = 0; flip < 2; ++flip) {
        bool in_cone = true;
        for (const auto& row : primal.g) {
          if (inner(row, *d).sign() > 0) {
            in_cone = false;
            break;
          }
        }
        if (in_cone && inner(lp.c, *d).sign() > 0) {
          ray = *d;
          return;
        }
        for (auto& x : *d) x = -x;
      }
    });
    if (ray) return LpUnbounded{*ray, *best};
  }

  std::optional<Vector> dual;
  dual_region(lp, lp.c, false).for_each_vertex([&](const Vector& y) {
    if (!dual && inner(lp.b, y) == best_value) dual = y;
  });
  if (!dual) throw Error(ErrorCode::kInternal, "brute_force_lp: no dual vertex matches the optimum");
  return LpOptimal{*best, best_value, *dual};
}

Equilibrium brute_force_game(const MatrixGame& game, std::size_t max_dim) {
  const Matrix& a = game.payoff();
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m > max_dim || n > max_dim) {
    throw Error(ErrorCode::kCapExceeded, "brute_force_game: game exceeds " + std::to_string(max_dim) +
                                             " x " + std::to_string(max_dim));
  }

  // For a kernel (I, J): p_I A_IJ = v 1, sum p_I = 1 and A_IJ q_J = v 1, sum q_J = 1.
  auto indifference = [](const std::vector<Vector>& block) -> std::optional<Vector> {
    const std::size_t k = block.size();
    Rows sys(k + 1, Vector(k + 1));
    Vector rhs(k + 1);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) sys[r][c] = block[r][c];
      sys[r][k] = -1;
    }
    for (std::size_t c = 0; c < k; ++c) sys[k][c] = 1;
    rhs[k] = 1;
    return solve_square(std::move(sys), std::move(rhs));
  };

  for (std::size_t k = 1; k <= std::min(m, n); ++k) {
    std::optional<Equilibrium> found;
    for_each_subset(m, k, [&](const std::vector<std::size_t>& rows) {
      if (found) return;
      for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
        if (found) return;
        std::vector<Vector> by_col(k, Vector(k));  // row r: column cols[r] of A_IJ
        std::vector<Vector> by_row(k, Vector(k));
        for (std::size_t r = 0; r < k; ++r) {
          for (std::size_t c = 0; c < k; ++c) {
            by_row[r][c] = a(rows[r], cols[c]);
            by_col[c][r] = a(rows[r], cols[c]);
          }
        }
        const auto p_sol = indifference(by_col);
        const auto q_sol = indifference(by_row);
        if (!p_sol || !q_sol || (*p_sol)[k] != (*q_sol)[k]) return;
        Vector p(m);
        Vector q(n);
        for (std::size_t r = 0; r < k; ++r) {
          p[rows[r]] = (*p_sol)[r];
          q[cols[r]] = (*q_sol)[r];
        }
        if (!nonnegative(p) || !nonnegative(q)) return;
        Equilibrium e{validate_strategy(std::move(p)), validate_strategy(std::move(q)), (*p_sol)[k]};
        if (verify_equilibrium(game, e)) found = std::move(e);
      });
    });
    if (found) return *found;
  }
  throw Error(ErrorCode::kInternal, "brute_force_game: no kernel yields an equilibrium");
}

CountReport check_reduction_counts(const ApproxProblem& problem, std::size_t m, std::size_t n) {
  CountReport r;
  r.m = m;
  r.n = n;
  r.dimension = m + n + 1;
  r.expected_functions = problem.norm() == Norm::kSup ? 2 * r.dimension + 2 : 4 * r.dimension + 2;
  r.actual_functions = problem.size();
  r.arity = problem.arity();
  r.ok = r.actual_functions == r.expected_functions && r.arity == r.dimension;
  if (problem.norm() == Norm::kSup) {
    r.quoted_sup_count = 2 * m + 2 * n + 3;
    r.quoted_count_differs = r.quoted_sup_count != r.actual_functions;
  }
  return r;
}

}  // namespace gamefit
