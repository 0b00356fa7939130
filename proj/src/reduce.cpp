#include "gamefit/reduce.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "gamefit/error.hpp"

namespace gamefit {
namespace {

void require_skew(const Matrix& m, const char* who) {
  if (m.empty()) throw Error(ErrorCode::kEmpty, std::string(who) + ": empty matrix");
  if (!m.is_skew_symmetric()) {
    throw Error(ErrorCode::kNotSkewSymmetric, std::string(who) + ": matrix is not skew-symmetric");
  }
}

AffineFunction all_ones(std::size_t arity, const Rational& constant, const Rational& coeff) {
  return {constant, Vector(arity, coeff)};
}

// f extended by `extra` zero coefficients.
AffineFunction widen(const AffineFunction& f, std::size_t extra) {
  AffineFunction g = f;
  g.coeffs.resize(f.arity() + extra);
  return g;
}

Vector slice(const Vector& v, std::size_t begin, std::size_t count) {
  return {v.begin() + static_cast<std::ptrdiff_t>(begin),
          v.begin() + static_cast<std::ptrdiff_t>(begin + count)};
}

Vector divided(Vector v, const Rational& d) {
  for (auto& x : v) x /= d;
  return v;
}

ApproxLp fit_to_lp(const ApproxProblem& problem, bool one_bound_per_function) {
  const std::size_t n = problem.arity();
  const std::size_t m = problem.size();
  const std::size_t aux = one_bound_per_function ? m : 1;
  const std::size_t arity = n + aux;

  LinearProgram lp;
  lp.sense = Sense::kMin;
  lp.objective = AffineFunction::zero(arity);
  for (std::size_t k = 0; k < aux; ++k) lp.objective.coeffs[n + k] = 1;
  lp.nonnegative.assign(arity, false);
  // The bounds force every t >= 0 anyway; flagging it keeps the standard form
  // from splitting t into two columns.
  for (std::size_t k = 0; k < aux; ++k) lp.nonnegative[n + k] = true;

  for (std::size_t i = 0; i < m; ++i) {
    const AffineFunction f = widen(problem.functions()[i], aux);
    const AffineFunction t = AffineFunction::variable(arity, n + (one_bound_per_function ? i : 0));
    lp.constraints.push_back({f, Relation::kLe, t});
    lp.constraints.push_back({f, Relation::kGe, -t});
  }
  return {std::move(lp), ProjectionMap{n, aux}};
}

}  // namespace

Rational choose_offset(const Matrix& a) {
  const auto [lo, hi] = mat_extreme(a);
  const Rational c = Rational(1) - lo;
  return c.sign() > 0 ? c : Rational{};
}

Symmetrized symmetrize(const Matrix& a, const Rational& offset) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (m == 0 || n == 0) throw Error(ErrorCode::kEmpty, "symmetrize: empty payoff");
  const std::size_t dim = m + n + 1;
  const std::size_t last = dim - 1;

  Matrix s(dim, dim);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational shifted = a(i, j) + offset;
      if (shifted.sign() <= 0) {
        throw Error(ErrorCode::kOffsetTooSmall,
                    "symmetrize: A + C has non-positive entry " + shifted.to_string());
      }
      s(i, m + j) = shifted;
      s(m + j, i) = -shifted;
    }
    s(i, last) = -1;
    s(last, i) = 1;
  }
  for (std::size_t j = 0; j < n; ++j) {
    s(m + j, last) = 1;
    s(last, m + j) = -1;
  }
  return {std::move(s), SymmetrizationRecord{offset, m, n}};
}

MixedStrategy embed_equilibrium(const Equilibrium& e, const SymmetrizationRecord& rec) {
  if (e.row.size() != rec.m || e.col.size() != rec.n) {
    throw Error(ErrorCode::kDimensionMismatch, "embed_equilibrium: strategy sizes vs record");
  }
  const Rational shifted_value = e.value + rec.offset;
  const Rational denom = Rational(2) + shifted_value;
  if (denom.is_zero()) {
    throw Error(ErrorCode::kInternal, "embed_equilibrium: 2 + v + C vanished");
  }
  Vector z;
  z.reserve(rec.dimension());
  for (const auto& w : e.row.weights()) z.push_back(w / denom);
  for (const auto& w : e.col.weights()) z.push_back(w / denom);
  z.push_back(shifted_value / denom);
  return validate_strategy(std::move(z));
}

Equilibrium extract_equilibrium(const MixedStrategy& z, const SymmetrizationRecord& rec) {
  if (z.size() != rec.dimension()) {
    throw Error(ErrorCode::kDimensionMismatch, "extract_equilibrium: strategy size vs record");
  }
  const Rational& last = z[rec.dimension() - 1];
  if (last.is_zero()) throw Error(ErrorCode::kZeroLastEntry, "extract_equilibrium: last entry is 0");

  Vector p = slice(z.weights(), 0, rec.m);
  Vector q = slice(z.weights(), rec.m, rec.n);
  const Rational p_mass = sum(p);
  const Rational q_mass = sum(q);
  if (p_mass.is_zero() || q_mass.is_zero()) {
    throw Error(ErrorCode::kZeroMass, "extract_equilibrium: a player block carries no mass");
  }
  Rational value = last / p_mass - rec.offset;
  return {validate_strategy(divided(std::move(p), p_mass)),
          validate_strategy(divided(std::move(q), q_mass)), std::move(value)};
}

Equilibrium extract_equilibrium(const MixedStrategy& z, const SymmetrizationRecord& rec,
                                const Matrix& payoff) {
  Equilibrium e = extract_equilibrium(z, rec);
  if (!satisfies_equilibrium(payoff, e)) {
    throw Error(ErrorCode::kNotOptimal, "extract_equilibrium: strategy is not optimal for M");
  }
  return e;
}

ChebyshevReduction game_to_chebyshev(const Matrix& m) {
  require_skew(m, "game_to_chebyshev");
  const std::size_t dim = m.rows();
  const Rational c = mat_extreme(m).second;
  if (c.is_zero()) return {std::nullopt, ChebyshevGameRecord{c, Rational(1), dim}};

  const Rational scale = Rational(1) / c;
  const Matrix shifted = m.scaled(scale).plus_scalar(1);

  std::vector<AffineFunction> fs;
  fs.reserve(2 * dim + 2);
  for (std::size_t i = 0; i < dim; ++i) fs.push_back({Rational{}, shifted.row_vector(i)});
  for (std::size_t i = 0; i < dim; ++i) {
    AffineFunction f = AffineFunction::variable(dim, i) * Rational(-1);
    f.constant = 1;
    fs.push_back(std::move(f));
  }
  fs.push_back(all_ones(dim, 0, 1));
  fs.push_back(all_ones(dim, 2, -1));
  return {ApproxProblem(Norm::kSup, std::move(fs)), ChebyshevGameRecord{c, scale, dim}};
}

MixedStrategy chebyshev_argmin_to_strategy(const ApproxProblem& problem, const Vector& x,
                                           const ChebyshevGameRecord& rec) {
  if (rec.c.is_zero()) return validate_strategy(x);
  const std::size_t dim = rec.dimension;
  if (problem.norm() != Norm::kSup || problem.size() != 2 * dim + 2 || problem.arity() != dim) {
    throw Error(ErrorCode::kDimensionMismatch, "chebyshev_argmin_to_strategy: problem vs record");
  }
  if (const Rational obj = evaluate_objective(problem, x); obj > 1) {
    throw Error(ErrorCode::kNotOptimal,
                "chebyshev_argmin_to_strategy: objective " + obj.to_string() + " exceeds 1");
  }
  MixedStrategy s = validate_strategy(x);
  // (M/c + 1) x <= 1 with sum x = 1 is M x <= 0.
  for (std::size_t i = 0; i < dim; ++i) {
    if (evaluate_affine(problem.functions()[i], x) > 1) {
      throw Error(ErrorCode::kNotOptimal, "chebyshev_argmin_to_strategy: M x has a positive entry");
    }
  }
  return s;
}

L1Reduction game_to_l1(const Matrix& m) {
  require_skew(m, "game_to_l1");
  const std::size_t dim = m.rows();
  const Rational c = mat_extreme(m).second;
  if (c.is_zero()) return {std::nullopt, L1GameRecord{c, dim}};

  std::vector<AffineFunction> fs;
  fs.reserve(4 * dim + 2);
  for (std::size_t i = 0; i < dim; ++i) fs.push_back({Rational{}, m.row_vector(i)});
  for (std::size_t i = 0; i < dim; ++i) fs.push_back({c, m.row_vector(i)});
  for (std::size_t i = 0; i < dim; ++i) fs.push_back(AffineFunction::variable(dim, i));
  for (std::size_t i = 0; i < dim; ++i) {
    AffineFunction f = AffineFunction::variable(dim, i) * Rational(-1);
    f.constant = 1;
    fs.push_back(std::move(f));
  }
  fs.push_back(all_ones(dim, -1, 1));
  fs.push_back(all_ones(dim, 1, -1));
  return {ApproxProblem(Norm::kSum, std::move(fs)), L1GameRecord{c, dim}};
}

MixedStrategy l1_argmin_to_strategy(const ApproxProblem& problem, const Vector& x,
                                    const L1GameRecord& rec) {
  if (rec.c.is_zero()) return validate_strategy(x);
  const std::size_t dim = rec.dimension;
  if (problem.norm() != Norm::kSum || problem.size() != 4 * dim + 2 || problem.arity() != dim) {
    throw Error(ErrorCode::kDimensionMismatch, "l1_argmin_to_strategy: problem vs record");
  }
  const Rational bound = rec.optimum();
  if (const Rational obj = evaluate_objective(problem, x); obj > bound) {
    throw Error(ErrorCode::kNotOptimal, "l1_argmin_to_strategy: objective " + obj.to_string() +
                                            " exceeds " + bound.to_string());
  }
  MixedStrategy s = validate_strategy(x);
  for (std::size_t i = 0; i < dim; ++i) {
    if (evaluate_affine(problem.functions()[i], x).sign() > 0) {
      throw Error(ErrorCode::kNotOptimal, "l1_argmin_to_strategy: M x has a positive entry");
    }
  }
  return s;
}

Vector ProjectionMap::recover(const Vector& lp_x) const {
  if (lp_x.size() != arity + auxiliary) {
    throw Error(ErrorCode::kDimensionMismatch, "ProjectionMap: solution length");
  }
  return slice(lp_x, 0, arity);
}

ApproxLp cheb_to_lp(const ApproxProblem& problem) {
  if (problem.norm() != Norm::kSup) throw Error(ErrorCode::kWrongNorm, "cheb_to_lp needs a sup-norm problem");
  return fit_to_lp(problem, false);
}

ApproxLp l1_to_lp(const ApproxProblem& problem) {
  if (problem.norm() != Norm::kSum) throw Error(ErrorCode::kWrongNorm, "l1_to_lp needs a sum-norm problem");
  return fit_to_lp(problem, true);
}

ApproxProblem l1_to_cheb_naive(const ApproxProblem& problem, std::size_t cap) {
  if (problem.norm() != Norm::kSum) {
    throw Error(ErrorCode::kWrongNorm, "l1_to_cheb_naive needs a sum-norm problem");
  }
  const std::size_t m = problem.size();
  if (m > cap || m > 63) {
    throw Error(ErrorCode::kExponentialBlowup,
                "l1_to_cheb_naive: " + std::to_string(m) + " functions exceed cap " + std::to_string(cap));
  }
  const auto& f = problem.functions();
  const std::uint64_t patterns = std::uint64_t{1} << (m - 1);
  std::vector<AffineFunction> out;
  out.reserve(patterns);
  for (std::uint64_t mask = 0; mask < patterns; ++mask) {
    AffineFunction g = f[0];
    for (std::size_t j = 1; j < m; ++j) {
      if (mask >> (j - 1) & 1U) {
        g -= f[j];
      } else {
        g += f[j];
      }
    }
    out.push_back(std::move(g));
  }
  return ApproxProblem(Norm::kSup, std::move(out));
}

GameLpPair game_to_lp_pair(const MatrixGame& game) {
  const Matrix& a = game.payoff();
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  LinearProgram row;
  row.sense = Sense::kMax;
  row.objective = AffineFunction::variable(m + 1, m);
  row.nonnegative.assign(m + 1, true);
  row.nonnegative[m] = false;
  const AffineFunction v = AffineFunction::variable(m + 1, m);
  for (std::size_t j = 0; j < n; ++j) {
    AffineFunction pay = AffineFunction::zero(m + 1);
    for (std::size_t i = 0; i < m; ++i) pay.coeffs[i] = a(i, j);
    row.constraints.push_back({std::move(pay), Relation::kGe, v});
  }
  AffineFunction p_total = AffineFunction::zero(m + 1);
  std::fill_n(p_total.coeffs.begin(), m, Rational(1));
  row.constraints.push_back({std::move(p_total), Relation::kEq, all_ones(m + 1, 1, 0)});

  LinearProgram col;
  col.sense = Sense::kMin;
  col.objective = AffineFunction::variable(n + 1, n);
  col.nonnegative.assign(n + 1, true);
  col.nonnegative[n] = false;
  const AffineFunction w = AffineFunction::variable(n + 1, n);
  for (std::size_t i = 0; i < m; ++i) {
    AffineFunction pay = AffineFunction::zero(n + 1);
    for (std::size_t j = 0; j < n; ++j) pay.coeffs[j] = a(i, j);
    col.constraints.push_back({std::move(pay), Relation::kLe, w});
  }
  AffineFunction q_total = AffineFunction::zero(n + 1);
  std::fill_n(q_total.coeffs.begin(), n, Rational(1));
  col.constraints.push_back({std::move(q_total), Relation::kEq, all_ones(n + 1, 1, 0)});

  return {std::move(row), std::move(col)};
}

Vector VariableMap::to_original(const Vector& standard_x) const {
  if (standard_x.size() != standard_cols) {
    throw Error(ErrorCode::kDimensionMismatch, "VariableMap: standard vector length");
  }
  Vector x(columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    x[j] = standard_x[columns[j].positive];
    if (columns[j].negative) x[j] -= standard_x[*columns[j].negative];
  }
  return x;
}

Vector VariableMap::to_standard(const Vector& original_x) const {
  if (original_x.size() != columns.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "VariableMap: original vector length");
  }
  Vector xs(standard_cols);
  for (std::size_t j = 0; j < columns.size(); ++j) {
    const Rational& v = original_x[j];
    if (!columns[j].negative) {
      xs[columns[j].positive] = v;
    } else if (v.sign() >= 0) {
      xs[columns[j].positive] = v;
    } else {
      xs[*columns[j].negative] = -v;
    }
  }
  return xs;
}

Rational VariableMap::value_to_original(const Rational& standard_value) const {
  return negated ? constant - standard_value : constant + standard_value;
}

Rational VariableMap::value_to_standard(const Rational& original_value) const {
  return negated ? constant - original_value : original_value - constant;
}

Standardized lp_to_standard(const LinearProgram& lp) {
  lp.check();
  const std::size_t n = lp.arity();

  VariableMap map;
  map.columns.resize(n);
  std::size_t next = 0;
  for (std::size_t j = 0; j < n; ++j) {
    map.columns[j].positive = next++;
    const bool nonneg = !lp.nonnegative.empty() && lp.nonnegative[j];
    if (!nonneg) map.columns[j].negative = next++;
  }
  map.standard_cols = next;
  map.negated = lp.sense == Sense::kMin;
  map.constant = lp.objective.constant;

  auto expand = [&](const Vector& coeffs, const Rational& sign) {
    Vector row(map.standard_cols);
    for (std::size_t j = 0; j < n; ++j) {
      if (coeffs[j].is_zero()) continue;
      row[map.columns[j].positive] = sign * coeffs[j];
      if (map.columns[j].negative) row[*map.columns[j].negative] = -(sign * coeffs[j]);
    }
    return row;
  };

  std::vector<Vector> rows;
  Vector b;
  for (const auto& con : lp.constraints) {
    const AffineFunction g = con.lhs - con.rhs;  // g(x) rel 0
    if (con.relation != Relation::kGe) {
      rows.push_back(expand(g.coeffs, 1));
      b.push_back(-g.constant);
    }
    if (con.relation != Relation::kLe) {
      rows.push_back(expand(g.coeffs, -1));
      b.push_back(g.constant);
    }
  }

  StandardLP out;
  out.c = expand(lp.objective.coeffs, map.negated ? Rational(-1) : Rational(1));
  out.A = rows.empty() ? Matrix(0, map.standard_cols) : Matrix::from_rows(rows);
  out.b = std::move(b);
  return {std::move(out), std::move(map)};
}

Matrix standard_lp_to_game(const StandardLP& lp) {
  lp.check();
  const std::size_t m = lp.num_rows();
  const std::size_t n = lp.num_cols();
  const std::size_t dim = m + n + 1;
  const std::size_t last = dim - 1;
  Matrix g(dim, dim);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      g(i, m + j) = lp.A(i, j);
      g(m + j, i) = -lp.A(i, j);
    }
    g(i, last) = -lp.b[i];
    g(last, i) = lp.b[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    g(m + j, last) = lp.c[j];
    g(last, m + j) = -lp.c[j];
  }
  return g;
}

AlphaBound alpha_bound(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kDimensionMismatch, "alpha_bound: matrix not square");
  const std::size_t dim = m.rows();
  if (dim < 2) throw Error(ErrorCode::kTooSmall, "alpha_bound: needs N >= 2");
  const Rational beta = beta_bound(m);
  const auto n = static_cast<unsigned>(dim);
  const Rational denom = pow(beta, 2 * n) * pow(Rational(n), (n + 1) / 2);
  return {beta, dim, Rational(1) / denom};
}

Matrix modify_game(const Matrix& m, const Rational& alpha) {
  if (alpha.sign() <= 0 || alpha >= 1) {
    throw Error(ErrorCode::kAlphaOutOfRange, "modify_game: alpha must lie in (0, 1)");
  }
  if (m.cols() == 0) throw Error(ErrorCode::kEmpty, "modify_game: empty matrix");
  const Rational factor = alpha / (Rational(1) - alpha);
  const std::size_t last = m.cols() - 1;
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const Rational shift = factor * m(i, last);
    if (shift.is_zero()) continue;
    for (std::size_t j = 0; j < last; ++j) out(i, j) += shift;
  }
  return out;
}

MixedStrategy shift_mass_to_last(const MixedStrategy& modified_strategy, const Rational& alpha) {
  if (alpha.sign() <= 0 || alpha >= 1) {
    throw Error(ErrorCode::kAlphaOutOfRange, "shift_mass_to_last: alpha must lie in (0, 1)");
  }
  const std::size_t dim = modified_strategy.size();
  const Rational factor = alpha / (Rational(1) - alpha);
  Vector u = modified_strategy.weights();
  Rational head;
  for (std::size_t j = 0; j + 1 < dim; ++j) head += u[j];
  u[dim - 1] += factor * head;
  const Rational total = sum(u);
  return validate_strategy(divided(std::move(u), total));
}

MixedStrategy recover_from_modified(const MixedStrategy& modified_strategy, const Rational& alpha,
                                    const Matrix& m) {
  if (m.cols() != modified_strategy.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "recover_from_modified: size vs matrix");
  }
  MixedStrategy x = shift_mass_to_last(modified_strategy, alpha);
  for (const auto& entry : m.times(x.weights())) {
    if (entry.sign() > 0) {
      throw Error(ErrorCode::kNotOptimal, "recover_from_modified: M x has a positive entry");
    }
  }
  return x;
}

GamePipelineTrace solve_lp_via_game_traced(const LinearProgram& lp, const GameSolver& solve_game,
                                           const StandardSolver& auxiliary) {
  GamePipelineTrace trace{lp_to_standard(lp), {}, {}, {}, {}, std::nullopt};
  const StandardLP& s = trace.standard.lp;
  const std::size_t rows = s.num_rows();
  const std::size_t cols = s.num_cols();

  trace.game = standard_lp_to_game(s);
  trace.alpha = alpha_bound(trace.game);
  trace.modified = modify_game(trace.game, trace.alpha.alpha);
  const Equilibrium e = solve_game(MatrixGame(trace.modified));
  trace.modified_value = e.value;

  if (e.value.is_zero()) {
    trace.recovered = recover_from_modified(e.col, trace.alpha.alpha, trace.game);
    const Vector& z = trace.recovered->weights();
    const Rational& t = z.back();
    Vector dual = divided(slice(z, 0, rows), t);
    Vector xs = divided(slice(z, rows, cols), t);
    const Rational standard_value = cols ? dot(s.c, xs) : Rational{};
    trace.solution = LpOptimal{trace.standard.map.to_original(xs),
                               trace.standard.map.value_to_original(standard_value), std::move(dual)};
    return trace;
  }
  if (e.value.sign() < 0) {
    throw Error(ErrorCode::kInternal, "solve_lp_via_game: modified game has negative value");
  }

  // No optimal solution: tell infeasible from unbounded.
  const LPSolution feasibility = auxiliary(StandardLP{Vector(cols), s.A, s.b});
  if (feasibility.status() == LpStatus::kInfeasible) {
    trace.solution = feasibility;
    return trace;
  }
  // Feasible without an optimum: find d >= 0 with A d <= 0 and c^T d = 1.
  Matrix cone(rows + 1, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) cone(i, j) = s.A(i, j);
  }
  for (std::size_t j = 0; j < cols; ++j) cone(rows, j) = s.c[j];
  Vector cone_b(rows + 1);
  cone_b[rows] = 1;
  const LPSolution ray = auxiliary(StandardLP{s.c, std::move(cone), std::move(cone_b)});
  if (!ray.optimal() || ray.as_optimal().value != 1) {
    throw Error(ErrorCode::kInternal,
                "solve_lp_via_game: modified game value is nonzero but the LP has an optimum");
  }
  trace.solution = LpUnbounded{ray.as_optimal().x, feasibility.as_optimal().x};
  return trace;
}

}  // namespace gamefit
