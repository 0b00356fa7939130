#include "gamefit/model.hpp"

#include "gamefit/error.hpp"

namespace gamefit {
namespace {

void require_same_arity(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw Error(ErrorCode::kDimensionMismatch, what);
}

}  // namespace

AffineFunction AffineFunction::variable(std::size_t arity, std::size_t index) {
  AffineFunction f = zero(arity);
  f.coeffs.at(index) = 1;
  return f;
}

AffineFunction& AffineFunction::operator+=(const AffineFunction& rhs) {
  require_same_arity(arity(), rhs.arity(), "affine +: arity mismatch");
  constant += rhs.constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] += rhs.coeffs[i];
  return *this;
}

AffineFunction& AffineFunction::operator-=(const AffineFunction& rhs) {
  require_same_arity(arity(), rhs.arity(), "affine -: arity mismatch");
  constant -= rhs.constant;
  for (std::size_t i = 0; i < coeffs.size(); ++i) coeffs[i] -= rhs.coeffs[i];
  return *this;
}

AffineFunction& AffineFunction::operator*=(const Rational& factor) {
  constant *= factor;
  for (auto& c : coeffs) c *= factor;
  return *this;
}

Rational evaluate_affine(const AffineFunction& f, const Vector& x) {
  require_same_arity(f.arity(), x.size(), "evaluate_affine: arity mismatch");
  Rational value = f.constant;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!f.coeffs[i].is_zero()) value += f.coeffs[i] * x[i];
  }
  return value;
}

std::string_view to_string(Norm norm) { return norm == Norm::kSup ? "sup" : "sum"; }

ApproxProblem::ApproxProblem(Norm norm, std::vector<AffineFunction> functions)
    : norm_(norm), functions_(std::move(functions)) {
  if (functions_.empty()) throw Error(ErrorCode::kEmpty, "approximation problem needs m >= 1");
  arity_ = functions_.front().arity();
  for (const auto& f : functions_) {
    require_same_arity(f.arity(), arity_, "approximation problem: functions disagree on arity");
  }
}

Rational evaluate_objective(const ApproxProblem& problem, const Vector& x) {
  Rational acc;
  for (const auto& f : problem.functions()) {
    const Rational v = abs(evaluate_affine(f, x));
    if (problem.norm() == Norm::kSum) {
      acc += v;
    } else if (v > acc) {
      acc = v;
    }
  }
  return acc;
}

MatrixGame::MatrixGame(Matrix payoff) : payoff_(std::move(payoff)) {
  if (payoff_.rows() == 0 || payoff_.cols() == 0) {
    throw Error(ErrorCode::kEmpty, "matrix game needs at least one row and column");
  }
}

MixedStrategy MixedStrategy::uniform(std::size_t size) {
  return MixedStrategy(Vector(size, Rational(mpz_class(1), mpz_class(size))));
}

MixedStrategy MixedStrategy::pure(std::size_t size, std::size_t index) {
  Vector w(size);
  w.at(index) = 1;
  return MixedStrategy(std::move(w));
}

MixedStrategy validate_strategy(Vector x) {
  if (x.empty()) throw Error(ErrorCode::kEmpty, "strategy has no entries");
  for (const auto& w : x) {
    if (w.sign() < 0) {
      throw Error(ErrorCode::kNegativeEntry, "strategy has negative entry " + w.to_string());
    }
  }
  if (const Rational total = sum(x); total != 1) {
    throw Error(ErrorCode::kSumNotOne, "strategy sums to " + total.to_string());
  }
  return MixedStrategy(std::move(x));
}

bool satisfies_equilibrium(const Matrix& payoff, const Equilibrium& e) {
  if (e.row.size() != payoff.rows() || e.col.size() != payoff.cols()) return false;
  for (const auto& x : payoff.left_times(e.row.weights())) {
    if (x < e.value) return false;
  }
  for (const auto& x : payoff.times(e.col.weights())) {
    if (x > e.value) return false;
  }
  return true;
}

std::string_view to_string(Sense s) { return s == Sense::kMin ? "min" : "max"; }

std::string_view to_string(Relation r) {
  switch (r) {
    case Relation::kLe: return "<=";
    case Relation::kGe: return ">=";
    case Relation::kEq: return "=";
  }
  return "?";
}

std::string_view to_string(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal: return "OPTIMAL";
    case LpStatus::kInfeasible: return "INFEASIBLE";
    case LpStatus::kUnbounded: return "UNBOUNDED";
  }
  return "?";
}

void LinearProgram::check() const {
  const std::size_t n = arity();
  if (!nonnegative.empty()) {
    require_same_arity(nonnegative.size(), n, "LP: nonnegativity flags disagree with arity");
  }
  for (const auto& c : constraints) {
    require_same_arity(c.lhs.arity(), n, "LP: constraint lhs arity");
    require_same_arity(c.rhs.arity(), n, "LP: constraint rhs arity");
  }
}

bool LinearProgram::is_feasible(const Vector& x) const {
  check();
  if (x.size() != arity()) return false;
  for (std::size_t j = 0; j < nonnegative.size(); ++j) {
    if (nonnegative[j] && x[j].sign() < 0) return false;
  }
  for (const auto& c : constraints) {
    const Rational l = evaluate_affine(c.lhs, x);
    const Rational r = evaluate_affine(c.rhs, x);
    switch (c.relation) {
      case Relation::kLe:
        if (l > r) return false;
        break;
      case Relation::kGe:
        if (l < r) return false;
        break;
      case Relation::kEq:
        if (l != r) return false;
        break;
    }
  }
  return true;
}

void StandardLP::check() const {
  require_same_arity(c.size(), A.cols(), "standard LP: c length vs columns");
  require_same_arity(b.size(), A.rows(), "standard LP: b length vs rows");
}

}  // namespace gamefit
