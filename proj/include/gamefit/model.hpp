#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "gamefit/matrix.hpp"
#include "gamefit/rational.hpp"

namespace gamefit {

/// constant + coeffs . x
struct AffineFunction {
  Rational constant;
  Vector coeffs;

  std::size_t arity() const { return coeffs.size(); }

  static AffineFunction zero(std::size_t arity) { return {Rational{}, Vector(arity)}; }
  // The single variable x_index.
  static AffineFunction variable(std::size_t arity, std::size_t index);

  AffineFunction& operator+=(const AffineFunction& rhs);
  AffineFunction& operator-=(const AffineFunction& rhs);
  AffineFunction& operator*=(const Rational& factor);
  friend AffineFunction operator+(AffineFunction a, const AffineFunction& b) { return a += b; }
  friend AffineFunction operator-(AffineFunction a, const AffineFunction& b) { return a -= b; }
  friend AffineFunction operator*(AffineFunction a, const Rational& k) { return a *= k; }
  friend AffineFunction operator-(AffineFunction a) { return a *= Rational(-1); }

  friend bool operator==(const AffineFunction&, const AffineFunction&) = default;
};

Rational evaluate_affine(const AffineFunction& f, const Vector& x);

enum class Norm { kSup, kSum };

std::string_view to_string(Norm norm);

/// Minimize max_i |f_i| (kSup) or sum_i |f_i| (kSum) over x in Q^arity.
class ApproxProblem {
 public:
  ApproxProblem(Norm norm, std::vector<AffineFunction> functions);

  Norm norm() const { return norm_; }
  const std::vector<AffineFunction>& functions() const { return functions_; }
  std::size_t size() const { return functions_.size(); }
  std::size_t arity() const { return arity_; }

  friend bool operator==(const ApproxProblem&, const ApproxProblem&) = default;

 private:
  Norm norm_;
  std::vector<AffineFunction> functions_;
  std::size_t arity_;
};

Rational evaluate_objective(const ApproxProblem& problem, const Vector& x);

struct MatrixGame {
  explicit MatrixGame(Matrix payoff);

  const Matrix& payoff() const { return payoff_; }
  std::size_t rows() const { return payoff_.rows(); }
  std::size_t cols() const { return payoff_.cols(); }

 private:
  Matrix payoff_;
};

/// Probability vector; only obtainable through validate_strategy, so every
/// instance is nonnegative and sums to exactly one.
class MixedStrategy {
 public:
  const Vector& weights() const { return weights_; }
  std::size_t size() const { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }

  static MixedStrategy uniform(std::size_t size);
  static MixedStrategy pure(std::size_t size, std::size_t index);

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  friend MixedStrategy validate_strategy(Vector x);
  explicit MixedStrategy(Vector w) : weights_(std::move(w)) {}
  Vector weights_;
};

/// Throws kNegativeEntry or kSumNotOne.
MixedStrategy validate_strategy(Vector x);

struct Equilibrium {
  MixedStrategy row;
  MixedStrategy col;
  Rational value;
};

/// Exact check of pA >= v >= Aq. Returns false on any violated coordinate.
bool satisfies_equilibrium(const Matrix& payoff, const Equilibrium& e);

enum class Sense { kMin, kMax };
enum class Relation { kLe, kGe, kEq };

std::string_view to_string(Sense s);
std::string_view to_string(Relation r);

struct Constraint {
  AffineFunction lhs;
  Relation relation;
  AffineFunction rhs;

  friend bool operator==(const Constraint&, const Constraint&) = default;
};

/// General LP as written by a user: constraints are kept as (lhs, rel, rhs)
/// pairs of affine functions; variables are free unless flagged nonnegative.
struct LinearProgram {
  Sense sense = Sense::kMax;
  AffineFunction objective;
  std::vector<Constraint> constraints;
  std::vector<bool> nonnegative;

  std::size_t arity() const { return objective.arity(); }

  // Throws kDimensionMismatch when the parts disagree on arity.
  void check() const;
  bool is_feasible(const Vector& x) const;

  friend bool operator==(const LinearProgram&, const LinearProgram&) = default;
};

/// max c^T x subject to A x <= b, x >= 0.
struct StandardLP {
  Vector c;
  Matrix A;
  Vector b;

  std::size_t num_rows() const { return A.rows(); }
  std::size_t num_cols() const { return A.cols(); }
  void check() const;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

std::string_view to_string(LpStatus s);

struct LpOptimal {
  Vector x;
  Rational value;
  Vector dual;
};

/// y >= 0, A^T y >= 0, b^T y < 0.
struct LpInfeasible {
  Vector certificate;
};

/// A ray <= 0, ray >= 0, c^T ray > 0, plus a feasible point the ray starts from.
struct LpUnbounded {
  Vector ray;
  Vector point;
};

class LPSolution {
 public:
  LPSolution(LpOptimal o) : data_(std::move(o)) {}        // NOLINT
  LPSolution(LpInfeasible i) : data_(std::move(i)) {}     // NOLINT
  LPSolution(LpUnbounded u) : data_(std::move(u)) {}      // NOLINT

  LpStatus status() const { return static_cast<LpStatus>(data_.index()); }
  bool optimal() const { return status() == LpStatus::kOptimal; }

  const LpOptimal& as_optimal() const { return std::get<LpOptimal>(data_); }
  const LpInfeasible& as_infeasible() const { return std::get<LpInfeasible>(data_); }
  const LpUnbounded& as_unbounded() const { return std::get<LpUnbounded>(data_); }

 private:
  std::variant<LpOptimal, LpInfeasible, LpUnbounded> data_;
};

}  // namespace gamefit
