#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "gamefit/rational.hpp"

namespace gamefit {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Rational& fill = Rational{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }

  Vector row_vector(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;

  // Every entry shifted by `offset` (the M + c notation).
  Matrix plus_scalar(const Rational& offset) const;
  Matrix scaled(const Rational& factor) const;

  Vector times(const Vector& x) const;       // M x
  Vector left_times(const Vector& y) const;  // y^T M

  bool is_skew_symmetric() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// (min entry, max entry).
std::pair<Rational, Rational> mat_extreme(const Matrix& m);

/// max(1, max over entries of max(|numerator|, denominator)).
Rational beta_bound(const Matrix& m);

}  // namespace gamefit
