#include "gamefit/matrix.hpp"

#include <algorithm>

#include "gamefit/error.hpp"

namespace gamefit {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::kDimensionMismatch, "ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows) {
  Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) {
      throw Error(ErrorCode::kDimensionMismatch, "ragged matrix rows");
    }
    std::copy(rows[i].begin(), rows[i].end(), m.row(i).begin());
  }
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  const auto span = row(r);
  return {span.begin(), span.end()};
}

Vector Matrix::column(std::size_t c) const {
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::plus_scalar(const Rational& offset) const {
  Matrix out = *this;
  for (auto& x : out.data_) x += offset;
  return out;
}

Matrix Matrix::scaled(const Rational& factor) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= factor;
  return out;
}

Vector Matrix::times(const Vector& x) const {
  if (x.size() != cols_) throw Error(ErrorCode::kDimensionMismatch, "M x: length mismatch");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * x[j];
  }
  return out;
}

Vector Matrix::left_times(const Vector& y) const {
  if (y.size() != rows_) throw Error(ErrorCode::kDimensionMismatch, "y M: length mismatch");
  Vector out(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (y[i].is_zero()) continue;
    for (std::size_t j = 0; j < cols_; ++j) out[j] += y[i] * (*this)(i, j);
  }
  return out;
}

bool Matrix::is_skew_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i; j < cols_; ++j) {
      if ((*this)(i, j) != -(*this)(j, i)) return false;
    }
  }
  return true;
}

std::pair<Rational, Rational> mat_extreme(const Matrix& m) {
  if (m.empty()) throw Error(ErrorCode::kEmpty, "mat_extreme: empty matrix");
  Rational lo = m(0, 0);
  Rational hi = m(0, 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& x : m.row(i)) {
      if (x < lo) lo = x;
      if (x > hi) hi = x;
    }
  }
  return {lo, hi};
}

Rational beta_bound(const Matrix& m) {
  mpz_class beta = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (const auto& x : m.row(i)) {
      const mpz_class num = ::abs(x.numerator());
      if (num > beta) beta = num;
      if (x.denominator() > beta) beta = x.denominator();
    }
  }
  return Rational(beta, 1);
}

}  // namespace gamefit
