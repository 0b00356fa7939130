#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace gamefit {

/// Exact rational number, always held in canonical form: the denominator is
/// positive, numerator and denominator are coprime, and zero is 0/1.
///
/// Text form is "a" or "a/b". Parsing additionally accepts finite decimals
/// ("0.25"), which are converted exactly; they are never emitted.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral T>
  Rational(T value) : q_(static_cast<long>(value)) {}  // NOLINT(implicit)

  template <std::unsigned_integral T>
  Rational(T value) : q_(static_cast<unsigned long>(value)) {}  // NOLINT

  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q);

  static Rational parse(std::string_view text);

  const mpz_class& numerator() const { return q_.get_num(); }
  const mpz_class& denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return denominator() == 1; }

  std::string to_string() const;

  Rational& operator+=(const Rational& rhs) {
    q_ += rhs.q_;
    return *this;
  }
  Rational& operator-=(const Rational& rhs) {
    q_ -= rhs.q_;
    return *this;
  }
  Rational& operator*=(const Rational& rhs) {
    q_ *= rhs.q_;
    return *this;
  }
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

 private:
  mpq_class q_{0};
};

Rational abs(const Rational& r);

/// base^exponent for a nonnegative integer exponent.
Rational pow(const Rational& base, unsigned exponent);

/// Parses the text syntax accepted by Rational::parse.
inline Rational rat_parse(std::string_view text) { return Rational::parse(text); }

using Vector = std::vector<Rational>;

Rational dot(const Vector& a, const Vector& b);
Rational sum(const Vector& v);
std::string to_string(const Vector& v);

}  // namespace gamefit
