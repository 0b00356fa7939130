#include <random>

#include <gtest/gtest.h>

#include "gamefit/error.hpp"
#include "gamefit/matrix.hpp"
#include "gamefit/rational.hpp"
#include "test_support.hpp"

namespace gamefit {
namespace {

using testing::R;

ErrorCode code_of(const char* text) {
  try {
    (void)Rational::parse(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

TEST(RationalParse, CanonicalizesFractions) {
  EXPECT_EQ(R("3/6"), Rational(mpz_class(1), mpz_class(2)));
  EXPECT_EQ(R("3/6").to_string(), "1/2");
  EXPECT_EQ(R("-4/2").to_string(), "-2");
  EXPECT_EQ(R("0/7").to_string(), "0");
  EXPECT_EQ(R("0/7").denominator(), 1);
}

TEST(RationalParse, DecimalsAreExact) {
  EXPECT_EQ(R("0.25"), Rational(mpz_class(1), mpz_class(4)));
  EXPECT_EQ(R("-1.5").to_string(), "-3/2");
  EXPECT_EQ(R("0.1") + R("0.2"), R("3/10"));
}

TEST(RationalParse, Errors) {
  EXPECT_EQ(code_of("1/0"), ErrorCode::kZeroDenominator);
  for (const char* bad : {"", "-", "1/", "/2", "1.", ".5", "1/2/3", "1e3", "abc", " 1", "1/-2"}) {
    EXPECT_EQ(code_of(bad), ErrorCode::kParse) << '"' << bad << '"';
  }
}

TEST(RationalParse, BigValuesRoundTrip) {
  const char* big = "-123456789012345678901234567891/98765432109876543210987654320";
  EXPECT_EQ(R(big).to_string(), big);
  EXPECT_EQ(R("-123456789012345678901234567890/98765432109876543210987654321").to_string(),
            "-137174210/109739369");
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW((void)(R("1") / R("0")), Error);
}

TEST(Rational, FieldLawsOnRandomValues) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational a = testing::random_rational(rng, 50, 30);
    const Rational b = testing::random_rational(rng, 50, 30);
    const Rational c = testing::random_rational(rng, 50, 30);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    // Exactly one of <, ==, > holds, and order is transitive.
    EXPECT_EQ((a < b) + (a == b) + (a > b), 1);
    if (a <= b && b <= c) EXPECT_LE(a, c);
    // Canonical form.
    EXPECT_GT(a.denominator(), 0);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.numerator().get_mpz_t(), a.denominator().get_mpz_t());
    EXPECT_EQ(g, 1);
  }
}

TEST(RationalParse, FractionTimesDenominatorIsNumerator) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> num(-1000, 1000);
  std::uniform_int_distribution<int> den(1, 1000);
  for (int trial = 0; trial < 300; ++trial) {
    const int a = num(rng);
    const int b = den(rng) * (trial % 2 ? 1 : -1);
    const std::string text = std::to_string(a) + "/" + std::to_string(b < 0 ? -b : b);
    const Rational parsed = Rational::parse(text);
    EXPECT_EQ(parsed * Rational(b < 0 ? -b : b), Rational(a));
  }
}

TEST(Rational, PowAndAbs) {
  EXPECT_EQ(pow(R("2/3"), 3), R("8/27"));
  EXPECT_EQ(pow(R("5"), 0), R("1"));
  EXPECT_EQ(abs(R("-7/3")), R("7/3"));
}

TEST(MatExtreme, Examples) {
  EXPECT_EQ(mat_extreme(Matrix{{0, 1}, {-1, 0}}), std::make_pair(R("-1"), R("1")));
  EXPECT_EQ(mat_extreme(Matrix{{0}}), std::make_pair(R("0"), R("0")));
  EXPECT_EQ(mat_extreme(Matrix{{3, 1}, {0, 2}}), std::make_pair(R("0"), R("3")));
  EXPECT_THROW(mat_extreme(Matrix{}), Error);
}

TEST(BetaBound, Examples) {
  EXPECT_EQ(beta_bound(Matrix{{0, 1}, {-1, 0}}), R("1"));
  EXPECT_EQ(beta_bound(Matrix{{R("1/2")}}), R("2"));
  EXPECT_EQ(beta_bound(Matrix{{R("-7/3"), R("2")}}), R("7"));
  EXPECT_EQ(beta_bound(Matrix(2, 2)), R("1"));
}

TEST(BetaBound, IntegerMatricesUseLargestMagnitude) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix m = testing::random_int_matrix(rng, 1 + trial % 4, 1 + trial % 5, -9, 9);
    Rational expected = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (const auto& x : m.row(i)) expected = std::max(expected, abs(x));
    }
    EXPECT_EQ(beta_bound(m), expected);
  }
}

TEST(Matrix, SkewSymmetryAndProducts) {
  const Matrix m = testing::rps();
  EXPECT_TRUE(m.is_skew_symmetric());
  EXPECT_FALSE(testing::matching_pennies().is_skew_symmetric());
  EXPECT_EQ(m.times(testing::V({"1", "0", "0"})), testing::V({"0", "-1", "1"}));
  EXPECT_EQ(m.left_times(testing::V({"1", "0", "0"})), testing::V({"0", "1", "-1"}));
  EXPECT_EQ(m.transpose(), m.scaled(-1));
}

}  // namespace
}  // namespace gamefit
