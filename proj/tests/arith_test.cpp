#include <gtest/gtest.h>

#include "chow/param_poly.hpp"
#include "chow/rational.hpp"

using chow::ParamPoly;
using chow::Rational;
using chow::binomial;
using chow::factorial;

TEST(Rational, ParsesAndReduces) {
  EXPECT_EQ(Rational::parse("6/4"), Rational(3, 2));
  EXPECT_EQ(Rational::parse("-7").str(), "-7");
  EXPECT_EQ(Rational(2, -4).str(), "-1/2");
  EXPECT_THROW(Rational::parse("1/0"), std::exception);
  EXPECT_THROW(Rational::parse("x"), std::exception);
}

TEST(Rational, Arithmetic) {
  const Rational a(1, 3), b(1, 6);
  EXPECT_EQ(a + b, Rational(1, 2));
  EXPECT_EQ(a - b, b);
  EXPECT_EQ(a * b, Rational(1, 18));
  EXPECT_EQ(a / b, Rational(2));
  EXPECT_LT(b, a);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Rational, BinomialAndFactorial) {
  EXPECT_EQ(binomial(6, 2), Rational(15));
  EXPECT_EQ(binomial(3, 5), Rational(0));
  EXPECT_EQ(factorial(0), Rational(1));
  EXPECT_EQ(factorial(10), Rational(3628800));
  // Exact far beyond machine words.
  EXPECT_EQ(factorial(25).str(), "15511210043330985984000000");
}

TEST(ParamPoly, FormatsInGradedOrder) {
  const ParamPoly n = ParamPoly::variable(0);
  EXPECT_EQ((ParamPoly(4176) + n * n * Rational(144)).format({"n"}), "4176 + 144*n^2");
  EXPECT_EQ((ParamPoly(-688) - n * n * Rational(24)).format({"n"}), "-688 - 24*n^2");
  EXPECT_EQ(ParamPoly().format({}), "0");
  const ParamPoly d = ParamPoly::variable(2);
  EXPECT_EQ((d * Rational(3) - d * d).format({"a", "b", "d"}), "3*d - d^2");
}

TEST(ParamPoly, SubstituteAndCancel) {
  const ParamPoly a = ParamPoly::variable(0), b = ParamPoly::variable(1);
  const ParamPoly p = (a + b).pow(2);
  EXPECT_EQ(p.substitute(1, -a), ParamPoly());
  EXPECT_EQ(p.substitute(0, ParamPoly(2)).substitute(1, ParamPoly(3)), ParamPoly(25));
  EXPECT_EQ((a - a).terms().size(), 0u);
  EXPECT_EQ(p.total_degree(), 2);
  EXPECT_FALSE(p.constant_value().has_value());
  EXPECT_EQ(ParamPoly(Rational(5, 2)).constant_value(), Rational(5, 2));
}

TEST(ParamPoly, TrailingZerosDoNotMatter) {
  ParamPoly x;
  x.add_term({1, 0, 0}, Rational(1));
  EXPECT_EQ(x, ParamPoly::variable(0));
}
