#include <gtest/gtest.h>

#include <random>
#include <string>

#include "chow/error.hpp"
#include "chow/expr.hpp"
#include "chow/random_classes.hpp"

using namespace chow;

namespace {

TowerPtr ambient() {
  const TowerPtr b = Tower::make_formal_base(3, {"L"}, {"a", "b", "c"});
  return Tower::make_projective_bundle(b, ChowClass::symbol(b, "L"), {0, 2, 3}, "H");
}

}  // namespace

TEST(Parser, Precedence) {
  const TowerPtr t = ambient();
  const SymbolTable st = SymbolTable::of(*t);
  const ExprPtr sum = parse("a+b*c", st);
  ASSERT_EQ(sum->kind, Expr::Kind::Add);
  EXPECT_EQ(sum->rhs->kind, Expr::Kind::Multiply);

  const ExprPtr quot = parse("a/b/c", st);
  ASSERT_EQ(quot->kind, Expr::Kind::Divide);
  EXPECT_EQ(quot->lhs->kind, Expr::Kind::Divide);
  EXPECT_EQ(quot->rhs->name, "c");

  const ExprPtr neg = parse("-a^2", st);
  ASSERT_EQ(neg->kind, Expr::Kind::Negate);
  EXPECT_EQ(neg->lhs->kind, Expr::Kind::Power);
  EXPECT_EQ(format(eval("-H^2", t)), "-H^2");
  EXPECT_EQ(format(eval("(-H)^2", t)), "H^2");
}

TEST(Parser, RationalScaling) {
  const TowerPtr t = ambient();
  const ExprPtr e = parse("1/2*H^2", SymbolTable::of(*t));
  EXPECT_EQ(e->kind, Expr::Kind::Multiply);
  EXPECT_EQ(format(eval("1/2*H^2", t)), "1/2*H^2");
  EXPECT_EQ(format(eval("3/4", t)), "3/4");
  EXPECT_EQ(format(eval("(1+L)^0", t)), "1");
}

TEST(Parser, Errors) {
  const TowerPtr t = ambient();
  const SymbolTable st = SymbolTable::of(*t);
  try {
    parse("H + Q", st);
    FAIL();
  } catch (const UnknownSymbolError& e) {
    EXPECT_EQ(e.name(), "Q");
    EXPECT_EQ(e.position(), 4u);
  }
  try {
    parse("(1+H", st);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse("H H", st), ParseError);
  EXPECT_THROW(parse("H^-1", st), ParseError);
  EXPECT_THROW(parse("", st), ParseError);
  EXPECT_THROW(eval("H/(L)", t), NonUnitError);
  EXPECT_THROW(eval("H/(a+L)", t), NonUnitError);
  EXPECT_THROW(eval("1/0", t), NonUnitError);
}

TEST(Parser, ParametersAreScalars) {
  const TowerPtr t = ambient();
  EXPECT_EQ(format(eval("a*H - b*H + H*(b - a)", t)), "0");
  EXPECT_EQ(format(eval("(a+b)*L", t)), "(a + b)*L");
  EXPECT_EQ(eval_param("a/2 - b", t).format(t->params()), "1/2*a - b");
}

TEST(Parser, ZetaPolynomialEvaluationKeepsHighPowers) {
  const TowerPtr t = ambient();
  const ZetaPolynomial f = eval_zeta("H^4 + L*H", t);
  EXPECT_EQ(f.size(), 5u);
  EXPECT_EQ(f.to_class(), eval("H^4 + L*H", t));
}

TEST(Format, CanonicalOrder) {
  const TowerPtr b = Tower::make_formal_base(3);
  EXPECT_EQ(format(eval("72*c1^3 + 12*c1*c2", b)), "12*c1*c2 + 72*c1^3");
  EXPECT_EQ(format(ChowClass(b, 0)), "0");
  const TowerPtr l = Tower::make_formal_base(3, {"L"});
  const ChowClass x = eval("1 - 6*L + 36*L^2 - 216*L^3", l);
  EXPECT_EQ(eval(format(x), l), x);
}

TEST(Format, RoundTripOnGeneratedClasses) {
  ClassGenerator gen(31337);
  for (int i = 0; i < 300; ++i) {
    const TowerPtr t = gen.random_bundle(3, 4, 4, false);
    const ChowClass x = gen.random_class(t, 8, 9) * ParamPoly(Rational(gen.uniform(1, 5), gen.uniform(1, 5)));
    EXPECT_EQ(eval(format(x), t), x) << format(x);
  }
}

TEST(Parser, FuzzNeverCrashes) {
  const TowerPtr t = ambient();
  const SymbolTable st = SymbolTable::of(*t);
  const std::string alphabet = "HLabc0123456789+-*/^() \tQ.";
  std::mt19937_64 rng(2718);
  int parsed = 0;
  for (int i = 0; i < 2000; ++i) {
    const std::size_t len = i < 1990 ? rng() % 40 : 10000;
    std::string s;
    for (std::size_t k = 0; k < len; ++k) s += alphabet[rng() % alphabet.size()];
    try {
      parse(s, st);
      ++parsed;
    } catch (const ParseError& e) {
      EXPECT_LE(e.position(), s.size());
    }
  }
  EXPECT_GE(parsed, 0);
}

TEST(Parser, DeepNestingIsRejectedNotOverflowed) {
  const TowerPtr t = ambient();
  const std::string deep = std::string(5000, '(') + "H" + std::string(5000, ')');
  EXPECT_THROW(parse(deep, SymbolTable::of(*t)), ParseError);
  const std::string ok = std::string(100, '(') + "H" + std::string(100, ')');
  EXPECT_EQ(format(eval(ok, t)), "H");
}

TEST(Parser, LongValidExpression) {
  const TowerPtr t = ambient();
  std::string s = "0";
  while (s.size() < 10000) s += "+L*H-L*H";
  EXPECT_TRUE(eval(s, t).is_zero());
}
