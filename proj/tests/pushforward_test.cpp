#include <gtest/gtest.h>

#include "chow/error.hpp"
#include "chow/expr.hpp"
#include "chow/pushforward.hpp"
#include "chow/random_classes.hpp"
#include "chow/verify.hpp"

using namespace chow;

namespace {

const char* kE8Class = "(1+H)*(1+2*L+H)*(1+3*L+H)/(1+3*H+6*L)*(3*H+6*L)";

TowerPtr bundle_over(int dim, std::vector<ParamPoly> exps, std::vector<std::string> params = {}) {
  const TowerPtr b = Tower::make_formal_base(dim, {"L"}, std::move(params));
  return Tower::make_projective_bundle(b, ChowClass::symbol(b, "L"), std::move(exps), "H");
}

}  // namespace

TEST(Factorization, E8Bundle) {
  const auto f = factorize_bundle(*bundle_over(3, {0, 2, 3}));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].exponent, ParamPoly(2));
  EXPECT_EQ(f.factors[1].exponent, ParamPoly(3));
  EXPECT_EQ(f.zero_count, 1);
  EXPECT_EQ(f.rank, 3);
  EXPECT_TRUE(f.closed_form_applicable());
}

TEST(Factorization, MultiplicitiesAndSymbols) {
  const auto f = factorize_bundle(*bundle_over(3, {1, 1, -2, 0}));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].multiplicity + f.factors[1].multiplicity, 3);
  EXPECT_FALSE(factorize_bundle(*bundle_over(2, {0, 0})).closed_form_applicable());
  EXPECT_FALSE(factorize_bundle(*bundle_over(2, {0, ParamPoly::variable(0)}, {"a"})).numeric);
}

TEST(PartialFractions, TwoDistinctFactors) {
  auto coefficient_of = [](const PartialFraction& pf, long d) {
    for (const auto& e : pf.entries)
      if (e.exponent == Rational(d) && e.power == 1) return e.coefficient;
    return Rational(999);
  };
  const auto pf = partial_fractions(factorize_bundle(*bundle_over(3, {0, 2, 3})));
  EXPECT_EQ(coefficient_of(pf, 2), Rational(-2));
  EXPECT_EQ(coefficient_of(pf, 3), Rational(3));
  const auto pf2 = partial_fractions(factorize_bundle(*bundle_over(3, {1, 2})));
  EXPECT_EQ(coefficient_of(pf2, 1), Rational(-1));
  EXPECT_EQ(coefficient_of(pf2, 2), Rational(2));
  EXPECT_THROW(partial_fractions(factorize_bundle(*bundle_over(2, {0, 0}))), InapplicableError);
}

TEST(PartialFractions, ReconstructSeries) {
  ClassGenerator gen(77);
  for (int i = 0; i < 50; ++i) {
    const TowerPtr t = gen.random_bundle(3, 4, 4);
    const auto f = factorize_bundle(*t);
    EXPECT_EQ(partial_fraction_series(partial_fractions(f), 8), inverse_chern_series(f, 8));
  }
}

TEST(Segre, E8Values) {
  const TowerPtr t = bundle_over(3, {0, 2, 3});
  const auto s = segre_classes(*t, 3);
  EXPECT_EQ(format(s[0]), "1");
  EXPECT_EQ(format(s[1]), "-5*L");
  EXPECT_EQ(format(s[2]), "19*L^2");
  EXPECT_EQ(format(s[3]), "-65*L^3");
}

TEST(ZetaPolynomial, CoefficientsOfNormalForm) {
  const TowerPtr t = bundle_over(3, {0, 2, 3});
  const ZetaPolynomial f = to_zeta_polynomial(eval("3*H + 6*L", t));
  EXPECT_EQ(format(f.coefficient(0)), "6*L");
  EXPECT_EQ(format(f.coefficient(1)), "3");
  EXPECT_TRUE(f.coefficient(2).is_zero());
}

TEST(ZetaPolynomial, UnreducedAgreesWithReduced) {
  const TowerPtr t = bundle_over(3, {0, 2, 3});
  const ZetaPolynomial raw = eval_zeta(kE8Class, t);
  EXPECT_GT(raw.size(), 3u);
  EXPECT_EQ(raw.to_class(), eval(kE8Class, t));
}

TEST(Pushforward, E8Example) {
  const TowerPtr t = bundle_over(3, {0, 2, 3});
  const ChowClass c = eval(kE8Class, t);
  const ChowClass want = eval("12*L/(1+6*L)", t->base());
  EXPECT_EQ(format(want), "12*L - 72*L^2 + 432*L^3");
  EXPECT_EQ(pushforward_closed(c), want);
  EXPECT_EQ(pushforward_oracle(c), want);
  EXPECT_EQ(pushforward_closed(eval_zeta(kE8Class, t)), want);
  EXPECT_EQ(pushforward_oracle(eval_zeta(kE8Class, t)), want);
}

TEST(Pushforward, PowersOfHyperplane) {
  const TowerPtr t = bundle_over(3, {0, 2, 3});
  // pi_* H^(2+k) = s_k(E).
  EXPECT_EQ(format(pushforward(eval("H^2", t))), "1");
  EXPECT_EQ(format(pushforward(eval("H^3", t))), "-5*L");
  EXPECT_EQ(format(pushforward(eval("H^4", t))), "19*L^2");
  EXPECT_TRUE(pushforward(eval("H + L", t)).is_zero());
}

TEST(Pushforward, SymbolicMatchesInstantiated) {
  const TowerPtr sym = bundle_over(3, {0, ParamPoly::variable(0), ParamPoly::variable(1)}, {"a", "b"});
  EXPECT_THROW(pushforward_closed(eval("H^3", sym)), InapplicableError);
  const ChowClass pushed = pushforward(eval(kE8Class, sym));
  const ChowClass at23 =
      substitute_parameter(substitute_parameter(pushed, "a", ParamPoly(2)), "b", ParamPoly(3));
  EXPECT_EQ(format(at23), "12*L - 72*L^2 + 432*L^3");
}

TEST(Pushforward, TrivialBundleUsesOracle) {
  const TowerPtr pt = Tower::make_point();
  const TowerPtr p2 = Tower::make_projective_bundle(pt, ChowClass(pt, 0), {0, 0, 0}, "h");
  EXPECT_EQ(format(pushforward(eval("h^2", p2))), "1");
  EXPECT_EQ(integrate(eval("h^2", p2)), ParamPoly(1));
  EXPECT_EQ(integrate(eval("h", p2)), ParamPoly(0));
  EXPECT_THROW(integrate(eval("L", Tower::make_formal_base(1, {"L"}))), UserError);
}

TEST(Pushforward, SurfaceCubeIntegratesToNSquared) {
  const TowerPtr pt = Tower::make_point({"n"});
  const TowerPtr p2 = Tower::make_projective_bundle(pt, ChowClass(pt, 0), {0, 0, 0}, "h");
  const TowerPtr s = Tower::make_projective_bundle(p2, ChowClass::symbol(p2, "h"),
                                                   {0, ParamPoly::variable(0)}, "K");
  EXPECT_EQ(format(eval("K^3", s)), "n^2*h^2*K");
  EXPECT_EQ(integrate(eval("K^3", s)).format({"n"}), "n^2");
  ChowClass x = eval("K^3", s);
  while (x.tower()->is_bundle()) x = pushforward_oracle(x);
  EXPECT_EQ(x.constant_term().format({"n"}), "n^2");
}

TEST(Pushforward, OracleEquivalenceOnRandomCases) {
  const VerifyReport r = verify_oracle(4242, 250);
  EXPECT_EQ(r.checks, 500);
  EXPECT_TRUE(r.ok()) << r.failures.front();
}

TEST(Pushforward, OffByOneConventionIsCaught) {
  const VerifyReport r = verify_oracle(4242, 100, IndexConvention::OffByOne);
  EXPECT_FALSE(r.ok());
}

TEST(Pushforward, ProjectionFormulaAndTwists) {
  const VerifyReport r = verify_properties(99);
  EXPECT_TRUE(r.ok()) << r.failures.front();
  const VerifyReport sym = verify_symbolic_consistency(99, 20);
  EXPECT_TRUE(sym.ok()) << sym.failures.front();
}

TEST(Pushforward, DegreeContract) {
  ClassGenerator gen(5);
  for (int i = 0; i < 50; ++i) {
    const TowerPtr t = gen.random_bundle(3, 4, 4, false);
    const int k = gen.uniform(0, t->dim());
    const ChowClass x = grade(gen.random_class(t, 6), k);
    EXPECT_TRUE(pushforward(x).is_homogeneous(k - t->fiber_dim()));
  }
}
