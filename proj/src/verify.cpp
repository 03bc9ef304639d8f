#include "chow/verify.hpp"

#include <sstream>

#include "chow/error.hpp"
#include "chow/expr.hpp"
#include "chow/fibration.hpp"
#include "chow/invariants.hpp"
#include "chow/random_classes.hpp"

namespace chow {

void VerifyReport::check(bool passed, const std::string& what) {
  ++checks;
  if (!passed) failures.push_back(what);
}

void VerifyReport::merge(const VerifyReport& other) {
  checks += other.checks;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

std::string format(const ZetaPolynomial& f) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const ChowClass& b = f.coefficients()[i];
    if (b.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << format(b) << ")";
    if (i > 0) os << "*" << f.bundle()->zeta_name() << "^" << i;
  }
  return first ? "0" : os.str();
}

namespace {

std::string describe(const Tower& bundle) {
  std::ostringstream os;
  os << "base dim " << bundle.base()->dim() << ", exps [";
  for (std::size_t i = 0; i < bundle.exponents().size(); ++i)
    os << (i ? "," : "") << format(bundle.exponents()[i], bundle);
  os << "]";
  return os.str();
}

ChowClass lift(const ChowClass& x, const TowerPtr& target) { return pullback(x, target); }

}  // namespace

VerifyReport verify_oracle(std::uint64_t seed, int cases, IndexConvention convention) {
  VerifyReport r;
  r.suite = "oracle";
  ClassGenerator gen(seed);
  for (int c = 0; c < cases; ++c) {
    const TowerPtr bundle = gen.random_bundle(3, 4, 4);
    const ZetaPolynomial f = gen.random_zeta_polynomial(bundle, gen.uniform(0, bundle->dim()));
    const ChowClass want = pushforward_oracle(f);
    const ChowClass got = pushforward_closed(f, convention);
    r.check(got == want, "case " + std::to_string(c) + " (" + describe(*bundle) + "), f = " + format(f) +
                             ": closed " + format(got) + " vs oracle " + format(want));
    const ChowClass x = f.to_class();
    const ChowClass want_nf = pushforward_oracle(x);
    const ChowClass got_nf = pushforward_closed(x, convention);
    r.check(got_nf == want_nf, "case " + std::to_string(c) + " normal form (" + describe(*bundle) +
                                   "), x = " + format(x) + ": closed " + format(got_nf) +
                                   " vs oracle " + format(want_nf));
  }
  return r;
}

VerifyReport verify_symbolic_consistency(std::uint64_t seed, int cases) {
  VerifyReport r;
  r.suite = "symbolic";
  ClassGenerator gen(seed);
  for (int c = 0; c < cases; ++c) {
    const int dim = gen.uniform(1, 3);
    long a = 2, b = 3;
    if (c > 0) {
      do {
        a = gen.uniform(-4, 4);
        b = gen.uniform(-4, 4);
      } while (a == 0 || b == 0 || a == b);
    }
    const TowerPtr base = Tower::make_formal_base(dim, {"L"}, {"a", "b"});
    const ChowClass line = ChowClass::symbol(base, "L");
    const TowerPtr sym = Tower::make_projective_bundle(
        base, line, {ParamPoly(0), ParamPoly::variable(0), ParamPoly::variable(1)}, "H");
    const TowerPtr num = Tower::make_projective_bundle(base, line, {ParamPoly(0), ParamPoly(a), ParamPoly(b)}, "H");
    const ChowClass x = gen.random_class(sym, 5, 3);
    ChowClass pushed = pushforward_oracle(x);
    pushed = substitute_parameter(substitute_parameter(pushed, "a", ParamPoly(a)), "b", ParamPoly(b));
    ChowClass x_num = substitute_parameter(substitute_parameter(x, "a", ParamPoly(a)), "b", ParamPoly(b));
    x_num = ChowClass::from_terms(num, x_num.terms());
    const ChowClass direct = pushforward_closed(x_num);
    r.check(pushed == direct, "case " + std::to_string(c) + " (a,b) = (" + std::to_string(a) + "," +
                                  std::to_string(b) + "), x = " + format(x) + ": symbolic " +
                                  format(pushed) + " vs direct " + format(direct));
  }
  return r;
}

VerifyReport verify_properties(std::uint64_t seed) {
  VerifyReport r;
  r.suite = "properties";
  ClassGenerator gen(seed);

  // c(E) s(E) = 1, numeric and symbolic exponents.
  for (int c = 0; c < 20; ++c) {
    const TowerPtr bundle = gen.random_bundle(3, 4, 4, false);
    const auto s = segre_classes(*bundle, bundle->base()->dim());
    ChowClass total(bundle->base(), ParamPoly(0));
    for (const auto& k : s) total += k;
    r.check(bundle->bundle_chern() * total == ChowClass(bundle->base(), ParamPoly(1)),
            "c(E)s(E) != 1 for " + describe(*bundle));
  }
  {
    const TowerPtr base = Tower::make_formal_base(3, {"L"}, {"a", "b"});
    const TowerPtr bundle = Tower::make_projective_bundle(
        base, ChowClass::symbol(base, "L"), {ParamPoly(0), ParamPoly::variable(0), ParamPoly::variable(1)});
    const auto s = segre_classes(*bundle, 3);
    ChowClass total(base, ParamPoly(0));
    for (const auto& k : s) total += k;
    r.check(bundle->bundle_chern() * total == ChowClass(base, ParamPoly(1)), "c(E)s(E) != 1 for [0,a,b]");
  }

  // The bundle relation normalizes to zero.
  for (int c = 0; c < 20; ++c) {
    const TowerPtr bundle = gen.random_bundle(3, 4, 4, false);
    const ChowClass z = ChowClass::symbol(bundle, bundle->zeta_index());
    ChowClass rel(bundle, ParamPoly(0));
    for (int i = 0; i <= bundle->rank(); ++i)
      rel += lift(grade(bundle->bundle_chern(), i), bundle) * z.pow(static_cast<unsigned>(bundle->rank() - i));
    r.check(rel.is_zero(), "relation does not vanish for " + describe(*bundle));
  }

  // Projection formula.
  for (int c = 0; c < 50; ++c) {
    const TowerPtr bundle = gen.random_bundle(3, 4, 4, false);
    const ChowClass beta = gen.random_class(bundle->base());
    const ChowClass x = gen.random_class(bundle);
    const ChowClass lhs = pushforward(lift(beta, bundle) * x);
    const ChowClass rhs = beta * pushforward(x);
    r.check(lhs == rhs, "projection formula fails for " + describe(*bundle) + ", beta = " + format(beta) +
                            ", x = " + format(x));
  }

  // Twist invariance: x(zeta) on P(E) against x(zeta + tL) on P(E (x) L^t).
  for (int c = 0; c < 20; ++c) {
    const TowerPtr bundle = gen.random_bundle(3, 4, 3, false);
    int t = gen.uniform(-2, 2);
    if (t == 0) t = 1;
    std::vector<ParamPoly> shifted;
    for (const auto& a : bundle->exponents()) shifted.push_back(a + ParamPoly(t));
    const TowerPtr twisted =
        Tower::make_projective_bundle(bundle->base(), bundle->line_class(), shifted, "H");
    const ZetaPolynomial f = gen.random_zeta_polynomial(bundle, gen.uniform(0, bundle->dim()));
    const ZetaPolynomial moved_zeta =
        ZetaPolynomial::zeta(twisted) +
        ZetaPolynomial::constant(twisted, bundle->line_class() * ParamPoly(t));
    ZetaPolynomial g(twisted, {});
    ZetaPolynomial power = ZetaPolynomial::constant(twisted, ChowClass(bundle->base(), ParamPoly(1)));
    for (std::size_t i = 0; i < f.size(); ++i) {
      g += ZetaPolynomial::constant(twisted, f.coefficient(i)) * power;
      power = power * moved_zeta;
    }
    r.check(pushforward(f.to_class()) == pushforward(g.to_class()),
            "twist by L^" + std::to_string(t) + " changes the pushforward for " + describe(*bundle) +
                ", f = " + format(f));
  }

  // Parser round-trip on generated classes.
  for (int c = 0; c < 50; ++c) {
    const TowerPtr bundle = gen.random_bundle(3, 4, 4, false);
    const ChowClass x = gen.random_class(bundle, 6, 5);
    const std::string text = format(x);
    r.check(eval(text, bundle) == x, "round-trip fails for " + text);
    const ChowClass y = gen.random_class(bundle->base(), 6, 5);
    r.check(eval(format(y), bundle->base()) == y, "round-trip fails for " + format(y));
  }
  return r;
}

const std::vector<PlaneCurveColumn>& plane_curve_columns() {
  static const std::vector<PlaneCurveColumn> columns = {
      {"f/2", "f/4", "3", "f", 3},
      {"f/2", "f/3", "3", "f", 2},
      {"f/3", "f/3", "3", "f", 4},
      {"-f/2", "-f/4", "3", "-f/2", 3},
      {"-f/2", "-f/6", "3", "-f/2", 2},
  };
  return columns;
}

ChowClass plane_curve_column_residual(const PlaneCurveColumn& column) {
  const TowerPtr base = formal_base_with_line(3, {"f"});
  const ChowClass line = ChowClass::symbol(base, "L");
  PlaneCurveData w{eval_param(column.a, base), eval_param(column.b, base), eval_param(column.d, base),
                   eval_param(column.e, base)};
  const FibrationSpec s = make_plane_curve(base, line, w);
  const ChowClass fl = ChowClass::parameter(base, "f") * line;
  const ChowClass expected =
      ParamPoly(column.m) * fl * invert_unit(ChowClass(base, ParamPoly(1)) + fl) * total_chern(base);
  return pushforward_chern(s) - expected;
}

namespace {

FibrationSpec k3_spec() {
  const TowerPtr point = Tower::make_point();
  const TowerPtr p1 = Tower::make_projective_bundle(point, ChowClass(point, ParamPoly(0)),
                                                    {ParamPoly(0), ParamPoly(0)}, "h");
  return make_fibration(FibrationKind::E8, p1, ChowClass::symbol(p1, "h") * ParamPoly(2));
}

}  // namespace

ParamPoly k3_euler_integrated() { return euler_characteristic(k3_spec()); }

ParamPoly k3_euler_oracle() {
  ChowClass x = fibration_class(k3_spec());
  while (x.tower()->is_bundle()) x = pushforward_oracle(x);
  return x.constant_term();
}

VerifyReport verify_tables() {
  VerifyReport r;
  r.suite = "tables";
  auto expect = [&r](const std::string& got, const std::string& want, const std::string& what) {
    r.check(got == want, what + ": got \"" + got + "\", expected \"" + want + "\"");
  };

  {
    const TowerPtr base = formal_base_with_line(3);
    const FibrationSpec e8 = make_fibration(FibrationKind::E8, base, ChowClass::symbol(base, "L"));
    const ChowClass c = eval("(1+H)*(1+2*L+H)*(1+3*L+H)/(1+3*H+6*L)*(3*H+6*L)", e8.ambient);
    expect(format(pushforward_closed(c)), "12*L - 72*L^2 + 432*L^3", "E8 example, closed form");
    expect(format(pushforward_oracle(c)), "12*L - 72*L^2 + 432*L^3", "E8 example, oracle");
    expect(format(pushforward_oracle(eval_zeta("(1+H)*(1+2*L+H)*(1+3*L+H)/(1+3*H+6*L)*(3*H+6*L)",
                                               e8.ambient))),
           "12*L - 72*L^2 + 432*L^3", "E8 example, unreduced oracle");

    for (FibrationKind kind : {FibrationKind::E6, FibrationKind::E7, FibrationKind::E8}) {
      const FibrationSpec s = make_fibration(kind, base, ChowClass::symbol(base, "L"));
      const auto [m, k] = divisor_multiplier(kind);
      r.check(pushforward_chern(s) == divisor_chern_class(base, ChowClass::symbol(base, "L"), m, k),
              to_string(kind) + " pushforward is not " + std::to_string(m) + "*" + std::to_string(k) +
                  "L/(1+" + std::to_string(k) + "L)*c(B)");
    }
  }

  expect(format(svw_integrand(FibrationKind::E6)), "12*c1*c2 + 72*c1^3", "E6 integrand");
  expect(format(svw_integrand(FibrationKind::E7)), "12*c1*c2 + 144*c1^3", "E7 integrand");
  expect(format(svw_integrand(FibrationKind::E8)), "12*c1*c2 + 360*c1^3", "E8 integrand");
  expect(format(second_chern_square_integrand_e8()), "24*c1*c2 + 120*c1^3", "E8 c2^2 integrand");

  {
    const TowerPtr base = formal_base_with_line(3, {"a", "b", "d", "e"});
    PlaneCurveData w{ParamPoly::variable(0), ParamPoly::variable(1), ParamPoly::variable(2),
                     ParamPoly::variable(3)};
    const FibrationSpec s = make_plane_curve(base, ChowClass::symbol(base, "L"), w);
    const FactorizationCheck cf = verify_factorization(s);
    r.check(cf.equal, "plane-curve pushforward differs from X s(F) c(B): residual " + format(cf.residual));
    const auto expected = expected_x_coefficients(w);
    for (std::size_t k = 0; k < expected.size(); ++k)
      r.check(k < cf.x_coefficients.size() && cf.x_coefficients[k] == expected[k],
              "X coefficient of L^" + std::to_string(k) + " differs from the expected polynomial");
    expect(format(expected[0], *base), "3*d - d^2", "X coefficient of L^0");
  }

  for (const auto& col : plane_curve_columns()) {
    const ChowClass res = plane_curve_column_residual(col);
    r.check(res.is_zero(), "column (" + col.a + ", " + col.b + ", " + col.d + ", " + col.e + ") residual " +
                               format(res));
  }

  struct Row {
    FibrationKind kind;
    const char* c2sq;
    const char* c4;
    const char* chi1;
    const char* chi2;
  };
  const Row rows[] = {
      {FibrationKind::E6, "1872 + 48*n^2", "4176 + 144*n^2", "-688 - 24*n^2", "2796 + 96*n^2"},
      {FibrationKind::E7, "3168 + 96*n^2", "8064 + 288*n^2", "-1336 - 48*n^2", "5388 + 192*n^2"},
      {FibrationKind::E8, "7056 + 240*n^2", "19728 + 720*n^2", "-3280 - 120*n^2", "13164 + 480*n^2"},
  };
  const std::vector<std::string> names = {"n"};
  for (const Row& row : rows) {
    const ChernNumberSet cn = chern_numbers_cy4(row.kind);
    const std::string tag = to_string(row.kind) + " fourfold ";
    expect(cn.c2_squared.format(names), row.c2sq, tag + "c2^2");
    expect(cn.c4.format(names), row.c4, tag + "c4");
    r.check(cn.c1c3.is_zero() && cn.c1_squared_c2.is_zero() && cn.c1_fourth.is_zero(),
            tag + "has a nonzero Chern number involving c1");
    expect(arithmetic_genus(0, cn).format(names), "2", tag + "chi_0");
    expect(arithmetic_genus(1, cn).format(names), row.chi1, tag + "chi_1");
    expect(arithmetic_genus(2, cn).format(names), row.chi2, tag + "chi_2");
  }

  expect(k3_euler_integrated().format({}), "24", "K3 Euler characteristic, integration");
  expect(k3_euler_oracle().format({}), "24", "K3 Euler characteristic, oracle");
  return r;
}

}  // namespace chow
