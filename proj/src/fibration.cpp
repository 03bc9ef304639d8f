#include "chow/fibration.hpp"

#include "chow/error.hpp"
#include "chow/pushforward.hpp"

namespace chow {

namespace {

const PlaneCurveData& require_plane(const FibrationSpec& s) {
  if (s.kind != FibrationKind::PlaneCurve || !s.plane)
    throw UserError("operation needs a plane-curve fibration");
  return *s.plane;
}

FibrationSpec make_hypersurface(FibrationKind kind, const TowerPtr& base, const ChowClass& line,
                                std::vector<ParamPoly> exponents, const ParamPoly& zeta_coeff,
                                const ParamPoly& line_coeff, const std::string& zeta_name) {
  FibrationSpec s;
  s.kind = kind;
  s.base = base;
  s.line = pullback(line, base);
  s.ambient = Tower::make_projective_bundle(base, s.line, std::move(exponents), zeta_name);
  const ChowClass zeta = ChowClass::symbol(s.ambient, s.ambient->zeta_index());
  const ChowClass l = pullback(s.line, s.ambient);
  s.hypersurfaces.push_back(zeta * zeta_coeff + l * line_coeff);
  return s;
}

}  // namespace

std::string to_string(FibrationKind kind) {
  switch (kind) {
    case FibrationKind::E6:
      return "E6";
    case FibrationKind::E7:
      return "E7";
    case FibrationKind::E8:
      return "E8";
    case FibrationKind::PlaneCurve:
      return "plane-curve";
  }
  return "?";
}

FibrationSpec make_fibration(FibrationKind kind, const TowerPtr& base, const ChowClass& line,
                             const std::string& zeta_name) {
  switch (kind) {
    case FibrationKind::E6:
      return make_hypersurface(kind, base, line, {0, 1, 1}, 3, 3, zeta_name);
    case FibrationKind::E7:
      return e7_embedding(base, line, zeta_name);
    case FibrationKind::E8:
      return make_hypersurface(kind, base, line, {0, 2, 3}, 3, 6, zeta_name);
    case FibrationKind::PlaneCurve:
      break;
  }
  throw UserError("plane-curve fibrations need (a, b, d, e); use make_plane_curve");
}

FibrationSpec make_plane_curve(const TowerPtr& base, const ChowClass& line, PlaneCurveData w,
                               const std::string& zeta_name) {
  FibrationSpec s = make_hypersurface(FibrationKind::PlaneCurve, base, line, {0, w.a, w.b}, w.d,
                                      w.e, zeta_name);
  s.plane = std::move(w);
  return s;
}

FibrationSpec e7_embedding(const TowerPtr& base, const ChowClass& line,
                           const std::string& zeta_name) {
  FibrationSpec s;
  s.kind = FibrationKind::E7;
  s.base = base;
  s.line = pullback(line, base);
  s.ambient = Tower::make_projective_bundle(base, s.line, {0, 1, 2, 2}, zeta_name);
  const ChowClass zeta = ChowClass::symbol(s.ambient, s.ambient->zeta_index());
  const ChowClass l = pullback(s.line, s.ambient);
  s.hypersurfaces.push_back(zeta * ParamPoly(2) + l * ParamPoly(2));
  s.hypersurfaces.push_back(zeta * ParamPoly(2) + l * ParamPoly(4));
  return s;
}

ChowClass fundamental_class(const FibrationSpec& s) {
  ChowClass out(s.ambient, 1);
  for (const auto& d : s.hypersurfaces) out *= d;
  return out;
}

ChowClass virtual_chern(const FibrationSpec& s) {
  ChowClass out = total_chern(s.ambient);
  for (const auto& d : s.hypersurfaces) out *= invert_unit(ChowClass(s.ambient, 1) + d);
  return out;
}

ChowClass fibration_class(const FibrationSpec& s) { return fundamental_class(s) * virtual_chern(s); }

Rational genus(const FibrationSpec& s) {
  const auto d = require_plane(s).d.constant_value();
  if (!d) throw UserError("genus needs a numeric fiber degree d");
  return (*d - 1) * (*d - 2) / 2;
}

ChowClass canonical_class(const FibrationSpec& s) {
  ChowClass k = -grade(total_chern(s.ambient), 1);
  for (const auto& d : s.hypersurfaces) k += d;
  return k;
}

bool is_calabi_yau(const FibrationSpec& s, const ParamPoly& c1_over_line) {
  const PlaneCurveData& w = require_plane(s);
  if (w.d != ParamPoly(3)) return false;
  return c1_over_line == w.e - w.a - w.b;
}

ChowClass pushforward_chern(const FibrationSpec& s) { return pushforward(fibration_class(s)); }

std::pair<int, int> divisor_multiplier(FibrationKind kind) {
  switch (kind) {
    case FibrationKind::E6:
      return {4, 3};
    case FibrationKind::E7:
      return {3, 4};
    case FibrationKind::E8:
      return {2, 6};
    case FibrationKind::PlaneCurve:
      break;
  }
  throw UserError("no divisor multiplier for plane-curve fibrations");
}

ChowClass divisor_chern_class(const TowerPtr& base, const ChowClass& line, int m, int k) {
  const ChowClass kl = pullback(line, base) * ParamPoly(k);
  return kl * invert_unit(ChowClass(base, 1) + kl) * ParamPoly(m) * total_chern(base);
}

std::array<ParamPoly, 4> expected_x_coefficients(const PlaneCurveData& w) {
  const ParamPoly& a = w.a;
  const ParamPoly& b = w.b;
  const ParamPoly& d = w.d;
  const ParamPoly& e = w.e;
  const auto r = [](long v) { return Rational(v); };
  return {
      d * r(3) - d * d,
      d * e * r(3) + e * r(3) - a * d - a * d * d - b * d * d - b * d,
      e * e * r(6) - b * d * e * r(4) - a * d * e * r(4) + a * b * d * d * r(2),
      e * e * e * r(3) - b * d * e * e * r(3) - a * d * e * e * r(3) + a * b * d * d * e * r(3),
  };
}

FactorizationCheck verify_factorization(const FibrationSpec& s) {
  const PlaneCurveData& w = require_plane(s);
  const TowerPtr& base = s.base;
  const ChowClass one(base, 1);
  const ChowClass& l = s.line;
  if (l.terms().size() != 1 || !(l.terms().begin()->second == ParamPoly(1)))
    throw UserError("verify_factorization needs the line class to be a base symbol");
  const Monomial& l_mono = l.terms().begin()->first;

  const ChowClass c_f = (one + l * w.e) * (one + l * (w.e - w.a * w.d)) * (one + l * (w.e - w.b * w.d));
  const ChowClass c_b = total_chern(base);

  ChowClass x(base, 0);
  const auto expected = expected_x_coefficients(w);
  for (std::size_t k = 0; k < expected.size(); ++k) x += l.pow(static_cast<unsigned>(k)) * expected[k];

  FactorizationCheck out;
  out.pushforward = pushforward_chern(s);
  out.predicted = x * invert_unit(c_f) * c_b;
  out.residual = out.pushforward - out.predicted;
  out.equal = out.residual.is_zero();

  const ChowClass engine_x = out.pushforward * c_f * invert_unit(c_b);
  for (int k = 0; k <= base->dim(); ++k) {
    Monomial m = l_mono;
    for (auto& v : m) v *= k;
    auto it = engine_x.terms().find(m);
    out.x_coefficients.push_back(it == engine_x.terms().end() ? ParamPoly() : it->second);
  }
  return out;
}

}  // namespace chow
