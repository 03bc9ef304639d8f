#include "chow/invariants.hpp"

#include <stdexcept>

#include "chow/error.hpp"
#include "chow/pushforward.hpp"

namespace chow {

std::vector<std::pair<std::string, ParamPoly>> ChernNumberSet::entries() const {
  return {{"c4", c4},
          {"c1*c3", c1c3},
          {"c2^2", c2_squared},
          {"c1^2*c2", c1_squared_c2},
          {"c1^4", c1_fourth}};
}

ChowClass chern_component(const ChowClass& total, int k) { return grade(total, k); }

ParamPoly chern_number(const FibrationSpec& s, const std::vector<int>& partition) {
  const ChowClass v = virtual_chern(s);
  ChowClass integrand = fundamental_class(s);
  for (int p : partition) integrand *= chern_component(v, p);
  return integrate(integrand);
}

ChernNumberSet chern_numbers(const FibrationSpec& s) {
  const ChowClass v = virtual_chern(s);
  const ChowClass y = fundamental_class(s);
  const ChowClass c1 = chern_component(v, 1);
  const ChowClass c2 = chern_component(v, 2);
  const ChowClass c3 = chern_component(v, 3);
  const ChowClass c4 = chern_component(v, 4);

  ChernNumberSet cn;
  cn.c4 = integrate(y * c4);
  cn.c1c3 = integrate(y * c1 * c3);
  cn.c2_squared = integrate(y * c2 * c2);
  cn.c1_squared_c2 = integrate(y * c1 * c1 * c2);
  cn.c1_fourth = integrate(y * c1.pow(4));
  return cn;
}

CalabiYauFourfold k3_fibered_fourfold(FibrationKind kind) {
  const TowerPtr point = Tower::make_point({"n"});
  CalabiYauFourfold out;
  out.plane = Tower::make_projective_bundle(point, ChowClass(point, 0), {0, 0, 0}, "h");
  const ChowClass h = ChowClass::symbol(out.plane, "h");
  out.surface = Tower::make_projective_bundle(out.plane, h, {0, ParamPoly::variable(0)}, "K");
  out.m = chern_component(total_chern(out.surface), 1);
  out.fibration = make_fibration(kind, out.surface, out.m, "H");
  return out;
}

ChernNumberSet chern_numbers_cy4(FibrationKind kind) {
  return chern_numbers(k3_fibered_fourfold(kind).fibration);
}

ParamPoly euler_characteristic(const FibrationSpec& s) { return integrate(fibration_class(s)); }

TowerPtr formal_base_with_line(int dim, std::vector<std::string> params) {
  return Tower::make_formal_base(dim, {"L"}, std::move(params));
}

ChowClass svw_integrand(FibrationKind kind, const TowerPtr& base) {
  const ChowClass l = ChowClass::symbol(base, "L");
  const FibrationSpec s = make_fibration(kind, base, l);
  const ChowClass pushed = pushforward_chern(s);
  return grade(substitute(pushed, "L", ChowClass::symbol(base, "c1")), 3);
}

ChowClass svw_integrand(FibrationKind kind) { return svw_integrand(kind, formal_base_with_line(3)); }

ChowClass second_chern_square_integrand_e8(const TowerPtr& base) {
  const ChowClass l = ChowClass::symbol(base, "L");
  const FibrationSpec s = make_fibration(FibrationKind::E8, base, l);
  const ChowClass c2 = chern_component(virtual_chern(s), 2);
  const ChowClass pushed = pushforward(fundamental_class(s) * c2 * c2);
  return grade(substitute(pushed, "L", ChowClass::symbol(base, "c1")), 3);
}

ChowClass second_chern_square_integrand_e8() {
  return second_chern_square_integrand_e8(formal_base_with_line(3));
}

ChowClass evaluate_chern_polynomial(const ChowClass& formal, const TowerPtr& target) {
  const TowerPtr& source = formal.tower();
  if (!source || source->is_bundle()) throw UserError("expected a class on a formal base");
  const ChowClass c = total_chern(target);
  ChowClass out(target, 0);
  for (const auto& [m, coeff] : formal.terms()) {
    ChowClass term(target, coeff);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      const auto& sym = source->symbols()[i];
      if (sym.name != "c" + std::to_string(sym.degree))
        throw UserError("symbol '" + sym.name + "' is not a Chern class");
      term *= chern_component(c, sym.degree).pow(static_cast<unsigned>(m[i]));
    }
    out += term;
  }
  return out;
}

ParamPoly arithmetic_genus(int q, const ChernNumberSet& cn) {
  const ParamPoly three_c2sq = cn.c2_squared * Rational(3);
  switch (q) {
    case 0:
      return (three_c2sq - cn.c4) * Rational(1, 720);
    case 1:
      return (three_c2sq - cn.c4 * Rational(31)) * Rational(1, 180);
    case 2:
      return (three_c2sq + cn.c4 * Rational(79)) * Rational(1, 120);
    default:
      throw UserError("arithmetic genus defined here for q = 0, 1, 2");
  }
}

}  // namespace chow
