#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "chow/chow_class.hpp"
#include "chow/param_poly.hpp"
#include "chow/rational.hpp"
#include "chow/tower.hpp"

namespace chow {

enum class FibrationKind { E6, E7, E8, PlaneCurve };

std::string to_string(FibrationKind kind);

/// w = (a, b, d, e): Y of class d*H + e*L in P(O + L^a + L^b).
struct PlaneCurveData {
  ParamPoly a;
  ParamPoly b;
  ParamPoly d;
  ParamPoly e;
};

/// A fibration Y -> B realized as a complete intersection of hypersurfaces in
/// a projective bundle over B. Only classes are tracked, never equations.
struct FibrationSpec {
  FibrationKind kind = FibrationKind::E8;
  TowerPtr base;
  ChowClass line;  // L, on base
  TowerPtr ambient;
  std::vector<ChowClass> hypersurfaces;  // on ambient
  std::optional<PlaneCurveData> plane;
};

/// E6: P(O + L + L), [Y] = 3H + 3L. E8: P(O + L^2 + L^3), [Y] = 3H + 6L.
/// E7 delegates to e7_embedding.
FibrationSpec make_fibration(FibrationKind kind, const TowerPtr& base, const ChowClass& line,
                             const std::string& zeta_name = "H");

FibrationSpec make_plane_curve(const TowerPtr& base, const ChowClass& line, PlaneCurveData w,
                               const std::string& zeta_name = "H");

/// The quartic y^2 = x^4 + e x^2 z^2 + f x z^3 + g z^4 in P(1,1,2) re-embedded
/// by (u, v, t, y) = (x^2, x z, z^2, y) as the intersection of ut = v^2 and
/// y^2 = u^2 + e u t + f v t + g t^2 in P(O + L + L^2 + L^2); the two
/// quadrics have classes 2H + 2L and 2H + 4L.
FibrationSpec e7_embedding(const TowerPtr& base, const ChowClass& line,
                           const std::string& zeta_name = "H");

/// [Y] as a class on the ambient bundle.
ChowClass fundamental_class(const FibrationSpec& s);
/// c(T_ambient) / prod(1 + D_k); its restriction to Y is c(Y).
ChowClass virtual_chern(const FibrationSpec& s);
/// i_* c(Y) = [Y] * c(T_ambient) / prod(1 + D_k).
ChowClass fibration_class(const FibrationSpec& s);

/// (d - 1)(d - 2) / 2 for a plane-curve fibration with numeric d.
Rational genus(const FibrationSpec& s);

/// K_Y by adjunction, as the ambient class (K_ambient + sum D_k).
ChowClass canonical_class(const FibrationSpec& s);

/// For plane-curve fibrations: never Calabi-Yau unless d = 3; for d = 3 it is
/// iff c1(B) = (e - a - b) L, with c1(B) given as a multiple of L.
bool is_calabi_yau(const FibrationSpec& s, const ParamPoly& c1_over_line);

/// phi_* c(Y) on the base.
ChowClass pushforward_chern(const FibrationSpec& s);

/// m * (k L / (1 + k L)) * c(B): (4,3) for E6, (3,4) for E7, (2,6) for E8.
std::pair<int, int> divisor_multiplier(FibrationKind kind);
ChowClass divisor_chern_class(const TowerPtr& base, const ChowClass& line, int m, int k);

/// Coefficients of L^0..L^3 of X in phi_* c(Y_w) = X s(F) c(B) in closed form,
/// with F = L^e + L^(e - a d) + L^(e - b d).
std::array<ParamPoly, 4> expected_x_coefficients(const PlaneCurveData& w);

struct FactorizationCheck {
  bool equal = false;
  ChowClass pushforward;  // phi_* c(Y_w)
  ChowClass predicted;    // X s(F) c(B)
  ChowClass residual;
  /// Coefficients of L^k in pushforward * c(F) / c(B), k = 0..dim B.
  std::vector<ParamPoly> x_coefficients;
};

/// Requires a plane-curve spec whose line class is a bare base symbol.
FactorizationCheck verify_factorization(const FibrationSpec& s);

}  // namespace chow
