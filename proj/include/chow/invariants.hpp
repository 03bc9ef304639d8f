#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chow/chow_class.hpp"
#include "chow/fibration.hpp"
#include "chow/param_poly.hpp"
#include "chow/tower.hpp"

namespace chow {

/// Degree-4 Chern numbers of a fourfold.
struct ChernNumberSet {
  ParamPoly c4;
  ParamPoly c1c3;
  ParamPoly c2_squared;
  ParamPoly c1_squared_c2;
  ParamPoly c1_fourth;

  /// (name, value) pairs in a fixed order, for printing.
  std::vector<std::pair<std::string, ParamPoly>> entries() const;
};

/// Degree-k part of a total Chern class.
ChowClass chern_component(const ChowClass& total, int k);

/// Integral over Y of prod c_{p_i}(Y), as [Y] times the product of
/// components of the virtual Chern class, pushed down to the point.
ParamPoly chern_number(const FibrationSpec& s, const std::vector<int>& partition);
ChernNumberSet chern_numbers(const FibrationSpec& s);

/// The fourfold tower P^2 <- S = P(O + O(n)) <- P(E) with E built from
/// M = c1(S) = (n+3)h + 2K, so that Y is Calabi-Yau and K3-fibered over P^2.
/// n is a symbolic parameter on the root.
struct CalabiYauFourfold {
  TowerPtr plane;    // P^2, hyperplane class h
  TowerPtr surface;  // S, hyperplane class K (a threefold)
  ChowClass m;       // c1(S) on S
  FibrationSpec fibration;
};

CalabiYauFourfold k3_fibered_fourfold(FibrationKind kind);
ChernNumberSet chern_numbers_cy4(FibrationKind kind);

/// Integral of i_* c(Y); needs a point-rooted tower.
ParamPoly euler_characteristic(const FibrationSpec& s);

/// Formal base of dimension `dim` with one divisor symbol "L".
TowerPtr formal_base_with_line(int dim, std::vector<std::string> params = {});

/// Degree-3 part of phi_* c(Y) after L := c1(B), on a formal threefold.
ChowClass svw_integrand(FibrationKind kind, const TowerPtr& base);
ChowClass svw_integrand(FibrationKind kind);

/// Degree-3 integrand of c2(Y)^2 for E8 after L := c1(B).
ChowClass second_chern_square_integrand_e8(const TowerPtr& base);
ChowClass second_chern_square_integrand_e8();

/// Evaluates a polynomial in the formal Chern symbols c1, c2, ... on a
/// concrete tower, replacing c_i by c_i of the tower's tangent bundle.
ChowClass evaluate_chern_polynomial(const ChowClass& formal, const TowerPtr& target);

/// chi_q for q = 0, 1, 2 via the linear combinations of int c2^2 and int c4
/// valid for Calabi-Yau fourfolds.
ParamPoly arithmetic_genus(int q, const ChernNumberSet& cn);

}  // namespace chow
