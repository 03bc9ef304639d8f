#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "chow/chow_class.hpp"
#include "chow/param_poly.hpp"
#include "chow/tower.hpp"

namespace chow {

/// Structured encoding, exact and stable:
///
///   ParamPoly -> [{"monomial": {"n": 2}, "coeff": "144"}, ...]
///   ChowClass -> [{"monomial": {"h": 2}, "coeff": <ParamPoly>}, ...]
///
/// Rationals are strings "p" or "p/q"; terms appear in canonical order and
/// zero exponents are omitted.
nlohmann::json to_structured(const ParamPoly& p, const std::vector<std::string>& names);
nlohmann::json to_structured(const ChowClass& x);

ParamPoly param_poly_from_structured(const nlohmann::json& j, const Tower& tower);
ChowClass class_from_structured(const nlohmann::json& j, const TowerPtr& tower);

}  // namespace chow
