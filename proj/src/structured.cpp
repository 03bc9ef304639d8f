#include "chow/structured.hpp"

#include <algorithm>

#include "chow/error.hpp"
#include "chow/expr.hpp"

namespace chow {

nlohmann::json to_structured(const ParamPoly& p, const std::vector<std::string>& names) {
  std::vector<const ParamPoly::Terms::value_type*> order;
  for (const auto& t : p.terms()) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return param_monomial_less(a->first, b->first); });
  nlohmann::json out = nlohmann::json::array();
  for (const auto* term : order) {
    nlohmann::json mono = nlohmann::json::object();
    for (std::size_t i = 0; i < term->first.size(); ++i)
      if (term->first[i] != 0) mono[names.at(i)] = term->first[i];
    out.push_back({{"monomial", mono}, {"coeff", term->second.str()}});
  }
  return out;
}

nlohmann::json to_structured(const ChowClass& x) {
  nlohmann::json out = nlohmann::json::array();
  if (x.is_zero()) return out;
  const Tower& t = *x.tower();
  for (const auto* term : display_terms(x)) {
    nlohmann::json mono = nlohmann::json::object();
    for (std::size_t i = 0; i < term->first.size(); ++i)
      if (term->first[i] != 0) mono[t.symbols()[i].name] = term->first[i];
    out.push_back({{"monomial", mono}, {"coeff", to_structured(term->second, t.params())}});
  }
  return out;
}

ParamPoly param_poly_from_structured(const nlohmann::json& j, const Tower& tower) {
  if (!j.is_array()) throw UserError("parameter polynomial must be a JSON array");
  ParamPoly out;
  for (const auto& term : j) {
    ParamMonomial m(tower.params().size(), 0);
    for (const auto& [name, e] : term.at("monomial").items()) {
      const auto idx = tower.param_index(name);
      if (!idx) throw UserError("unknown parameter '" + name + "'");
      m[*idx] = e.get<int>();
    }
    out.add_term(std::move(m), Rational::parse(term.at("coeff").get<std::string>()));
  }
  return out;
}

ChowClass class_from_structured(const nlohmann::json& j, const TowerPtr& tower) {
  if (!j.is_array()) throw UserError("class must be a JSON array");
  ClassTerms terms;
  for (const auto& term : j) {
    Monomial m(tower->symbols().size(), 0);
    for (const auto& [name, e] : term.at("monomial").items()) {
      const auto idx = tower->symbol_index(name);
      if (!idx) throw UserError("unknown symbol '" + name + "'");
      m[*idx] = e.get<int>();
    }
    terms[m] += param_poly_from_structured(term.at("coeff"), *tower);
  }
  return ChowClass::from_terms(tower, std::move(terms));
}

}  // namespace chow
