#include "chow/chow_class.hpp"

#include <string>

#include "chow/error.hpp"
#include "chow/tower.hpp"

namespace chow {

namespace {

void add_into(ClassTerms& terms, const Monomial& m, const ParamPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
}

const TowerPtr& common_tower(const ChowClass& a, const ChowClass& b) {
  if (!a.tower()) return b.tower();
  if (!b.tower()) return a.tower();
  if (a.tower() != b.tower()) throw TowerMismatchError("classes live on different towers");
  return a.tower();
}

const TowerPtr& require_tower(const ChowClass& x) {
  if (!x.tower()) throw TowerMismatchError("class is not attached to a tower");
  return x.tower();
}

}  // namespace

ChowClass::ChowClass(TowerPtr tower, ParamPoly constant) : tower_(std::move(tower)) {
  if (!tower_) throw TowerMismatchError("class needs a tower");
  if (!constant.is_zero()) terms_.emplace(Monomial(tower_->symbols().size(), 0), std::move(constant));
}

ChowClass ChowClass::from_terms(TowerPtr tower, ClassTerms terms) {
  if (!tower) throw TowerMismatchError("class needs a tower");
  ChowClass out;
  out.terms_ = tower->normalize(std::move(terms));
  out.tower_ = std::move(tower);
  return out;
}

ChowClass ChowClass::symbol(TowerPtr tower, std::size_t index) {
  if (!tower || index >= tower->symbols().size()) throw UserError("symbol index out of range");
  Monomial m(tower->symbols().size(), 0);
  m[index] = 1;
  ClassTerms terms;
  terms.emplace(std::move(m), ParamPoly(1));
  return from_terms(std::move(tower), std::move(terms));
}

ChowClass ChowClass::symbol(TowerPtr tower, std::string_view name) {
  if (!tower) throw TowerMismatchError("class needs a tower");
  const auto index = tower->symbol_index(name);
  if (!index) throw UserError("unknown symbol '" + std::string(name) + "'");
  return symbol(std::move(tower), *index);
}

ChowClass ChowClass::parameter(TowerPtr tower, std::string_view name) {
  if (!tower) throw TowerMismatchError("class needs a tower");
  const auto index = tower->param_index(name);
  if (!index) throw UserError("unknown parameter '" + std::string(name) + "'");
  return ChowClass(std::move(tower), ParamPoly::variable(*index));
}

ParamPoly ChowClass::constant_term() const {
  for (const auto& [m, c] : terms_)
    if (tower_->monomial_degree(m) == 0) return c;
  return ParamPoly();
}

int ChowClass::max_degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, tower_->monomial_degree(m));
  return d;
}

bool ChowClass::is_homogeneous(int degree) const {
  for (const auto& [m, c] : terms_)
    if (tower_->monomial_degree(m) != degree) return false;
  return true;
}

ChowClass ChowClass::operator-() const {
  ChowClass out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

ChowClass& ChowClass::operator+=(const ChowClass& rhs) {
  tower_ = common_tower(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) add_into(terms_, m, c);
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& rhs) {
  tower_ = common_tower(*this, rhs);
  for (const auto& [m, c] : rhs.terms_) add_into(terms_, m, -c);
  return *this;
}

ChowClass& ChowClass::operator*=(const ChowClass& rhs) { return *this = mul(*this, rhs); }

ChowClass& ChowClass::operator*=(const ParamPoly& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  ClassTerms out;
  for (auto& [m, c] : terms_) add_into(out, m, c * scalar);
  terms_ = std::move(out);
  return *this;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) { return mul(a, b); }

bool operator==(const ChowClass& a, const ChowClass& b) {
  if (a.terms_ != b.terms_) return false;
  return a.is_zero() || a.tower_ == b.tower_;
}

ChowClass mul(const ChowClass& x, const ChowClass& y) {
  const TowerPtr& tower = common_tower(x, y);
  if (!tower) return ChowClass();
  const Tower& t = *tower;
  ClassTerms product;
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      Monomial m = mx;
      for (std::size_t i = 0; i < m.size(); ++i) m[i] += my[i];
      if (!t.vanishes(m)) add_into(product, m, cx * cy);
    }
  }
  return ChowClass::from_terms(tower, std::move(product));
}

ChowClass ChowClass::pow(unsigned exponent) const {
  ChowClass result(require_tower(*this), 1);
  ChowClass base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = mul(result, base);
    exponent >>= 1U;
    if (exponent != 0) {
      if (base.is_zero()) return base;
      base = mul(base, base);
    }
  }
  return result;
}

ChowClass invert_unit(const ChowClass& x) {
  const TowerPtr& tower = require_tower(x);
  const auto unit = x.constant_term().constant_value();
  if (!unit || unit->is_zero())
    throw NonUnitError("cannot invert a class whose degree-0 part is not a nonzero rational");
  const Rational inv = Rational(1) / *unit;
  // x = u (1 + m) with m nilpotent; 1/x = u^-1 (1 - m + m^2 - ...)
  ChowClass m = x * ParamPoly(inv) - ChowClass(tower, 1);
  ChowClass series(tower, 1);
  for (int k = 0; k < tower->dim(); ++k) series = ChowClass(tower, 1) - m * series;
  return series * ParamPoly(inv);
}

ChowClass grade(const ChowClass& x, int k) {
  if (!x.tower()) return x;
  ClassTerms out;
  for (const auto& [m, c] : x.terms())
    if (x.tower()->monomial_degree(m) == k) out.emplace(m, c);
  return ChowClass::from_terms(x.tower(), std::move(out));
}

ChowClass truncate_above(const ChowClass& x, int k) {
  if (!x.tower()) return x;
  ClassTerms out;
  for (const auto& [m, c] : x.terms())
    if (x.tower()->monomial_degree(m) <= k) out.emplace(m, c);
  return ChowClass::from_terms(x.tower(), std::move(out));
}

ChowClass substitute(const ChowClass& x, std::string_view symbol, const ChowClass& value) {
  const TowerPtr& tower = require_tower(x);
  const auto index = tower->symbol_index(symbol);
  if (!index) throw UserError("unknown symbol '" + std::string(symbol) + "'");
  const ChowClass v = value.tower() ? pullback(value, tower) : ChowClass(tower, 0);
  const int degree = tower->symbols()[*index].degree;
  if (!v.is_homogeneous(degree))
    throw DegreeError("substituted value must have degree " + std::to_string(degree));

  std::map<int, ClassTerms> by_exponent;
  for (const auto& [m, c] : x.terms()) {
    Monomial rest = m;
    rest[*index] = 0;
    by_exponent[m[*index]].emplace(std::move(rest), c);
  }
  ChowClass out(tower, 0);
  for (auto& [e, terms] : by_exponent) {
    ChowClass part = ChowClass::from_terms(tower, std::move(terms));
    out += e == 0 ? part : part * v.pow(static_cast<unsigned>(e));
  }
  return out;
}

ChowClass substitute_parameter(const ChowClass& x, std::string_view parameter,
                               const ParamPoly& value) {
  const TowerPtr& tower = require_tower(x);
  const auto index = tower->param_index(parameter);
  if (!index) throw UserError("unknown parameter '" + std::string(parameter) + "'");
  ClassTerms out;
  for (const auto& [m, c] : x.terms()) add_into(out, m, c.substitute(*index, value));
  return ChowClass::from_terms(tower, std::move(out));
}

ChowClass pullback(const ChowClass& x, const TowerPtr& target) {
  const TowerPtr& source = require_tower(x);
  if (!target) throw TowerMismatchError("pullback needs a target tower");
  if (source == target) return x;
  if (!source->is_ancestor_of(*target))
    throw TowerMismatchError("pullback target does not lie over the class's tower");
  ClassTerms out;
  for (const auto& [m, c] : x.terms()) {
    Monomial lifted = m;
    lifted.resize(target->symbols().size(), 0);
    out.emplace(std::move(lifted), c);
  }
  return ChowClass::from_terms(target, std::move(out));
}

ChowClass descend(const ChowClass& x, const TowerPtr& ancestor) {
  const TowerPtr& source = require_tower(x);
  if (!ancestor) throw TowerMismatchError("descend needs a target tower");
  if (source == ancestor) return x;
  if (!ancestor->is_ancestor_of(*source))
    throw TowerMismatchError("descend target is not below the class's tower");
  const std::size_t n = ancestor->symbols().size();
  ClassTerms out;
  for (const auto& [m, c] : x.terms()) {
    for (std::size_t i = n; i < m.size(); ++i)
      if (m[i] != 0) throw InvariantViolation("class depends on symbols above the target tower");
    out.emplace(Monomial(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(n)), c);
  }
  return ChowClass::from_terms(ancestor, std::move(out));
}

ChowClass total_chern(const TowerPtr& tower) {
  if (!tower) throw TowerMismatchError("total_chern needs a tower");
  if (!tower->is_bundle()) {
    ChowClass c(tower, 1);
    for (int i = 1; i <= tower->dim(); ++i) c += ChowClass::symbol(tower, "c" + std::to_string(i));
    return c;
  }
  ChowClass c = pullback(total_chern(tower->base()), tower);
  const ChowClass zeta = ChowClass::symbol(tower, tower->zeta_index());
  const ChowClass line = pullback(tower->line_class(), tower);
  for (const auto& a : tower->exponents()) c *= ChowClass(tower, 1) + zeta + line * a;
  return c;
}

}  // namespace chow
