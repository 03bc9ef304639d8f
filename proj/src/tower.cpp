#include "chow/tower.hpp"

#include <algorithm>
#include <set>

#include "chow/error.hpp"

namespace chow {

namespace {

void add_into(ClassTerms& terms, Monomial m, const ParamPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(std::move(m), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void check_names(const std::vector<std::string>& names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw UserError("empty symbol name");
    if (!seen.insert(n).second) throw UserError("duplicate symbol name '" + n + "'");
  }
}

}  // namespace

TowerPtr Tower::make_point(std::vector<std::string> params) {
  return make_formal_base(0, {}, std::move(params));
}

TowerPtr Tower::make_formal_base(int dim, std::vector<std::string> divisors,
                                 std::vector<std::string> params) {
  if (dim < 0) throw UserError("negative base dimension");
  std::shared_ptr<Tower> t(new Tower());
  t->dim_ = dim;
  t->level_ = 0;
  for (int i = 1; i <= dim; ++i) t->symbols_.push_back({"c" + std::to_string(i), i, 0});
  for (auto& d : divisors) t->symbols_.push_back({std::move(d), 1, 0});
  t->params_ = std::move(params);

  std::vector<std::string> all = t->params_;
  for (const auto& s : t->symbols_) all.push_back(s.name);
  check_names(all);

  t->level_dims_ = {dim};
  t->level_end_ = {t->symbols_.size()};
  return t;
}

TowerPtr Tower::make_projective_bundle(const TowerPtr& base, const ChowClass& line,
                                       std::vector<ParamPoly> exponents, std::string zeta_name) {
  if (!base) throw UserError("projective bundle needs a base");
  if (exponents.empty()) throw UserError("projective bundle needs at least one summand");

  ChowClass lifted = line.tower() ? pullback(line, base) : ChowClass(base, 0);
  if (!lifted.is_homogeneous(1)) throw DegreeError("line class must have pure degree 1");
  for (const auto& a : exponents)
    if (a.arity() > base->params().size()) throw UserError("exponent uses an undeclared parameter");

  std::shared_ptr<Tower> t(new Tower());
  t->base_ = base;
  t->level_ = base->level_ + 1;
  t->dim_ = base->dim_ + static_cast<int>(exponents.size()) - 1;
  t->symbols_ = base->symbols_;
  if (zeta_name.empty()) zeta_name = "z" + std::to_string(t->level_);
  t->symbols_.push_back({std::move(zeta_name), 1, t->level_});
  t->params_ = base->params_;

  std::vector<std::string> all = t->params_;
  for (const auto& s : t->symbols_) all.push_back(s.name);
  check_names(all);

  t->level_dims_ = base->level_dims_;
  t->level_dims_.push_back(t->dim_);
  t->level_end_ = base->level_end_;
  t->level_end_.push_back(t->symbols_.size());

  t->exponents_ = std::move(exponents);
  t->line_ = lifted;
  ChowClass chern(base, 1);
  for (const auto& a : t->exponents_) chern *= ChowClass(base, 1) + lifted * a;
  t->bundle_chern_ = chern;
  t->build_reduction_table();
  return t;
}

const Tower& Tower::root() const {
  const Tower* t = this;
  while (t->base_) t = t->base_.get();
  return *t;
}

std::optional<std::size_t> Tower::symbol_index(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Tower::param_index(std::string_view name) const {
  for (std::size_t i = 0; i < params_.size(); ++i)
    if (params_[i] == name) return i;
  return std::nullopt;
}

bool Tower::is_ancestor_of(const Tower& other) const {
  for (const Tower* t = &other; t != nullptr; t = t->base_.get())
    if (t == this) return true;
  return false;
}

int Tower::monomial_degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * symbols_[i].degree;
  return d;
}

bool Tower::vanishes(const Monomial& m) const {
  int degree = 0;
  std::size_t i = 0;
  for (std::size_t j = 0; j < level_end_.size(); ++j) {
    for (; i < level_end_[j]; ++i) degree += m[i] * symbols_[i].degree;
    if (degree > level_dims_[j]) return true;
  }
  return false;
}

void Tower::build_reduction_table() {
  const int rho = rank();
  if (rho > dim_) return;  // zeta^rank already vanishes for degree reasons
  const std::size_t z = zeta_index();

  // zeta^rho = -(c1 zeta^(rho-1) + ... + c_rho)
  ClassTerms top;
  for (const auto& [m, c] : bundle_chern_.terms()) {
    const int i = base_->monomial_degree(m);
    if (i == 0) continue;
    Monomial lifted = m;
    lifted.resize(symbols_.size(), 0);
    lifted[z] = rho - i;
    if (!vanishes(lifted)) add_into(top, std::move(lifted), -c);
  }
  zeta_powers_.push_back(std::move(top));

  for (int e = rho + 1; e <= dim_; ++e) {
    ClassTerms shifted;
    for (const auto& [m, c] : zeta_powers_.back()) {
      Monomial next = m;
      ++next[z];
      if (!vanishes(next)) add_into(shifted, std::move(next), c);
    }
    zeta_powers_.push_back(normalize(std::move(shifted)));
  }
}

ClassTerms Tower::reduce_levels(ClassTerms terms, const Tower* start) const {
  for (const Tower* lvl = start; lvl != nullptr && lvl->is_bundle(); lvl = lvl->base_.get()) {
    const std::size_t z = lvl->zeta_index();
    const int rho = lvl->rank();
    const bool dirty = std::any_of(terms.begin(), terms.end(),
                                   [&](const auto& t) { return t.first[z] >= rho; });
    if (!dirty) continue;

    ClassTerms next;
    for (auto& [m, c] : terms) {
      if (m[z] < rho) {
        add_into(next, m, c);
        continue;
      }
      const auto& table = lvl->zeta_powers_.at(static_cast<std::size_t>(m[z] - rho));
      Monomial rest = m;
      rest[z] = 0;
      for (const auto& [tm, tc] : table) {
        Monomial product = rest;
        for (std::size_t i = 0; i < tm.size(); ++i) product[i] += tm[i];
        if (!vanishes(product)) add_into(next, std::move(product), c * tc);
      }
    }
    terms = std::move(next);
  }
  return terms;
}

ClassTerms Tower::normalize(ClassTerms terms) const {
  for (auto it = terms.begin(); it != terms.end();) {
    if (it->first.size() != symbols_.size())
      throw InvariantViolation("monomial length does not match tower");
    if (it->second.is_zero() || vanishes(it->first))
      it = terms.erase(it);
    else
      ++it;
  }
  return reduce_levels(std::move(terms), this);
}

}  // namespace chow
