#include "chow/param_poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace chow {

namespace {

void trim(ParamMonomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

int degree_of(const ParamMonomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

ParamMonomial multiply(const ParamMonomial& a, const ParamMonomial& b) {
  ParamMonomial out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

}  // namespace

bool param_monomial_less(const ParamMonomial& a, const ParamMonomial& b) {
  const int da = degree_of(a);
  const int db = degree_of(b);
  if (da != db) return da < db;
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const int ea = i < a.size() ? a[i] : 0;
    const int eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

ParamPoly::ParamPoly(Rational constant) {
  if (!constant.is_zero()) terms_.emplace(ParamMonomial{}, std::move(constant));
}

ParamPoly ParamPoly::variable(std::size_t index) {
  ParamPoly p;
  ParamMonomial m(index + 1, 0);
  m[index] = 1;
  p.terms_.emplace(std::move(m), Rational(1));
  return p;
}

bool ParamPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::optional<Rational> ParamPoly::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return constant_term();
}

Rational ParamPoly::constant_term() const {
  auto it = terms_.find(ParamMonomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int ParamPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, degree_of(m));
  return d;
}

std::size_t ParamPoly::arity() const {
  std::size_t n = 0;
  for (const auto& [m, c] : terms_) n = std::max(n, m.size());
  return n;
}

void ParamPoly::add_term(ParamMonomial monomial, const Rational& coeff) {
  if (coeff.is_zero()) return;
  trim(monomial);
  auto [it, inserted] = terms_.try_emplace(std::move(monomial), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
  return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& rhs) { return *this = *this * rhs; }

ParamPoly& ParamPoly::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= rhs;
  return *this;
}

ParamPoly ParamPoly::pow(unsigned exponent) const {
  ParamPoly result(1);
  ParamPoly base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

ParamPoly ParamPoly::substitute(std::size_t index, const ParamPoly& value) const {
  ParamPoly out;
  std::map<int, ParamPoly> powers;
  for (const auto& [m, c] : terms_) {
    const int e = index < m.size() ? m[index] : 0;
    ParamMonomial rest = m;
    if (index < rest.size()) rest[index] = 0;
    ParamPoly term;
    term.add_term(rest, c);
    if (e == 0) {
      out += term;
      continue;
    }
    auto it = powers.find(e);
    if (it == powers.end()) it = powers.emplace(e, value.pow(static_cast<unsigned>(e))).first;
    out += term * it->second;
  }
  return out;
}

std::string ParamPoly::format(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> order;
  order.reserve(terms_.size());
  for (const auto& t : terms_) order.push_back(&t);
  std::sort(order.begin(), order.end(),
            [](auto* a, auto* b) { return param_monomial_less(a->first, b->first); });

  std::ostringstream os;
  bool first = true;
  for (const auto* term : order) {
    const auto& [m, c] = *term;
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const Rational mag = c.abs();
    bool need_star = false;
    if (m.empty() || !mag.is_one()) {
      os << mag.str();
      need_star = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (i >= names.size()) throw std::out_of_range("parameter index without a name");
      if (need_star) os << '*';
      os << names[i];
      if (m[i] != 1) os << '^' << m[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace chow
