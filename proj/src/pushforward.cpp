#include "chow/pushforward.hpp"

#include <algorithm>
#include <string>

#include "chow/error.hpp"

namespace chow {

namespace {

const Tower& require_bundle(const TowerPtr& t) {
  if (!t || !t->is_bundle()) throw UserError("expected a class on a projective bundle");
  return *t;
}

/// Solves a square system over Q by Gauss-Jordan elimination.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw InvariantViolation("singular partial fraction system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = Rational(1) / a[col][col];
    for (std::size_t k = col; k < n; ++k) a[col][k] *= inv;
    b[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      const Rational factor = a[row][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= factor * a[col][k];
      b[row] -= factor * b[col];
    }
  }
  return b;
}

/// t^n coefficient of (1 + d t)^-j.
Rational power_series_coefficient(const Rational& d, int j, int n) {
  Rational sign_pow(1);
  for (int i = 0; i < n; ++i) sign_pow *= -d;
  return binomial(static_cast<unsigned>(n + j - 1), static_cast<unsigned>(j - 1)) * sign_pow;
}

Rational numeric_exponent(const ParamPoly& p) {
  const auto v = p.constant_value();
  if (!v) throw InapplicableError("symbolic bundle exponent; use the Segre-class route");
  return *v;
}

}  // namespace

BundleFactorization factorize_bundle(const Tower& bundle) {
  if (!bundle.is_bundle()) throw UserError("factorize_bundle needs a projective bundle level");
  BundleFactorization f;
  f.rank = bundle.rank();
  for (const auto& a : bundle.exponents()) {
    if (a.is_zero()) {
      ++f.zero_count;
      continue;
    }
    if (!a.is_constant()) f.numeric = false;
    auto it = std::find_if(f.factors.begin(), f.factors.end(),
                           [&](const auto& factor) { return factor.exponent == a; });
    if (it == f.factors.end())
      f.factors.push_back({a, 1});
    else
      ++it->multiplicity;
  }
  return f;
}

PartialFraction partial_fractions(const BundleFactorization& f) {
  if (f.factors.empty()) throw InapplicableError("trivial bundle has no partial fractions");
  if (!f.numeric) throw InapplicableError("symbolic bundle exponent; use the Segre-class route");

  PartialFraction pf;
  for (const auto& factor : f.factors) {
    const Rational d = numeric_exponent(factor.exponent);
    for (int j = 1; j <= factor.multiplicity; ++j) pf.entries.push_back({d, j, Rational(0)});
  }
  const std::size_t n = pf.entries.size();
  const std::vector<Rational> target = inverse_chern_series(f, static_cast<int>(n) - 1);

  std::vector<std::vector<Rational>> system(n, std::vector<Rational>(n));
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t col = 0; col < n; ++col)
      system[row][col] = power_series_coefficient(pf.entries[col].exponent, pf.entries[col].power,
                                                  static_cast<int>(row));
  const std::vector<Rational> q = solve(std::move(system), target);
  for (std::size_t i = 0; i < n; ++i) pf.entries[i].coefficient = q[i];
  return pf;
}

std::vector<Rational> inverse_chern_series(const BundleFactorization& f, int order) {
  const std::size_t len = static_cast<std::size_t>(std::max(order, 0)) + 1;
  std::vector<Rational> chern(len, Rational(0));
  chern[0] = 1;
  for (const auto& factor : f.factors) {
    const Rational d = numeric_exponent(factor.exponent);
    for (int k = 0; k < factor.multiplicity; ++k)
      for (std::size_t i = len; i-- > 1;) chern[i] += d * chern[i - 1];
  }
  std::vector<Rational> inv(len, Rational(0));
  inv[0] = 1;
  for (std::size_t i = 1; i < len; ++i) {
    Rational acc(0);
    for (std::size_t k = 1; k <= i; ++k) acc += chern[k] * inv[i - k];
    inv[i] = -acc;
  }
  return inv;
}

std::vector<Rational> partial_fraction_series(const PartialFraction& pf, int order) {
  std::vector<Rational> out(static_cast<std::size_t>(std::max(order, 0)) + 1, Rational(0));
  for (const auto& e : pf.entries)
    for (std::size_t n = 0; n < out.size(); ++n)
      out[n] += e.coefficient * power_series_coefficient(e.exponent, e.power, static_cast<int>(n));
  return out;
}

std::vector<ChowClass> segre_classes(const Tower& bundle, int order) {
  if (!bundle.is_bundle()) throw UserError("segre_classes needs a projective bundle level");
  const ChowClass s = invert_unit(bundle.bundle_chern());
  std::vector<ChowClass> out;
  for (int i = 0; i <= order; ++i) out.push_back(grade(s, i));
  return out;
}

// ---------------------------------------------------------------------------

ZetaPolynomial::ZetaPolynomial(TowerPtr bundle, std::vector<ChowClass> coefficients)
    : bundle_(std::move(bundle)), coeffs_(std::move(coefficients)) {
  const Tower& t = require_bundle(bundle_);
  for (auto& c : coeffs_) c = c.tower() ? pullback(c, t.base()) : ChowClass(t.base(), 0);
  trim();
}

ZetaPolynomial ZetaPolynomial::constant(TowerPtr bundle, const ChowClass& base_class) {
  return ZetaPolynomial(std::move(bundle), {base_class});
}

ZetaPolynomial ZetaPolynomial::zeta(TowerPtr bundle) {
  const Tower& t = require_bundle(bundle);
  return ZetaPolynomial(std::move(bundle), {ChowClass(t.base(), 0), ChowClass(t.base(), 1)});
}

void ZetaPolynomial::trim() {
  const int dim = bundle_->dim();
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int room = dim - static_cast<int>(i);
    if (room < 0)
      coeffs_[i] = ChowClass(bundle_->base(), 0);
    else if (coeffs_[i].max_degree() > room)
      coeffs_[i] = truncate_above(coeffs_[i], room);
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ChowClass ZetaPolynomial::coefficient(std::size_t i) const {
  if (i < coeffs_.size()) return coeffs_[i];
  return ChowClass(require_bundle(bundle_).base(), 0);
}

ZetaPolynomial ZetaPolynomial::operator-() const {
  ZetaPolynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

ZetaPolynomial& ZetaPolynomial::operator+=(const ZetaPolynomial& rhs) {
  if (!bundle_) bundle_ = rhs.bundle_;
  if (rhs.bundle_ && rhs.bundle_ != bundle_) throw TowerMismatchError("zeta polynomials on different bundles");
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), ChowClass(bundle_->base(), 0));
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

ZetaPolynomial& ZetaPolynomial::operator-=(const ZetaPolynomial& rhs) { return *this += -rhs; }

ZetaPolynomial operator*(const ZetaPolynomial& a, const ZetaPolynomial& b) {
  if (a.bundle_ != b.bundle_) throw TowerMismatchError("zeta polynomials on different bundles");
  if (a.coeffs_.empty() || b.coeffs_.empty()) return ZetaPolynomial(a.bundle_, {});
  const int dim = a.bundle_->dim();
  std::vector<ChowClass> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                             ChowClass(a.bundle_->base(), 0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      if (static_cast<int>(i + j) <= dim) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return ZetaPolynomial(a.bundle_, std::move(out));
}

ZetaPolynomial operator*(const ZetaPolynomial& a, const ParamPoly& s) {
  ZetaPolynomial out = a;
  for (auto& c : out.coeffs_) c *= s;
  out.trim();
  return out;
}

bool operator==(const ZetaPolynomial& a, const ZetaPolynomial& b) {
  return a.bundle_ == b.bundle_ && a.coeffs_ == b.coeffs_;
}

ZetaPolynomial ZetaPolynomial::pow(unsigned exponent) const {
  ZetaPolynomial result = constant(bundle_, ChowClass(bundle_->base(), 1));
  ZetaPolynomial base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

ZetaPolynomial ZetaPolynomial::derivative() const {
  std::vector<ChowClass> out;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out.push_back(coeffs_[i] * ParamPoly(Rational(static_cast<long>(i))));
  return ZetaPolynomial(bundle_, std::move(out));
}

ZetaPolynomial ZetaPolynomial::shift_down(std::size_t k) const {
  for (std::size_t i = 0; i < std::min(k, coeffs_.size()); ++i)
    if (!coeffs_[i].is_zero()) throw InvariantViolation("shift_down would drop nonzero terms");
  if (k >= coeffs_.size()) return ZetaPolynomial(bundle_, {});
  return ZetaPolynomial(bundle_, {coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()});
}

ZetaPolynomial ZetaPolynomial::tail(std::size_t k) const {
  ZetaPolynomial out = *this;
  for (std::size_t i = 0; i < std::min(k, out.coeffs_.size()); ++i)
    out.coeffs_[i] = ChowClass(bundle_->base(), 0);
  out.trim();
  return out;
}

ChowClass ZetaPolynomial::evaluate_at(const ChowClass& value) const {
  const TowerPtr& base = require_bundle(bundle_).base();
  const ChowClass v = pullback(value, base);
  ChowClass acc(base, 0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * v + coeffs_[i];
  return acc;
}

ChowClass ZetaPolynomial::to_class() const {
  require_bundle(bundle_);
  const ChowClass zeta = ChowClass::symbol(bundle_, bundle_->zeta_index());
  ChowClass acc(bundle_, 0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * zeta + pullback(coeffs_[i], bundle_);
  return acc;
}

ZetaPolynomial invert_unit(const ZetaPolynomial& x) {
  const TowerPtr& bundle = x.bundle();
  const Tower& t = require_bundle(bundle);
  const auto unit = x.coefficient(0).constant_term().constant_value();
  if (!unit || unit->is_zero())
    throw NonUnitError("cannot invert a class whose degree-0 part is not a nonzero rational");
  const ParamPoly inv(Rational(1) / *unit);
  const ZetaPolynomial one = ZetaPolynomial::constant(bundle, ChowClass(t.base(), 1));
  const ZetaPolynomial m = x * inv - one;
  ZetaPolynomial series = one;
  for (int k = 0; k < t.dim(); ++k) series = one - m * series;
  return series * inv;
}

ZetaPolynomial to_zeta_polynomial(const ChowClass& x) {
  const Tower& t = require_bundle(x.tower());
  const std::size_t z = t.zeta_index();
  std::vector<ClassTerms> parts(static_cast<std::size_t>(t.rank()));
  for (const auto& [m, c] : x.terms()) {
    Monomial base_part(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(z));
    parts.at(static_cast<std::size_t>(m[z])).emplace(std::move(base_part), c);
  }
  std::vector<ChowClass> coeffs;
  for (auto& p : parts) coeffs.push_back(ChowClass::from_terms(t.base(), std::move(p)));
  return ZetaPolynomial(x.tower(), std::move(coeffs));
}

ChowClass pushforward_oracle(const ZetaPolynomial& f) {
  const Tower& t = require_bundle(f.bundle());
  const int nf = t.fiber_dim();
  const int base_dim = t.base()->dim();
  const std::vector<ChowClass> segre = segre_classes(t, base_dim);
  ChowClass out(t.base(), 0);
  for (std::size_t i = static_cast<std::size_t>(nf); i < f.size(); ++i) {
    const int j = static_cast<int>(i) - nf;
    if (j > base_dim) break;
    out += f.coefficient(i) * segre[static_cast<std::size_t>(j)];
  }
  return out;
}

ChowClass pushforward_oracle(const ChowClass& x) { return pushforward_oracle(to_zeta_polynomial(x)); }

ChowClass pushforward_closed(const ZetaPolynomial& f, IndexConvention convention) {
  const Tower& t = require_bundle(f.bundle());
  const BundleFactorization factorization = factorize_bundle(t);
  if (!factorization.closed_form_applicable())
    throw InapplicableError("closed form needs a numeric bundle with a nonzero exponent");
  const PartialFraction pf = partial_fractions(factorization);

  const int nf = t.fiber_dim();
  const ZetaPolynomial upper = f.tail(static_cast<std::size_t>(nf));
  const ZetaPolynomial zeta = ZetaPolynomial::zeta(f.bundle());
  ChowClass out(t.base(), 0);
  for (const auto& e : pf.entries) {
    const int shift = convention == IndexConvention::Proof ? nf - e.power + 1 : nf - e.power;
    ZetaPolynomial g = shift >= 0 ? upper.shift_down(static_cast<std::size_t>(shift))
                                  : upper * zeta.pow(static_cast<unsigned>(-shift));
    for (int k = 1; k < e.power; ++k) g = g.derivative();
    const ChowClass at = t.line_class() * ParamPoly(-e.exponent);
    out += g.evaluate_at(at) * ParamPoly(e.coefficient / factorial(static_cast<unsigned>(e.power - 1)));
  }
  return out;
}

ChowClass pushforward_closed(const ChowClass& x, IndexConvention convention) {
  return pushforward_closed(to_zeta_polynomial(x), convention);
}

ChowClass pushforward(const ZetaPolynomial& f) {
  const Tower& t = require_bundle(f.bundle());
  if (factorize_bundle(t).closed_form_applicable()) return pushforward_closed(f);
  return pushforward_oracle(f);
}

ChowClass pushforward(const ChowClass& x) { return pushforward(to_zeta_polynomial(x)); }

ChowClass push_to_root(const ChowClass& x) {
  if (!x.tower()) throw TowerMismatchError("class is not attached to a tower");
  ChowClass cur = x;
  while (cur.tower()->is_bundle()) cur = pushforward(cur);
  return cur;
}

ParamPoly integrate(const ChowClass& x) {
  if (!x.tower()) throw TowerMismatchError("class is not attached to a tower");
  if (x.tower()->root().dim() != 0)
    throw UserError("integration needs a tower rooted at a point; root has dimension " +
                    std::to_string(x.tower()->root().dim()));
  return push_to_root(x).constant_term();
}

}  // namespace chow
