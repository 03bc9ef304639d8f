#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chow/rational.hpp"

namespace chow {

/// Exponent vector over the declared parameters, trailing zeros trimmed so
/// that equal monomials compare equal regardless of how many parameters the
/// surrounding context declares.
using ParamMonomial = std::vector<int>;

/// Polynomial with rational coefficients in the degree-0 parameters of a
/// computation (twist n, plane-curve data a, b, d, e, ...). Parameters are
/// referred to by their index in the declaring tower's parameter list.
class ParamPoly {
 public:
  using Terms = std::map<ParamMonomial, Rational>;

  ParamPoly() = default;
  ParamPoly(Rational constant);  // NOLINT(google-explicit-constructor)
  ParamPoly(long constant) : ParamPoly(Rational(constant)) {}  // NOLINT

  static ParamPoly variable(std::size_t index);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The value if the polynomial has no parameter dependence.
  std::optional<Rational> constant_value() const;
  Rational constant_term() const;
  int total_degree() const;
  /// Highest parameter index referenced plus one.
  std::size_t arity() const;

  const Terms& terms() const { return terms_; }

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& rhs);
  ParamPoly& operator-=(const ParamPoly& rhs);
  ParamPoly& operator*=(const ParamPoly& rhs);
  ParamPoly& operator*=(const Rational& rhs);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const Rational& b) { return a *= b; }
  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;

  ParamPoly pow(unsigned exponent) const;

  /// Replaces parameter `index` by `value`.
  ParamPoly substitute(std::size_t index, const ParamPoly& value) const;

  /// Canonical text: terms in ascending graded-lex order (declared parameter
  /// order), e.g. "4176 + 144*n^2".
  std::string format(const std::vector<std::string>& names) const;

  /// Adds `coeff * monomial`, dropping the entry if it cancels.
  void add_term(ParamMonomial monomial, const Rational& coeff);

 private:
  Terms terms_;
};

/// Graded comparison of parameter monomials: lower degree first, then by
/// declaration order (a before b, a^2 before a*b).
bool param_monomial_less(const ParamMonomial& a, const ParamMonomial& b);

}  // namespace chow
