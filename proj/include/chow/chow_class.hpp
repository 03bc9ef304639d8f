#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string_view>
#include <vector>

#include "chow/param_poly.hpp"

namespace chow {

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

/// Exponents over all graded symbols of a tower, indexed base-first.
using Monomial = std::vector<int>;
using ClassTerms = std::map<Monomial, ParamPoly>;

/// Element of the Chow ring of a tower, always held in normal form: at every
/// bundle level the hyperplane class appears with exponent below the rank,
/// base parts beyond the dimension of their level are dropped, and no
/// coefficient is zero. Two classes are equal iff their term maps are equal.
class ChowClass {
 public:
  ChowClass() = default;
  ChowClass(TowerPtr tower, ParamPoly constant);

  /// Normalizes arbitrary terms on `tower`.
  static ChowClass from_terms(TowerPtr tower, ClassTerms terms);
  static ChowClass symbol(TowerPtr tower, std::string_view name);
  static ChowClass symbol(TowerPtr tower, std::size_t index);
  /// Degree-0 class equal to a declared parameter.
  static ChowClass parameter(TowerPtr tower, std::string_view name);

  const TowerPtr& tower() const { return tower_; }
  const ClassTerms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ParamPoly constant_term() const;
  /// Largest graded degree of a term, -1 for the zero class.
  int max_degree() const;
  /// True when every term has graded degree `degree` (vacuously for zero).
  bool is_homogeneous(int degree) const;

  ChowClass operator-() const;
  ChowClass& operator+=(const ChowClass& rhs);
  ChowClass& operator-=(const ChowClass& rhs);
  ChowClass& operator*=(const ChowClass& rhs);
  ChowClass& operator*=(const ParamPoly& scalar);

  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator*(ChowClass a, const ParamPoly& s) { return a *= s; }
  friend ChowClass operator*(const ParamPoly& s, ChowClass a) { return a *= s; }
  friend bool operator==(const ChowClass& a, const ChowClass& b);

  ChowClass pow(unsigned exponent) const;

 private:
  TowerPtr tower_;
  ClassTerms terms_;
};

ChowClass mul(const ChowClass& x, const ChowClass& y);

/// Inverse of a class whose degree-0 part is a nonzero rational, by the
/// geometric series truncated at the tower dimension. Throws NonUnitError.
ChowClass invert_unit(const ChowClass& x);

/// Sum of the terms of graded degree exactly `k`.
ChowClass grade(const ChowClass& x, int k);
/// Drops terms of graded degree above `k`.
ChowClass truncate_above(const ChowClass& x, int k);

/// Polynomial substitution of a graded symbol followed by normalization.
/// `value` may live on an ancestor tower; it must be homogeneous of the
/// symbol's degree.
ChowClass substitute(const ChowClass& x, std::string_view symbol, const ChowClass& value);
ChowClass substitute_parameter(const ChowClass& x, std::string_view parameter, const ParamPoly& value);

/// Pulls `x` back along the projections from `target` down to x's tower.
ChowClass pullback(const ChowClass& x, const TowerPtr& target);
/// Views a class with no symbols above `ancestor` as a class on `ancestor`.
ChowClass descend(const ChowClass& x, const TowerPtr& ancestor);

/// Total Chern class of the tangent bundle: 1 + c1 + ... on a formal base,
/// pullback of the base class times prod(1 + zeta + a_i L) on a bundle.
ChowClass total_chern(const TowerPtr& tower);

}  // namespace chow
