#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "chow/chow_class.hpp"
#include "chow/pushforward.hpp"
#include "chow/rational.hpp"
#include "chow/tower.hpp"

namespace chow {

/// Syntax tree of a class expression.
///
/// Grammar (whitespace is insignificant, '*' is never implicit):
///
///     expr   := term (('+' | '-') term)*
///     term   := factor (('*' | '/') factor)*
///     factor := ('+' | '-') factor | atom ('^' integer)?
///     atom   := integer | identifier | '(' expr ')'
///
/// So "a+b*c" is a+(b*c), "a/b/c" is (a/b)/c and "-a^2" is -(a^2). A literal
/// like "3/4" is the quotient of two integers and evaluates exactly.
struct Expr {
  enum class Kind { Number, Symbol, Negate, Add, Subtract, Multiply, Divide, Power };

  Kind kind = Kind::Number;
  std::size_t position = 0;
  Rational number;
  std::string name;
  unsigned exponent = 0;
  std::shared_ptr<const Expr> lhs;
  std::shared_ptr<const Expr> rhs;
};

using ExprPtr = std::shared_ptr<const Expr>;

/// Names an expression may reference: graded symbols and degree-0 parameters.
struct SymbolTable {
  std::vector<std::string> graded;
  std::vector<std::string> params;

  static SymbolTable of(const Tower& tower);
  bool contains(std::string_view name) const;
};

/// Throws ParseError (with the offending position) or UnknownSymbolError.
ExprPtr parse(std::string_view text, const SymbolTable& symbols);

/// Evaluates to a normalized class; quotients go through invert_unit.
ChowClass eval(const Expr& e, const TowerPtr& tower);
ChowClass eval(std::string_view text, const TowerPtr& tower);

/// Evaluates in A(B)[zeta] over the top bundle level without applying the
/// bundle relation, giving an unreduced representative f_C.
ZetaPolynomial eval_zeta(const Expr& e, const TowerPtr& bundle);
ZetaPolynomial eval_zeta(std::string_view text, const TowerPtr& bundle);

/// Evaluates a degree-0 expression in the tower's parameters.
ParamPoly eval_param(std::string_view text, const TowerPtr& tower);

/// Canonical text: ascending graded degree; within a degree, ascending
/// lexicographic with the outermost hyperplane class most significant.
std::string format(const ChowClass& x);

/// Terms of `x` in the canonical display order used by format().
std::vector<const ClassTerms::value_type*> display_terms(const ChowClass& x);
std::string format(const ParamPoly& p, const Tower& tower);

}  // namespace chow
