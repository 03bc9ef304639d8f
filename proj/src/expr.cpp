#include "chow/expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "chow/error.hpp"

namespace chow {

namespace {

constexpr int kMaxNesting = 256;
constexpr unsigned long kMaxExponent = 10000;

class Parser {
 public:
  Parser(std::string_view text, const SymbolTable& symbols) : text_(text), symbols_(symbols) {}

  ExprPtr run() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static std::shared_ptr<Expr> binary(Expr::Kind kind, std::size_t pos, ExprPtr lhs, ExprPtr rhs) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->position = pos;
    e->lhs = std::move(lhs);
    e->rhs = std::move(rhs);
    return e;
  }

  ExprPtr expr() {
    if (++depth_ > kMaxNesting) fail("expression nested too deeply");
    ExprPtr lhs = term();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('+'))
        lhs = binary(Expr::Kind::Add, at, lhs, term());
      else if (accept('-'))
        lhs = binary(Expr::Kind::Subtract, at, lhs, term());
      else
        break;
    }
    --depth_;
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    for (;;) {
      skip_space();
      const std::size_t at = pos_;
      if (accept('*'))
        lhs = binary(Expr::Kind::Multiply, at, lhs, factor());
      else if (accept('/'))
        lhs = binary(Expr::Kind::Divide, at, lhs, factor());
      else
        break;
    }
    return lhs;
  }

  ExprPtr factor() {
    if (++depth_ > kMaxNesting) fail("expression nested too deeply");
    skip_space();
    const std::size_t at = pos_;
    ExprPtr out;
    if (accept('-')) {
      out = binary(Expr::Kind::Negate, at, factor(), nullptr);
    } else if (accept('+')) {
      out = factor();
    } else {
      out = atom();
      skip_space();
      const std::size_t caret = pos_;
      if (accept('^')) {
        skip_space();
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (digits == pos_) fail("expected a non-negative integer exponent");
        const std::string_view literal = text_.substr(digits, pos_ - digits);
        if (literal.size() > 6 || std::stoul(std::string(literal)) > kMaxExponent) {
          pos_ = digits;
          fail("exponent too large");
        }
        auto e = binary(Expr::Kind::Power, caret, out, nullptr);
        e->exponent = static_cast<unsigned>(std::stoul(std::string(literal)));
        out = e;
      }
    }
    --depth_;
    return out;
  }

  ExprPtr atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    auto e = std::make_shared<Expr>();
    e->position = start;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      e->kind = Expr::Kind::Number;
      e->number = Rational(mpz_class(std::string(text_.substr(start, pos_ - start)), 10));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      e->kind = Expr::Kind::Symbol;
      e->name = std::string(text_.substr(start, pos_ - start));
      if (!symbols_.contains(e->name)) throw UnknownSymbolError(start, e->name);
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const SymbolTable& symbols_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

/// Shared tree walk; `Ops` supplies constants, symbols and division.
template <class Ops>
auto evaluate(const Expr& e, const Ops& ops) -> decltype(ops.number(Rational())) {
  switch (e.kind) {
    case Expr::Kind::Number:
      return ops.number(e.number);
    case Expr::Kind::Symbol:
      return ops.symbol(e.name);
    case Expr::Kind::Negate:
      return -evaluate(*e.lhs, ops);
    case Expr::Kind::Add:
      return evaluate(*e.lhs, ops) + evaluate(*e.rhs, ops);
    case Expr::Kind::Subtract:
      return evaluate(*e.lhs, ops) - evaluate(*e.rhs, ops);
    case Expr::Kind::Multiply:
      return evaluate(*e.lhs, ops) * evaluate(*e.rhs, ops);
    case Expr::Kind::Divide: {
      auto denominator = evaluate(*e.rhs, ops);
      try {
        return evaluate(*e.lhs, ops) * invert_unit(denominator);
      } catch (const NonUnitError&) {
        throw NonUnitError("division by a non-unit at position " + std::to_string(e.position));
      }
    }
    case Expr::Kind::Power:
      return evaluate(*e.lhs, ops).pow(e.exponent);
  }
  throw InvariantViolation("unhandled expression kind");
}

struct ClassOps {
  TowerPtr tower;
  ChowClass number(const Rational& r) const { return ChowClass(tower, r); }
  ChowClass symbol(const std::string& name) const {
    if (tower->symbol_index(name)) return ChowClass::symbol(tower, name);
    if (tower->param_index(name)) return ChowClass::parameter(tower, name);
    throw UserError("unknown symbol '" + name + "'");
  }
};

struct ZetaOps {
  TowerPtr bundle;
  ZetaPolynomial number(const Rational& r) const {
    return ZetaPolynomial::constant(bundle, ChowClass(bundle->base(), r));
  }
  ZetaPolynomial symbol(const std::string& name) const {
    if (name == bundle->zeta_name()) return ZetaPolynomial::zeta(bundle);
    if (bundle->base()->symbol_index(name))
      return ZetaPolynomial::constant(bundle, ChowClass::symbol(bundle->base(), name));
    if (bundle->param_index(name))
      return ZetaPolynomial::constant(bundle, ChowClass::parameter(bundle->base(), name));
    throw UserError("unknown symbol '" + name + "'");
  }
};

/// Lexicographic priority: outer levels first, then declaration order.
std::vector<std::size_t> display_priority(const Tower& t) {
  std::vector<std::size_t> order(t.symbols().size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return t.symbols()[a].level > t.symbols()[b].level;
  });
  return order;
}

}  // namespace

SymbolTable SymbolTable::of(const Tower& tower) {
  SymbolTable table;
  for (const auto& s : tower.symbols()) table.graded.push_back(s.name);
  table.params = tower.params();
  return table;
}

bool SymbolTable::contains(std::string_view name) const {
  return std::find(graded.begin(), graded.end(), name) != graded.end() ||
         std::find(params.begin(), params.end(), name) != params.end();
}

ExprPtr parse(std::string_view text, const SymbolTable& symbols) {
  return Parser(text, symbols).run();
}

ChowClass eval(const Expr& e, const TowerPtr& tower) {
  if (!tower) throw TowerMismatchError("eval needs a tower");
  return evaluate(e, ClassOps{tower});
}

ChowClass eval(std::string_view text, const TowerPtr& tower) {
  if (!tower) throw TowerMismatchError("eval needs a tower");
  return eval(*parse(text, SymbolTable::of(*tower)), tower);
}

ZetaPolynomial eval_zeta(const Expr& e, const TowerPtr& bundle) {
  if (!bundle || !bundle->is_bundle()) throw UserError("eval_zeta needs a projective bundle");
  return evaluate(e, ZetaOps{bundle});
}

ZetaPolynomial eval_zeta(std::string_view text, const TowerPtr& bundle) {
  if (!bundle || !bundle->is_bundle()) throw UserError("eval_zeta needs a projective bundle");
  return eval_zeta(*parse(text, SymbolTable::of(*bundle)), bundle);
}

ParamPoly eval_param(std::string_view text, const TowerPtr& tower) {
  if (!tower) throw TowerMismatchError("eval_param needs a tower");
  SymbolTable table;
  table.params = tower->params();
  const ChowClass value = eval(*parse(text, table), tower);
  return value.constant_term();
}

std::string format(const ParamPoly& p, const Tower& tower) { return p.format(tower.params()); }

std::vector<const ClassTerms::value_type*> display_terms(const ChowClass& x) {
  std::vector<const ClassTerms::value_type*> order;
  if (x.is_zero()) return order;
  const Tower& t = *x.tower();
  const std::vector<std::size_t> priority = display_priority(t);
  for (const auto& term : x.terms()) order.push_back(&term);
  std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
    const int da = t.monomial_degree(a->first);
    const int db = t.monomial_degree(b->first);
    if (da != db) return da < db;
    for (std::size_t i : priority)
      if (a->first[i] != b->first[i]) return a->first[i] < b->first[i];
    return false;
  });
  return order;
}

std::string format(const ChowClass& x) {
  if (x.is_zero()) return "0";
  const Tower& t = *x.tower();
  const auto order = display_terms(x);

  std::ostringstream os;
  bool first = true;
  for (const auto* term : order) {
    const auto& [m, c] = *term;
    std::string monomial;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += t.symbols()[i].name;
      if (m[i] != 1) monomial += '^' + std::to_string(m[i]);
    }

    bool negative = false;
    std::string coeff;
    if (c.terms().size() == 1) {
      negative = c.terms().begin()->second.sign() < 0;
      coeff = (negative ? -c : c).format(t.params());
      if (coeff == "1" && !monomial.empty()) coeff.clear();
    } else {
      coeff = c.format(t.params());
      if (!monomial.empty() || x.terms().size() > 1) coeff = '(' + coeff + ')';
    }

    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    os << coeff;
    if (!coeff.empty() && !monomial.empty()) os << '*';
    os << monomial;
  }
  return os.str();
}

}  // namespace chow
