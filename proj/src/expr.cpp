#include "germforge/expr.hpp"

#include "germforge/errors.hpp"

#include <algorithm>
#include <cctype>

namespace germforge {

// ---- construction -------------------------------------------------------------

GermExpr GermExpr::constant(const Rational& value) {
  return GermExpr(std::make_shared<const Node>(Node{Kind::Constant, value, {}, 0, {}}));
}

GermExpr GermExpr::variable(const std::string& name) {
  return GermExpr(std::make_shared<const Node>(Node{Kind::Variable, 0, name, 0, {}}));
}

GermExpr GermExpr::negate(const GermExpr& a) {
  return GermExpr(std::make_shared<const Node>(Node{Kind::Neg, 0, {}, 0, {a}}));
}

GermExpr GermExpr::binary(Kind kind, const GermExpr& a, const GermExpr& b) {
  return GermExpr(std::make_shared<const Node>(Node{kind, 0, {}, 0, {a, b}}));
}

GermExpr GermExpr::power(const GermExpr& base, unsigned exponent) {
  return GermExpr(std::make_shared<const Node>(Node{Kind::Pow, 0, {}, exponent, {base}}));
}

GermExpr GermExpr::function(Kind kind, const GermExpr& arg) {
  return GermExpr(std::make_shared<const Node>(Node{kind, 0, {}, 0, {arg}}));
}

bool GermExpr::is_polynomial() const {
  switch (kind()) {
    case Kind::Constant:
    case Kind::Variable:
      return true;
    case Kind::Neg:
    case Kind::Pow:
      return lhs().is_polynomial();
    case Kind::Add:
    case Kind::Sub:
    case Kind::Mul:
      return lhs().is_polynomial() && rhs().is_polynomial();
    default:
      return false;
  }
}

GermExpr set_to_zero(const GermExpr& e, const std::vector<std::string>& names) {
  using K = GermExpr::Kind;
  switch (e.kind()) {
    case K::Constant:
      return e;
    case K::Variable:
      return std::find(names.begin(), names.end(), e.name()) != names.end() ? GermExpr::constant(0) : e;
    case K::Neg:
      return GermExpr::negate(set_to_zero(e.lhs(), names));
    case K::Pow:
      return GermExpr::power(set_to_zero(e.lhs(), names), e.exponent());
    case K::Sin:
    case K::Cos:
    case K::Exp:
      return GermExpr::function(e.kind(), set_to_zero(e.lhs(), names));
    default:
      return GermExpr::binary(e.kind(), set_to_zero(e.lhs(), names), set_to_zero(e.rhs(), names));
  }
}

bool operator==(const GermExpr& a, const GermExpr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.value == y.value && x.name == y.name && x.exponent == y.exponent &&
         x.children == y.children;
}

// ---- printing -----------------------------------------------------------------

namespace {

int precedence(GermExpr::Kind k) {
  using K = GermExpr::Kind;
  switch (k) {
    case K::Add:
    case K::Sub:
    case K::Neg:
      return 1;
    case K::Mul:
    case K::Div:
      return 2;
    case K::Pow:
      return 3;
    default:
      return 4;
  }
}

std::string print(const GermExpr& e);

std::string wrap_if(const GermExpr& e, bool cond) { return cond ? "(" + print(e) + ")" : print(e); }

std::string print(const GermExpr& e) {
  using K = GermExpr::Kind;
  switch (e.kind()) {
    case K::Constant: {
      const auto& v = e.value();
      return sgn(v) < 0 ? "(" + v.get_str() + ")" : v.get_str();
    }
    case K::Variable:
      return e.name();
    case K::Neg:
      return "-" + wrap_if(e.lhs(), precedence(e.lhs().kind()) <= 2);
    case K::Add:
      return print(e.lhs()) + " + " + wrap_if(e.rhs(), e.rhs().kind() == K::Neg);
    case K::Sub:
      return print(e.lhs()) + " - " + wrap_if(e.rhs(), precedence(e.rhs().kind()) <= 1);
    case K::Mul:
      return wrap_if(e.lhs(), precedence(e.lhs().kind()) < 2) + "*" +
             wrap_if(e.rhs(), precedence(e.rhs().kind()) <= 2 || e.rhs().kind() == K::Constant);
    case K::Div:
      return wrap_if(e.lhs(), precedence(e.lhs().kind()) < 2) + "/" +
             wrap_if(e.rhs(), precedence(e.rhs().kind()) <= 2 || e.rhs().kind() == K::Constant);
    case K::Pow: {
      const bool atom = e.lhs().kind() == K::Variable ||
                        (e.lhs().kind() == K::Constant && is_integer(e.lhs().value()) && sgn(e.lhs().value()) >= 0) ||
                        (precedence(e.lhs().kind()) == 4 && e.lhs().kind() != K::Constant);
      return wrap_if(e.lhs(), !atom) + "^" + std::to_string(e.exponent());
    }
    case K::Sin:
      return "sin(" + print(e.lhs()) + ")";
    case K::Cos:
      return "cos(" + print(e.lhs()) + ")";
    case K::Exp:
      return "exp(" + print(e.lhs()) + ")";
  }
  return {};
}

// ---- parsing --------------------------------------------------------------------

class Parser {
 public:
  Parser(std::string_view text, const VarList& vars) : text_(text), vars_(vars) {}

  GermExpr parse() {
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    GermExpr e = expr();
    skip_ws();
    if (!at_end()) throw ParseError(std::string("unexpected character '") + text_[pos_] + "'", pos_);
    return e;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  GermExpr expr() {
    skip_ws();
    GermExpr left = [&] {
      if (accept('-')) return GermExpr::negate(term());
      accept('+');
      return term();
    }();
    for (;;) {
      if (accept('+'))
        left = GermExpr::binary(GermExpr::Kind::Add, left, term());
      else if (accept('-'))
        left = GermExpr::binary(GermExpr::Kind::Sub, left, term());
      else
        return left;
    }
  }

  GermExpr term() {
    GermExpr left = factor();
    for (;;) {
      if (accept('*'))
        left = GermExpr::binary(GermExpr::Kind::Mul, left, factor());
      else if (accept('/'))
        left = GermExpr::binary(GermExpr::Kind::Div, left, factor());
      else
        return left;
    }
  }

  GermExpr factor() {
    GermExpr b = base();
    if (accept('^')) {
      skip_ws();
      const std::size_t start = pos_;
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError("expected unsigned integer exponent", pos_);
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      const auto digits = text_.substr(start, pos_ - start);
      if (digits.size() > 4) throw ParseError("exponent too large", start);
      return GermExpr::power(b, static_cast<unsigned>(std::stoul(std::string(digits))));
    }
    return b;
  }

  GermExpr base() {
    skip_ws();
    const std::size_t start = pos_;
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return GermExpr::constant(rational());
    if (c == '(') {
      ++pos_;
      GermExpr e = expr();
      if (!accept(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      const std::string ident(text_.substr(start, pos_ - start));
      skip_ws();
      if (peek() == '(') {
        GermExpr::Kind k;
        if (ident == "sin")
          k = GermExpr::Kind::Sin;
        else if (ident == "cos")
          k = GermExpr::Kind::Cos;
        else if (ident == "exp")
          k = GermExpr::Kind::Exp;
        else
          throw ParseError("unknown function name " + ident, start);
        ++pos_;
        GermExpr arg = expr();
        if (!accept(')')) throw ParseError("expected ')'", pos_);
        return GermExpr::function(k, arg);
      }
      if (!vars_.index_of(ident)) throw ParseError("unknown variable " + ident, start);
      return GermExpr::variable(ident);
    }
    if (at_end()) throw ParseError("unexpected end of input", pos_);
    throw ParseError(std::string("unexpected character '") + c + "'", pos_);
  }

  Rational rational() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    std::string text(text_.substr(start, pos_ - start));
    // "p/q" binds as a single literal only when a digit follows the slash
    if (peek() == '/' && pos_ + 1 < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
      const std::size_t den_start = ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      const auto den = text_.substr(den_start, pos_ - den_start);
      if (std::all_of(den.begin(), den.end(), [](char d) { return d == '0'; }))
        throw ParseError("zero denominator", den_start);
      text += "/" + std::string(den);
    }
    return parse_rational(text);
  }

  std::string_view text_;
  const VarList& vars_;
  std::size_t pos_ = 0;
};

// ---- expansion ------------------------------------------------------------------

/// sum_{n>=0} coeffs(n) * u^n, truncated at k; u must vanish at the origin.
template <typename Coeff>
Jet series(const Jet& u, int k, Coeff coeff) {
  Jet result(u.vars(), k);
  Jet power = Jet::constant(u.vars(), 1, k);
  for (int n = 0; n <= k; ++n) {
    const Rational c = coeff(static_cast<unsigned>(n));
    if (sgn(c) != 0) result += power.scaled(c);
    power = (power * u).truncated(k);
    if (power.is_zero()) break;
  }
  return result;
}

Jet expand(const GermExpr& e, const VarList& vars, int k) {
  using K = GermExpr::Kind;
  switch (e.kind()) {
    case K::Constant:
      return Jet::constant(vars, e.value(), k);
    case K::Variable: {
      auto idx = vars.index_of(e.name());
      if (!idx) throw std::invalid_argument("unknown variable " + e.name());
      return Jet::variable(vars, *idx, k);
    }
    case K::Neg:
      return -expand(e.lhs(), vars, k);
    case K::Add:
      return expand(e.lhs(), vars, k) + expand(e.rhs(), vars, k);
    case K::Sub:
      return expand(e.lhs(), vars, k) - expand(e.rhs(), vars, k);
    case K::Mul:
      return expand(e.lhs(), vars, k) * expand(e.rhs(), vars, k);
    case K::Pow:
      return expand(e.lhs(), vars, k).pow(e.exponent());
    case K::Div: {
      Jet num = expand(e.lhs(), vars, k);
      Jet den = expand(e.rhs(), vars, k);
      const Rational c0 = den.coeff(Monomial{});
      if (sgn(c0) == 0) throw MathError("non-unit denominator: " + e.rhs().to_string() + " vanishes at the origin");
      // 1/den = (1/c0) * sum (-u)^n with u = den/c0 - 1
      Jet u = den.scaled(1 / c0) - Jet::constant(vars, 1, k);
      Jet inv = series(u, k, [](unsigned n) { return Rational(n % 2 ? -1 : 1); });
      return num * inv.scaled(1 / c0);
    }
    case K::Sin:
    case K::Cos:
    case K::Exp: {
      Jet u = expand(e.lhs(), vars, k);
      if (sgn(u.coeff(Monomial{})) != 0)
        throw MathError("transcendental argument " + e.lhs().to_string() +
                        " does not vanish at the origin; only rational expansions are supported");
      if (e.kind() == K::Exp) return series(u, k, [](unsigned n) { return Rational(Rational(1) / factorial(n)); });
      if (e.kind() == K::Sin)
        return series(u, k, [](unsigned n) {
          if (n % 2 == 0) return Rational(0);
          return Rational(Rational((n / 2) % 2 ? -1 : 1) / factorial(n));
        });
      return series(u, k, [](unsigned n) {
        if (n % 2) return Rational(0);
        return Rational(Rational((n / 2) % 2 ? -1 : 1) / factorial(n));
      });
    }
  }
  throw std::logic_error("unhandled expression kind");
}

}  // namespace

std::string GermExpr::to_string() const { return print(*this); }

GermExpr parse_germ(std::string_view text, const VarList& vars) { return Parser(text, vars).parse(); }

Jet taylor_expand(const GermExpr& e, const VarList& vars, int k) {
  if (k < 0) throw std::invalid_argument("negative truncation degree");
  return expand(e, vars, k);
}

Jet expand_polynomial(const GermExpr& e, const VarList& vars) {
  if (!e.is_polynomial()) throw MathError("expression is not a polynomial: " + e.to_string());
  return expand(e, vars, Jet::kExact);
}

}  // namespace germforge
