#pragma once

#include "germforge/jet.hpp"
#include "germforge/rational.hpp"

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace germforge {

/// Immutable expression tree for a smooth germ: rationals, variables,
/// + - * /, integer powers, sin, cos and exp.
class GermExpr {
 public:
  enum class Kind { Constant, Variable, Neg, Add, Sub, Mul, Div, Pow, Sin, Cos, Exp };

  static GermExpr constant(const Rational& value);
  static GermExpr variable(const std::string& name);
  static GermExpr negate(const GermExpr& a);
  static GermExpr binary(Kind kind, const GermExpr& a, const GermExpr& b);
  static GermExpr power(const GermExpr& base, unsigned exponent);
  static GermExpr function(Kind kind, const GermExpr& arg);

  Kind kind() const { return node_->kind; }
  const Rational& value() const { return node_->value; }
  const std::string& name() const { return node_->name; }
  unsigned exponent() const { return node_->exponent; }
  const GermExpr& lhs() const { return node_->children.at(0); }
  const GermExpr& rhs() const { return node_->children.at(1); }

  /// True when the tree uses only + - * and powers (no division or functions).
  bool is_polynomial() const;

  std::string to_string() const;
  friend bool operator==(const GermExpr& a, const GermExpr& b);

 private:
  struct Node {
    Kind kind;
    Rational value;
    std::string name;
    unsigned exponent = 0;
    std::vector<GermExpr> children;
  };
  explicit GermExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses germ text. Identifiers must name a variable in `vars`; the only
/// function names are sin, cos and exp. Throws ParseError.
GermExpr parse_germ(std::string_view text, const VarList& vars);

/// Degree-<=k Taylor polynomial at the origin, exact over Q. Divisors must be
/// units and transcendental arguments must vanish at the origin (MathError).
Jet taylor_expand(const GermExpr& e, const VarList& vars, int k);

/// e with the named variables replaced by 0.
GermExpr set_to_zero(const GermExpr& e, const std::vector<std::string>& names);

/// Expands a polynomial expression without truncation.
Jet expand_polynomial(const GermExpr& e, const VarList& vars);

}  // namespace germforge
