#pragma once

#include "germforge/monomial.hpp"
#include "germforge/order.hpp"
#include "germforge/rational.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace germforge {

/// Shared, immutable ordered list of variable names. Equality is by content.
class VarList {
 public:
  VarList() : names_(std::make_shared<const std::vector<std::string>>()) {}
  VarList(std::initializer_list<std::string> names);
  explicit VarList(std::vector<std::string> names);

  std::size_t size() const { return names_->size(); }
  const std::string& operator[](std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;
  std::size_t require(const std::string& name) const;

  /// This list followed by `more` (names must be fresh).
  VarList extended(const std::vector<std::string>& more) const;

  friend bool operator==(const VarList& a, const VarList& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

/// Truncated multivariate polynomial over Q. Terms of total degree above
/// `truncation()` are never stored; `kExact` marks an untruncated polynomial.
class Jet {
 public:
  static constexpr int kExact = 1 << 28;
  using Terms = std::map<Monomial, Rational>;

  Jet() = default;
  explicit Jet(VarList vars, int truncation = kExact);

  static Jet constant(const VarList& vars, const Rational& c, int truncation = kExact);
  static Jet variable(const VarList& vars, std::size_t index, int truncation = kExact);
  static Jet term(const VarList& vars, const Monomial& m, const Rational& c = 1, int truncation = kExact);

  const VarList& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  int truncation() const { return trunc_; }
  bool exact() const { return trunc_ >= kExact; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  Rational coeff(const Monomial& m) const;
  /// Adds c*m, dropping it when above the truncation degree.
  void add_term(const Monomial& m, const Rational& c);
  void set_truncation(int k);

  Jet truncated(int k) const;
  /// Same terms, marked exact (the caller asserts these are polynomial data).
  Jet as_exact() const;
  /// Terms of total degree exactly d.
  Jet homogeneous_part(unsigned d) const;

  /// Lowest total degree of a stored term; requires nonzero.
  unsigned order() const;
  unsigned degree() const;
  unsigned degree_in(std::size_t var) const;
  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

  std::pair<Monomial, Rational> leading_term(const MonomialOrder& ord) const;
  Monomial leading_monomial(const MonomialOrder& ord) const { return leading_term(ord).first; }
  /// max degree minus degree of the leading monomial.
  unsigned ecart(const MonomialOrder& ord) const;

  Jet derivative(std::size_t var) const;
  Jet pow(unsigned e) const;
  Jet scaled(const Rational& c) const;
  Jet times_monomial(const Monomial& m, const Rational& c = 1) const;
  /// Divides by the monomial; every term must be divisible.
  Jet divided_by_monomial(const Monomial& m) const;

  /// Substitutes images[i] for variable i. Images share a variable list.
  Jet compose(const std::vector<Jet>& images) const;
  /// Re-expresses the jet over `target`, mapping variables by name.
  Jet embedded(const VarList& target) const;
  Jet substitute(std::size_t var, const Rational& value) const;

  Rational eval(const std::vector<Rational>& point) const;
  double eval(const std::vector<double>& point) const;
  /// Sum of |c| * |point|^m, the natural scale for a residual tolerance.
  double eval_scale(const std::vector<double>& point) const;

  /// Parseable text, highest degree first (e.g. "x^3 - lambda").
  std::string to_string() const;
  /// Display text with Greek letters and superscripts (e.g. "x³ − λ").
  std::string to_unicode() const;

  /// this += c * m * g, truncating to the smaller degree bound.
  void add_multiple(const Jet& g, const Monomial& m, const Rational& c);

  Jet& operator+=(const Jet& o);
  Jet& operator-=(const Jet& o);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator*(const Rational& c, const Jet& a) { return a.scaled(c); }
  Jet operator-() const { return scaled(-1); }

  /// Equal terms and variable lists; truncation degrees are not compared.
  friend bool operator==(const Jet& a, const Jet& b);

 private:
  void check_compatible(const Jet& o) const;

  VarList vars_;
  Terms terms_;
  int trunc_ = kExact;
};

std::string monomial_to_string(const Monomial& m, const VarList& vars);
std::string monomial_to_unicode(const Monomial& m, const VarList& vars);
/// "lambda" -> "λ", "alpha2" -> "α₂"; other names unchanged.
std::string unicode_name(const std::string& name);
std::string superscript(unsigned n);

/// Integer coefficients with gcd 1 and a positive leading coefficient under
/// the graded order; zero stays zero.
Jet primitive_part(const Jet& f);

}  // namespace germforge
