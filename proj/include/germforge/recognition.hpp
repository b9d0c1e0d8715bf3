#pragma once

#include "germforge/expr.hpp"
#include "germforge/jet.hpp"
#include "germforge/linalg.hpp"

#include <optional>
#include <string>
#include <vector>

namespace germforge {

/// Zero and nonzero conditions on the derivatives at 0 of a germ f, indexed
/// by monomials: x^a lambda^b stands for the derivative d^{a+b}f/dx^a dlambda^b.
struct RecognitionConditions {
  std::vector<Monomial> zero;
  std::vector<Monomial> nonzero;
  std::vector<std::string> notes;

  /// "nonzero condition=[f_{lambda}!=0, f_{x,x,x}!=0]\nzero condition=[f=0, ...]\n".
  std::string to_string() const;
  /// "nonzero condition=[∂f/∂λ≠0, ∂³f/∂x³≠0]\nzero condition=[f=0, ∂f/∂x=0, ...]\n".
  std::string to_unicode() const;
};

/// "f_{x,x,lambda}" or "f" for the empty multi-index.
std::string derivative_symbol(const std::string& fn, const Monomial& m, bool unicode);

/// Zero conditions on S(g)-complement monomials outside P(g); nonzero
/// conditions on the intrinsic generators of S(g). Both sorted by degree, x
/// before lambda.
RecognitionConditions recognition_normal_form(const Jet& g, int k);
RecognitionConditions recognition_normal_form(const GermExpr& g, const VarList& vars, std::optional<int> degree = std::nullopt);

/// Whether the k-jet of f satisfies the conditions.
bool satisfies(const Jet& f, const RecognitionConditions& c);

/// Entry c * h_{x^a lambda^b alpha_i}(0); h is g (alpha = 0) or G; c = 0 is a
/// zero entry.
struct MatrixEntry {
  Rational coeff;
  bool unfolding = false;  // G rather than g
  Monomial derivative;     // x, lambda exponents
  std::size_t alpha = 0;   // 1-based parameter index, 0 for g entries

  bool is_zero() const { return sgn(coeff) == 0; }
};

/// Square matrix whose nonzero determinant for a concrete G (with G(x, lambda, 0)
/// of the same type as g) characterizes universal unfoldings.
struct RecognitionMatrix {
  std::vector<Monomial> columns;    // basis of E/Itr(T(g))
  std::vector<std::string> rows;    // "g_x", "g_lambda", ..., "G_alpha1", ...
  std::vector<std::string> rows_unicode;
  std::vector<std::vector<MatrixEntry>> entries;

  std::size_t size() const { return columns.size(); }
  /// Entries evaluated for G in (x, lambda, alpha1..alphap).
  Matrix evaluate(const Jet& G) const;
  Rational determinant(const Jet& G) const { return evaluate(G).determinant(); }

  std::string to_string() const;
  std::string to_unicode() const;
};

RecognitionMatrix recognition_unfolding(const Jet& g, int k, std::size_t p);
RecognitionMatrix recognition_unfolding(const GermExpr& g, const VarList& vars, std::size_t p,
                                        std::optional<int> degree = std::nullopt);

}  // namespace germforge
