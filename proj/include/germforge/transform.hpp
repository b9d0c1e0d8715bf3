#pragma once

#include "germforge/intrinsic.hpp"
#include "germforge/jet.hpp"

#include <optional>
#include <string>
#include <vector>

namespace germforge {

/// f = S(x, lambda) g(X(x, lambda), Lambda(lambda)) modulo M^degree.
struct TransformationTriple {
  Jet X;
  Jet Lambda;
  Jet S;
  int degree = 0;

  std::string to_text() const;
};

/// x -> a x, lambda -> b lambda, g -> c g with a, b, c > 0.
struct Scaling {
  Rational a = 1, b = 1, c = 1;
};

/// One condition c a^i b^j = ratio per monomial x^i lambda^j; ratios must be
/// positive. Returns a rational solution, preferring a = 1 and then b = 1.
std::optional<Scaling> solve_scaling(const std::vector<std::pair<Monomial, Rational>>& conditions);

/// g(a x, b lambda) c.
Jet apply_scaling(const Jet& g, const Scaling& s);

/// f - S g(X, Lambda), truncated below degree k.
Jet transformation_residual(const Jet& g, const Jet& f, const TransformationTriple& t, int k);

/// Whether X(0)=0, Lambda(0)=0, X_x(0) > 0, Lambda'(0) > 0 and S(0) > 0.
bool is_admissible(const TransformationTriple& t);

/// Jets X, Lambda, S with f - S g(X, Lambda) in M^k. Throws MathError
/// "not equivalent up to degree k" when no admissible triple is found.
TransformationTriple transformation(const Jet& g, const Jet& f, int k);

/// Non-throwing form; with `modulo` the residual only has to lie in that
/// ideal plus M^k.
std::optional<TransformationTriple> try_transformation(const Jet& g, const Jet& f, int k,
                                                       const IntrinsicIdeal* modulo = nullptr);

}  // namespace germforge
