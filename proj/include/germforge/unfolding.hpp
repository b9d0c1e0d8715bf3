#pragma once

#include "germforge/expr.hpp"
#include "germforge/jet.hpp"
#include "germforge/verify.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace germforge {

/// G = base + sum alpha_i m_i in the variables (x, lambda, alpha1..alphap).
struct UnfoldingGerm {
  Jet body;
  Jet base;
  std::vector<Monomial> directions;  // m_i, monomials in (x, lambda)
  std::string state_var = "x";
  std::string dist_param = "lambda";
  std::vector<std::string> params;  // alpha1, alpha2, ...

  std::size_t parameter_count() const { return params.size(); }
  /// "x^3 - x*lambda + alpha1 + alpha2*lambda".
  std::string to_string() const;
  /// "x³ − xλ + α₁ + α₂λ".
  std::string to_unicode() const;
};

/// Unfolding of a (x, lambda) germ along the given monomials.
UnfoldingGerm make_unfolding(const Jet& base, const std::vector<Monomial>& directions);

/// Monomial bases of E/T(g) modulo M^{k+1}: the tangent_perp basis first, then
/// other sets of monomials outside the intrinsic part of T(g) completing T(g)
/// to all jets, at most `cap` of them. Each basis is sorted by degree, x
/// before lambda.
std::vector<std::vector<Monomial>> complement_bases(const Jet& g, int k, std::size_t cap);

struct UnfoldingOptions {
  std::optional<int> degree;
  Ring ring = Ring::Fractional;
  bool normalform = false;
  bool list = false;
  std::size_t max_bases = 16;
};

struct UnfoldingResult {
  std::vector<UnfoldingGerm> unfoldings;
  int degree = 0;
  std::vector<std::string> warnings;
};

std::vector<std::string> unfolding_ring_warnings(const GermExpr& g, const VarList& vars, int k, Ring ring);

UnfoldingResult universal_unfolding(const GermExpr& g, const VarList& vars, const UnfoldingOptions& opts = {});

/// G(x, lambda, 0) from a jet whose first two variables are (x, lambda).
Jet unfolding_base(const Jet& G);

/// Whether the alpha-derivatives of G at alpha = 0 span E/T(g) modulo M^{k+1}
/// with exactly codim T(g) parameters. G's variables are (x, lambda, alpha...),
/// known to degree k+1 at least.
bool check_universal(const Jet& G, int k);

/// Expression form; the degree defaults to the verify degree of G(x, lambda, 0).
bool check_universal(const GermExpr& G, const VarList& vars, std::optional<int> degree = std::nullopt);

}  // namespace germforge
