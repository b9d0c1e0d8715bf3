#pragma once

#include "germforge/expr.hpp"
#include "germforge/jet.hpp"

#include <optional>
#include <string>
#include <vector>

namespace germforge {

enum class Ring { Smooth, Formal, Fractional, Polynomial };

/// "Ring of smooth germs" etc.
std::string ring_title(Ring r);
/// Accepts smooth, formal, fractional, polynomial; throws std::invalid_argument.
Ring parse_ring(const std::string& name);
std::string ring_keyword(Ring r);

/// Default 20, overridden by GERMFORGE_MAX_DEGREE.
int default_upper_bound();

struct VerifyReport {
  std::vector<Ring> permissible_rings;
  std::optional<int> truncation_degree;
  Ring recommended = Ring::Fractional;
  std::vector<std::string> warnings;

  bool permits(Ring r) const;
  std::string to_text() const;
};

/// Least k with M^{k+1} inside P(g) computed from the (k+1)-jet, the result
/// unchanged one degree higher.
VerifyReport verify_germ(const GermExpr& g, const VarList& vars, int upper_bound = default_upper_bound());

/// Least k at which the standard basis of <G> is certified and of finite
/// codimension.
VerifyReport verify_ideal(const std::vector<GermExpr>& G, const VarList& vars,
                          int upper_bound = default_upper_bound());

/// Least k >= 2 at which the transition-set polynomials of the k-jet and the
/// (k+1)-jet of the parametric germ H agree. vars = (x, lambda, params...).
VerifyReport verify_persistent(const GermExpr& H, const VarList& vars, int upper_bound = default_upper_bound());

/// Polynomial generators whose local ideal mod M^{k+1} agrees with the
/// polynomial ideal on the monomials bordering the local normal set.
bool polynomial_ring_agrees(const std::vector<Jet>& gens, int k);

/// Whether g is polynomial and the polynomial ring computes RT(g) correctly
/// modulo M^{k+2}.
bool polynomial_ring_suitable(const GermExpr& g, const VarList& vars, int k);

}  // namespace germforge
