#pragma once

#include "germforge/intrinsic.hpp"
#include "germforge/jet.hpp"

#include <string>
#include <vector>

namespace germforge {

/// Intrinsic ideal plus extra vectors spanning the rest modulo M^{k+1}.
struct SpanSpace {
  IntrinsicIdeal intrinsic;
  std::vector<Jet> extra;
  int truncation = 0;

  std::string to_string() const;
  std::string to_unicode() const;
};

/// RT(g) = E{g} + M{g_x} as the ideal <g, x g_x, lambda g_x>.
struct RestrictedTangent {
  std::vector<Jet> generators;  // g, x g_x, lambda g_x
  IntrinsicIdeal high_order;    // P(g)
  std::vector<Jet> display;     // generators modulo high_order, primitive, nonzero

  std::string to_string() const;
  std::string to_unicode() const;
};

/// Non-fatal notes about the input germ (e.g. a regular point).
std::vector<std::string> singularity_warnings(const Jet& g);

RestrictedTangent restricted_tangent(const Jet& g, int k);
/// T(g) = E{g, g_x} + E_lambda{g_lambda}.
SpanSpace tangent_space(const Jet& g, int k);
/// The high order term ideal P(g): the intrinsic part of
/// M{g} + (M^2 + <lambda>){g_x} + E_lambda{lambda^2 g_lambda}.
IntrinsicIdeal high_order_terms(const Jet& g, int k);
/// Monomial basis of a complement of T(g) in the jets of degree <= k, chosen
/// from low degree upwards; descending local order.
std::vector<Monomial> tangent_perp(const Jet& g, int k);
/// Smallest intrinsic ideal containing the k-jet of g.
IntrinsicIdeal smallest_intrinsic_of(const Jet& g, int k);
/// Monomials of degree <= k outside S(g); descending local order.
std::vector<Monomial> s_perp(const Jet& g, int k);
std::vector<Monomial> intrinsic_gens(const Jet& g, int k);

struct AlgObjects {
  RestrictedTangent rt;
  SpanSpace t;
  IntrinsicIdeal p;
  std::vector<Monomial> tangent_perp;
  IntrinsicIdeal s;
  std::vector<Monomial> s_perp;
  std::vector<Monomial> intrinsic_gens;
  std::vector<std::string> warnings;
};

AlgObjects alg_objects(const Jet& g, int k);

/// Jets of m g, m g_x (deg m <= k) and lambda^j g_lambda, truncated at k.
std::vector<Jet> tangent_spanning_set(const Jet& g, int k);

}  // namespace germforge
