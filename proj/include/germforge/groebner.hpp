#pragma once

#include "germforge/jet.hpp"
#include "germforge/order.hpp"

#include <vector>

namespace germforge {

/// Reduced Groebner basis of <G> in the polynomial ring under a global order.
std::vector<Jet> buchberger(const std::vector<Jet>& G, const MonomialOrder& ord);

/// Exact quotient f/g of polynomials; throws MathError when g does not divide f.
Jet exact_quotient(const Jet& f, const Jet& g);

/// The monomials of degree k+1 as exact polynomials.
std::vector<Jet> power_of_maximal_ideal(const VarList& vars, unsigned degree);

/// Generators of I and J intersected. With finite k the ideals are taken
/// modulo M^{k+1} and the result is the reduced local standard basis; with
/// k = Jet::kExact the intersection is taken in the polynomial ring and a
/// reduced Groebner basis (graded order) is returned.
std::vector<Jet> ideal_intersection(const std::vector<Jet>& I, const std::vector<Jet>& J, int k);

/// Generators h_i/g of I : <g>, where {h_i} generate I intersected with <g>.
/// Same conventions for k as ideal_intersection.
std::vector<Jet> colon_ideal(const std::vector<Jet>& I, const Jet& g, int k);

}  // namespace germforge
