#pragma once

#include "germforge/jet.hpp"

#include <string>
#include <vector>

namespace germforge {

/// Greatest common divisor of two polynomials, normalized by `canonical`.
/// gcd(0, 0) = 0.
Jet poly_gcd(const Jet& a, const Jet& b);

/// Integer coefficients with gcd 1 and a positive leading coefficient under
/// the lexicographic order of the variable list.
Jet canonical(const Jet& p);

/// p divided by gcd(p, all partial derivatives), then canonical.
Jet squarefree_part(const Jet& p);

/// Generators of <F> intersected with Q[remaining variables], each squarefree
/// and canonical, expressed in the remaining variables (listed in their
/// original order). An empty result means no relation survives.
std::vector<Jet> eliminate(const std::vector<Jet>& F, const std::vector<std::string>& drop);

/// A polynomial symmetric in the variables a and b rewritten in the
/// elementary symmetric functions: in the result, variable a stands for
/// a + b and variable b for a * b. Throws std::invalid_argument when P is not
/// symmetric.
Jet to_elementary(const Jet& P, std::size_t a, std::size_t b);

/// gcd of all polynomials in the list (0 for an empty list).
Jet poly_gcd(const std::vector<Jet>& ps);

}  // namespace germforge
