#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace germforge {

/// Exact rational coefficient. mpq_class keeps gcd(num, den) = 1 and den > 0
/// after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

Rational factorial(unsigned n);

/// The positive n-th root of q > 0 when it is rational.
std::optional<Rational> rational_root(const Rational& q, unsigned n);

/// q^e for a possibly negative integer exponent (q nonzero when e < 0).
Rational power(const Rational& q, int e);

/// Best rational approximation with denominator at most max_den
/// (continued-fraction convergents).
Rational rationalize(double value, long max_den);

}  // namespace germforge
