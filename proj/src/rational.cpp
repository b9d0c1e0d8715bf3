#include "germforge/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace germforge {

Rational parse_rational(std::string_view text) {
  Rational q;
  if (q.set_str(std::string(text), 10) != 0) {
    throw std::invalid_argument("not a rational number: " + std::string(text));
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

Rational factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational rationalize(double value, long max_den) {
  if (!std::isfinite(value)) throw std::invalid_argument("rationalize: non-finite value");
  const bool neg = value < 0;
  double x = std::fabs(value);
  // convergents h/k
  Integer h_prev = 1, h = static_cast<long>(std::floor(x));
  Integer k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  while (frac > 1e-15) {
    const double inv = 1.0 / frac;
    const long a = static_cast<long>(std::floor(inv));
    Integer h_next = a * h + h_prev;
    Integer k_next = a * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    k_prev = k;
    h = h_next;
    k = k_next;
    frac = inv - std::floor(inv);
  }
  Rational r(h, k);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

std::optional<Rational> rational_root(const Rational& q, unsigned n) {
  if (sgn(q) <= 0 || n == 0) return std::nullopt;
  if (n == 1) return q;
  Integer num, den;
  if (mpz_root(num.get_mpz_t(), q.get_num().get_mpz_t(), n) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), q.get_den().get_mpz_t(), n) == 0) return std::nullopt;
  return Rational(num, den);
}

Rational power(const Rational& q, int e) {
  Rational r = 1;
  const Rational base = e < 0 ? Rational(1 / q) : q;
  for (int i = 0; i < (e < 0 ? -e : e); ++i) r *= base;
  return r;
}

}  // namespace germforge
