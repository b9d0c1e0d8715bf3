#pragma once

#include "germforge/rational.hpp"

#include <vector>

namespace germforge {

/// Dense univariate polynomial over Q, coefficient i of x^i, no trailing zeros.
using UPoly = std::vector<Rational>;

void trim(UPoly& p);
Rational eval(const UPoly& p, const Rational& x);
double eval(const UPoly& p, double x);
UPoly derivative(const UPoly& p);
/// Remainder of a divided by b (b nonzero).
UPoly remainder(const UPoly& a, const UPoly& b);

class SturmSequence {
 public:
  explicit SturmSequence(const UPoly& p);

  bool is_zero() const { return seq_.empty(); }
  /// Distinct real roots in (a, b].
  int count(const Rational& a, const Rational& b) const;
  /// Distinct real roots on the whole line.
  int count_all() const;
  /// Distinct real roots in [a, b], ascending, refined to about 1e-14.
  std::vector<double> roots(const Rational& a, const Rational& b) const;

 private:
  int variations(const Rational& x) const;
  int variations_at_infinity(int side) const;
  std::vector<UPoly> seq_;
};

/// Cauchy bound: every real root has absolute value below it.
Rational root_bound(const UPoly& p);

}  // namespace germforge
