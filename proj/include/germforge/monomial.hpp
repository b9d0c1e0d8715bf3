#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace germforge {

/// Upper bound on ring variables: two germ variables, up to five unfolding
/// parameters and a few helper variables used by elimination.
inline constexpr std::size_t kMaxVars = 10;

/// Exponent vector x_0^{e_0} ... x_{n-1}^{e_{n-1}}. Slots beyond the ambient
/// variable count stay zero.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<unsigned> exps) {
    if (exps.size() > kMaxVars) throw std::invalid_argument("too many exponents");
    std::size_t i = 0;
    for (unsigned e : exps) exp_[i++] = static_cast<std::uint16_t>(e);
  }

  static Monomial unit(std::size_t var, unsigned e = 1) {
    Monomial m;
    m.exp_.at(var) = static_cast<std::uint16_t>(e);
    return m;
  }

  unsigned operator[](std::size_t i) const { return exp_[i]; }
  void set(std::size_t i, unsigned e) { exp_.at(i) = static_cast<std::uint16_t>(e); }

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exp_) d += e;
    return d;
  }

  bool is_one() const { return degree() == 0; }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (exp_[i] > other.exp_[i]) return false;
    return true;
  }

  /// Quotient other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const {
    Monomial q;
    for (std::size_t i = 0; i < kMaxVars; ++i) q.exp_[i] = other.exp_[i] - exp_[i];
    return q;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = a.exp_[i] + b.exp_[i];
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
    return r;
  }

  bool coprime(const Monomial& other) const { return gcd(*this, other).is_one(); }

  /// Storage order; only used for container keys, not a monomial order.
  auto operator<=>(const Monomial&) const = default;

 private:
  std::array<std::uint16_t, kMaxVars> exp_{};
};

/// All monomials in `nvars` variables of total degree <= max_degree, by degree
/// then by exponent of variable 0 descending.
std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree);
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree);

}  // namespace germforge
