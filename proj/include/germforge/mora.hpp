#pragma once

#include "germforge/jet.hpp"
#include "germforge/linalg.hpp"
#include "germforge/order.hpp"

#include <optional>
#include <string>
#include <vector>

namespace germforge {

/// unit * dividend = sum quotients[i] * divisors[i] + remainder (mod M^{k+1}).
struct DivisionResult {
  std::vector<Jet> quotients;
  Jet remainder;
  Jet unit;
};

/// Division with ecart-based Mora selection (intermediate results join the
/// divisor list), followed by reduction of the remaining tail so that no
/// remainder term is divisible by a divisor leading monomial. Under a global
/// order this is classical division with unit 1. k = Jet::kExact for no
/// truncation.
DivisionResult mora_divide(const Jet& g, const std::vector<Jet>& divisors, const MonomialOrder& ord, int k);

enum class RingMode { Fractional, FormalSmooth, Polynomial };

/// Whether recomputation one degree higher showed M^{k+1} inside the ideal.
enum class Certification { Certified, Insufficient, Unchecked };

class StandardBasis {
 public:
  StandardBasis(VarList vars, std::vector<Jet> generators, MonomialOrder order, int truncation, RingMode mode,
                Certification cert);

  const std::vector<Jet>& generators() const { return gens_; }
  const MonomialOrder& order() const { return order_; }
  int truncation() const { return trunc_; }
  RingMode ring_mode() const { return mode_; }
  Certification certification() const { return cert_; }
  std::vector<std::string> warnings() const;
  const VarList& vars() const { return vars_; }

  std::vector<Monomial> leading_monomials() const;
  bool in_leading_ideal(const Monomial& m) const;

  /// Full reduction with unit 1: the unique representative spanned by
  /// standard monomials. Linear in f.
  Jet normal_form(const Jet& f) const;
  bool contains(const Jet& f) const { return normal_form(f).is_zero(); }

  /// Number of standard monomials, or nullopt for infinite codimension.
  std::optional<std::size_t> codimension() const;
  /// Standard monomials in descending order; throws InfiniteCodimension.
  std::vector<Monomial> normal_set() const;
  /// Matrix of multiplication by u on the quotient in the given basis
  /// (a permutation of the normal set; default the normal set itself).
  Matrix mult_matrix(const Jet& u, const std::vector<Monomial>& basis = {}) const;

 private:
  std::vector<Jet> gens_;
  MonomialOrder order_;
  int trunc_;
  RingMode mode_;
  Certification cert_;
  VarList vars_;
  std::vector<Monomial> lms_;
};

/// Reduced standard basis of <G> + M^{k+1} under `ord`. Inputs carrying at
/// least k+1 reliable degrees (exact polynomials or (k+1)-jets) allow
/// certification; otherwise the result is Unchecked. For a global order with
/// k = Jet::kExact this is a reduced Groebner basis.
StandardBasis standard_basis(const std::vector<Jet>& G, const MonomialOrder& ord, int k);

bool ideal_membership(const Jet& f, const StandardBasis& B);
std::vector<Monomial> normal_set(const std::vector<Jet>& I, int k);
std::optional<std::size_t> codimension(const std::vector<Jet>& I, int k);
Matrix mult_matrix(const std::vector<Jet>& A, const Jet& u, int k, const std::vector<Monomial>& basis = {});

namespace detail {
/// Buchberger/Mora completion followed by inter-reduction; leading
/// coefficients normalised to 1. Inputs must share the truncation k.
std::vector<Jet> complete_basis(std::vector<Jet> G, const MonomialOrder& ord);
/// Plain full reduction of f by `basis` (unit 1).
Jet reduce_full(const Jet& f, const std::vector<Jet>& basis, const MonomialOrder& ord);
}  // namespace detail

}  // namespace germforge
