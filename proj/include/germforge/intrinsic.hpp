#pragma once

#include "germforge/jet.hpp"
#include "germforge/linalg.hpp"
#include "germforge/mora.hpp"

#include <optional>
#include <string>
#include <vector>

namespace germforge {

/// M^k <lambda^l>, in the variables (x, lambda).
struct Block {
  unsigned k = 0;
  unsigned l = 0;
  friend bool operator==(const Block&, const Block&) = default;
};

/// Sum of blocks in canonical form: l strictly increasing, k strictly
/// decreasing, no block inside the others. x^a lambda^b is a member iff some
/// block has b >= l and a + b >= k + l.
class IntrinsicIdeal {
 public:
  IntrinsicIdeal() = default;
  explicit IntrinsicIdeal(std::vector<Block> blocks);

  /// Smallest intrinsic ideal containing the given monomials.
  static IntrinsicIdeal generated_by(const std::vector<Monomial>& monomials);

  const std::vector<Block>& blocks() const { return blocks_; }
  bool is_zero() const { return blocks_.empty(); }

  bool contains(const Monomial& m) const;
  /// Every term of f is a member.
  bool contains(const Jet& f) const;
  /// f with the member terms removed.
  Jet strip(const Jet& f) const;

  /// M * I.
  IntrinsicIdeal times_maximal() const;
  /// Block generators x^k lambda^l, in block order.
  std::vector<Monomial> generators() const;
  /// Whether M^{d} is contained.
  bool contains_power(unsigned d) const;

  /// "M^3<lambda>+<lambda^2>"; "0" for the zero ideal.
  std::string to_string() const;
  /// "M³⟨λ⟩+⟨λ²⟩".
  std::string to_unicode() const;

  friend IntrinsicIdeal operator+(const IntrinsicIdeal& a, const IntrinsicIdeal& b);
  friend bool operator==(const IntrinsicIdeal&, const IntrinsicIdeal&) = default;

 private:
  std::vector<Block> blocks_;
};

/// The vector space <A>_E + span_Q(B) modulo M^{k+1}.
class JetSubspace {
 public:
  JetSubspace(const VarList& vars, const std::vector<Jet>& ideal_gens, const std::vector<Jet>& span_vectors, int k);

  int truncation() const { return k_; }
  const VarList& vars() const { return vars_; }
  bool has_ideal() const { return sb_.has_value(); }
  const StandardBasis& ideal() const { return *sb_; }

  /// Canonical representative of f modulo the space.
  Jet reduce(const Jet& f) const;
  bool contains(const Jet& f) const { return reduce(f).is_zero(); }
  bool contains(const Monomial& m) const;
  /// Dimension of the jet quotient, or nullopt when some pure power of a
  /// variable stays outside the ideal part.
  std::optional<std::size_t> codimension() const;
  /// Whether the ideal part was certified at degree k+1.
  Certification certification() const;

 private:
  VarList vars_;
  int k_;
  std::optional<StandardBasis> sb_;
  JetSpace extra_;
};

/// Largest intrinsic ideal inside the space (blocks of degree <= k).
IntrinsicIdeal intrinsic_part(const JetSubspace& space);
/// Convenience form; throws InfiniteCodimension unless allowed.
IntrinsicIdeal intrinsic_part(const std::vector<Jet>& A, const std::vector<Jet>& B, int k,
                              bool allow_infinite = false);

/// Sum of M^a<lambda^b> over the support of g.
IntrinsicIdeal smallest_intrinsic(const Jet& g);

}  // namespace germforge
