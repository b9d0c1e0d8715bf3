#pragma once

#include "germforge/monomial.hpp"

#include <cstddef>
#include <vector>

namespace germforge {

enum class OrderKind {
  LocalAntigraded,   // lower total degree is larger; ties lexicographic
  GlobalGraded,      // higher total degree is larger; ties lexicographic
  Lex,               // pure lexicographic
  BlockElimination,  // graded-lex on a leading block, then graded-lex on the rest
};

/// Total order on monomials. `precedence` lists variable indices from most to
/// least significant for the lexicographic parts.
class MonomialOrder {
 public:
  MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence, std::size_t block = 0);

  static MonomialOrder local(std::size_t nvars);
  static MonomialOrder graded(std::size_t nvars);
  static MonomialOrder lex(std::size_t nvars);
  /// Eliminates the variables listed in `eliminated` (they form the leading block).
  static MonomialOrder elimination(std::size_t nvars, const std::vector<std::size_t>& eliminated);

  OrderKind kind() const { return kind_; }
  bool is_local() const { return kind_ == OrderKind::LocalAntigraded; }
  std::size_t nvars() const { return precedence_.size(); }
  const std::vector<std::size_t>& precedence() const { return precedence_; }
  std::size_t block() const { return block_; }

  /// Negative if a < b, zero if equal, positive if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// Strict-weak "comes first" predicate for sorting in descending order.
  struct Descending {
    const MonomialOrder* order;
    bool operator()(const Monomial& a, const Monomial& b) const { return order->compare(a, b) > 0; }
  };
  Descending descending() const { return Descending{this}; }

 private:
  int lex_compare(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) const;
  unsigned partial_degree(const Monomial& m, std::size_t from, std::size_t to) const;

  OrderKind kind_;
  std::vector<std::size_t> precedence_;
  std::size_t block_;
};

}  // namespace germforge
