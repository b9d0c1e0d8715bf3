#pragma once

#include "germforge/jet.hpp"
#include "germforge/order.hpp"
#include "germforge/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace germforge {

/// Dense rational matrix, row major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix transposed() const;
  /// Reduced row echelon form; `pivots` receives the pivot columns.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  Rational determinant() const;
  /// Basis of the right null space.
  std::vector<std::vector<Rational>> kernel() const;
  /// A solution of A v = b with free unknowns set to zero, if consistent.
  std::optional<std::vector<Rational>> solve(const std::vector<Rational>& b) const;

  std::string to_string() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Finite-dimensional subspace of a jet space, kept in echelon form with the
/// pivot of each basis element equal to its leading monomial under `order`.
/// Each basis element remembers its expression in the inserted generators.
class JetSpace {
 public:
  using Combination = std::map<std::size_t, Rational>;

  explicit JetSpace(MonomialOrder order) : order_(std::move(order)) {}

  /// Inserts a generator (assigned the next generator index); returns true
  /// when it enlarged the space.
  bool insert(const Jet& v);
  /// Remainder of v after elimination by the basis, with the combination c of
  /// generators such that v = remainder + sum c_i gen_i.
  Jet reduce(const Jet& v, Combination* combination = nullptr) const;
  bool contains(const Jet& v) const { return reduce(v).is_zero(); }

  std::size_t dimension() const { return basis_.size(); }
  std::size_t generator_count() const { return ngens_; }
  /// Echelon basis elements in insertion order of their pivots.
  std::vector<Jet> basis() const;
  std::vector<Monomial> pivots() const;
  /// Fully reduced echelon basis (no basis element has a term at another
  /// element's pivot), ordered by pivot descending.
  std::vector<Jet> reduced_basis() const;
  bool has_pivot(const Monomial& m) const { return basis_.count(m) > 0; }
  const MonomialOrder& order() const { return order_; }

 private:
  struct Element {
    Jet vec;  // leading coefficient 1
    Combination comb;
    std::size_t seq;
  };
  MonomialOrder order_;
  std::map<Monomial, Element> basis_;
  std::size_t ngens_ = 0;
};

}  // namespace germforge
