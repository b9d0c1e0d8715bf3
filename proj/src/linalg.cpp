#include "germforge/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace germforge {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::rref(std::vector<std::size_t>* pivots) const {
  Matrix a = *this;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && sgn(a(p, c)) == 0) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols_; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols_; ++j) a(i, j) -= f * a(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = std::move(piv);
  return a;
}

std::size_t Matrix::rank() const {
  std::vector<std::size_t> piv;
  rref(&piv);
  return piv.size();
}

Rational Matrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix a = *this;
  Rational det = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t p = c;
    while (p < rows_ && sgn(a(p, c)) == 0) ++p;
    if (p == rows_) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < rows_; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < cols_; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::vector<std::vector<Rational>> Matrix::kernel() const {
  std::vector<std::size_t> piv;
  Matrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : piv) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols_);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rational>> Matrix::solve(const std::vector<Rational>& b) const {
  if (b.size() != rows_) throw std::invalid_argument("right-hand side size mismatch");
  Matrix aug(rows_, cols_ + 1);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  std::vector<std::size_t> piv;
  Matrix r = aug.rref(&piv);
  if (!piv.empty() && piv.back() == cols_) return std::nullopt;
  std::vector<Rational> x(cols_);
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = r(i, cols_);
  return x;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    os << "[";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
    os << "]\n";
  }
  return os.str();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix size mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      if (sgn(a(i, l)) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, l) * b(l, j);
    }
  return c;
}

// ---- JetSpace -------------------------------------------------------------------

Jet JetSpace::reduce(const Jet& v, Combination* combination) const {
  Jet r = v;
  Combination comb;
  // Eliminating a pivot only introduces monomials below it, so scanning the
  // terms from the top of the order terminates.
  for (;;) {
    const Monomial* best = nullptr;
    for (const auto& [m, c] : r.terms()) {
      if (!basis_.count(m)) continue;
      if (!best || order_.greater(m, *best)) best = &m;
    }
    if (!best) break;
    const Monomial m = *best;
    const Rational c = r.coeff(m);
    const Element& e = basis_.at(m);
    r -= e.vec.scaled(c);
    if (combination)
      for (const auto& [g, w] : e.comb) {
        Rational& slot = comb[g];
        slot += c * w;
        if (sgn(slot) == 0) comb.erase(g);
      }
  }
  if (combination) *combination = std::move(comb);
  return r;
}

bool JetSpace::insert(const Jet& v) {
  const std::size_t gen = ngens_++;
  Combination comb;
  Jet r = reduce(v, &comb);
  if (r.is_zero()) return false;
  // r = v - sum comb_i gen_i
  Combination own;
  own[gen] = 1;
  for (const auto& [g, w] : comb) own[g] = -w;
  auto [lm, lc] = r.leading_term(order_);
  const Rational inv = 1 / lc;
  for (auto& [g, w] : own) w *= inv;
  basis_.emplace(lm, Element{r.scaled(inv), std::move(own), basis_.size()});
  return true;
}

std::vector<Jet> JetSpace::basis() const {
  std::vector<const Element*> els;
  for (const auto& [m, e] : basis_) els.push_back(&e);
  std::sort(els.begin(), els.end(), [](auto* a, auto* b) { return a->seq < b->seq; });
  std::vector<Jet> out;
  for (auto* e : els) out.push_back(e->vec);
  return out;
}

std::vector<Jet> JetSpace::reduced_basis() const {
  std::vector<std::pair<Monomial, Jet>> rows;
  for (const auto& [m, e] : basis_) rows.emplace_back(m, e.vec);
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) { return order_.greater(a.first, b.first); });
  // back substitution from the lowest pivot upwards
  for (std::size_t i = rows.size(); i-- > 0;)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const Rational c = rows[i].second.coeff(rows[j].first);
      if (sgn(c) != 0) rows[i].second -= rows[j].second.scaled(c);
    }
  std::vector<Jet> out;
  for (auto& r : rows) out.push_back(std::move(r.second));
  return out;
}

std::vector<Monomial> JetSpace::pivots() const {
  std::vector<std::pair<std::size_t, Monomial>> ps;
  for (const auto& [m, e] : basis_) ps.emplace_back(e.seq, m);
  std::sort(ps.begin(), ps.end());
  std::vector<Monomial> out;
  for (auto& p : ps) out.push_back(p.second);
  return out;
}

}  // namespace germforge
