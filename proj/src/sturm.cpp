#include "germforge/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace germforge {

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

Rational eval(const UPoly& p, const Rational& x) {
  Rational v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

double eval(const UPoly& p, double x) {
  double v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i].get_d();
  return v;
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

UPoly remainder(const UPoly& a, const UPoly& b) {
  if (b.empty()) throw std::invalid_argument("division by the zero polynomial");
  UPoly r = a;
  trim(r);
  while (r.size() >= b.size()) {
    const Rational f = r.back() / b.back();
    const std::size_t shift = r.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
    r.pop_back();
    trim(r);
  }
  return r;
}

namespace {

// Positive rescaling keeps signs and keeps coefficients small.
void normalize(UPoly& p) {
  if (p.empty()) return;
  const Rational s = abs(p.back());
  for (auto& c : p) c /= s;
}

}  // namespace

namespace {

UPoly quotient(const UPoly& a, const UPoly& b) {
  UPoly r = a, q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  trim(r);
  while (r.size() >= b.size() && !r.empty()) {
    const Rational f = r.back() / b.back();
    const std::size_t shift = r.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) r[shift + i] -= f * b[i];
    r.pop_back();
    trim(r);
  }
  trim(q);
  return q;
}

UPoly squarefree(const UPoly& p) {
  UPoly a = p, b = derivative(p);
  if (b.empty()) return p;
  while (!b.empty()) {
    UPoly r = remainder(a, b);
    normalize(r);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() <= 1 ? p : quotient(p, a);
}

}  // namespace

SturmSequence::SturmSequence(const UPoly& p0) {
  UPoly p = p0;
  trim(p);
  if (p.empty()) return;
  p = squarefree(p);
  normalize(p);
  seq_.push_back(p);
  UPoly d = derivative(p);
  normalize(d);
  if (d.empty()) return;
  seq_.push_back(d);
  for (;;) {
    UPoly r = remainder(seq_[seq_.size() - 2], seq_.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    normalize(r);
    seq_.push_back(std::move(r));
  }
}

int SturmSequence::variations(const Rational& x) const {
  int v = 0, last = 0;
  for (const auto& q : seq_) {
    const int s = sgn(eval(q, x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int SturmSequence::variations_at_infinity(int side) const {
  int v = 0, last = 0;
  for (const auto& q : seq_) {
    int s = sgn(q.back());
    if (side < 0 && (q.size() - 1) % 2 == 1) s = -s;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
  if (seq_.empty()) throw std::invalid_argument("root count of the zero polynomial");
  return variations(a) - variations(b);
}

int SturmSequence::count_all() const {
  if (seq_.empty()) throw std::invalid_argument("root count of the zero polynomial");
  return variations_at_infinity(-1) - variations_at_infinity(1);
}

std::vector<double> SturmSequence::roots(const Rational& a, const Rational& b) const {
  std::vector<double> out;
  if (seq_.empty()) throw std::invalid_argument("roots of the zero polynomial");
  const UPoly& p = seq_.front();
  if (sgn(eval(p, a)) == 0) out.push_back(a.get_d());
  // isolate in (a, b] by exact bisection, then refine each simple sign change
  struct Iv {
    Rational lo, hi;
    int n;
  };
  std::vector<Iv> stack{{a, b, count(a, b)}};
  std::vector<std::pair<Rational, Rational>> isolated;
  while (!stack.empty()) {
    Iv iv = stack.back();
    stack.pop_back();
    if (iv.n == 0) continue;
    if (iv.n == 1) {
      isolated.emplace_back(iv.lo, iv.hi);
      continue;
    }
    const Rational mid = (iv.lo + iv.hi) / 2;
    const int left = count(iv.lo, mid);
    stack.push_back({mid, iv.hi, iv.n - left});
    stack.push_back({iv.lo, mid, left});
  }
  for (auto [lo, hi] : isolated) {
    if (sgn(eval(p, hi)) == 0) {
      out.push_back(hi.get_d());
      continue;
    }
    const int shi = sgn(eval(p, hi));
    double l = lo.get_d(), h = hi.get_d();
    for (int it = 0; it < 200 && h - l > 1e-15 * std::max(1.0, std::fabs(l)); ++it) {
      const double m = 0.5 * (l + h);
      const double v = eval(p, m);
      if (v == 0) {
        l = h = m;
        break;
      }
      if ((v > 0) == (shi > 0)) h = m;
      else l = m;
    }
    out.push_back(0.5 * (l + h));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational root_bound(const UPoly& p0) {
  UPoly p = p0;
  trim(p);
  if (p.size() < 2) return 1;
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) m = std::max(m, Rational(abs(p[i] / p.back())));
  return m + 1;
}

}  // namespace germforge
