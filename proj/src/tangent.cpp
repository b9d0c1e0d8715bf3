#include "germforge/tangent.hpp"

#include "germforge/errors.hpp"
#include "germforge/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace germforge {

namespace {

void check_germ(const Jet& g, int k) {
  if (g.nvars() != 2) throw std::invalid_argument("germs need exactly two variables (x, lambda)");
  if (k < 0 || k >= Jet::kExact) throw std::invalid_argument("a finite truncation degree is required");
  if (g.truncation() < k) throw std::invalid_argument("the germ is not known up to degree " + std::to_string(k));
}

Jet times(const Jet& f, const Monomial& m, int k) { return f.times_monomial(m).truncated(k); }

std::string join_jets(const std::vector<Jet>& v, bool unicode) {
  std::string s;
  for (const auto& f : v) {
    if (!s.empty()) s += ", ";
    s += unicode ? f.to_unicode() : f.to_string();
  }
  return s;
}

std::vector<Jet> rt_generators(const Jet& g, int k) {
  const Jet gx = g.derivative(0);
  return {g.truncated(k), times(gx, Monomial{1, 0}, k), times(gx, Monomial{0, 1}, k)};
}

/// Itr of the unipotent tangent space M{g} + (M^2 + <lambda>){g_x} + E_lambda{lambda^2 g_lambda}.
/// A pure power can first show up one degree past the truncation, so a
/// failure at k is retried with the jet's own terms at k+1.
bool finite_codimension(const Jet& g, int k) {
  if (JetSubspace(g.vars(), rt_generators(g, k), {}, k).codimension()) return true;
  Jet g1 = g.truncated(k);
  g1.set_truncation(k + 1);
  return JetSubspace(g.vars(), rt_generators(g1, k + 1), {}, k + 1).codimension().has_value();
}

IntrinsicIdeal high_order_part(const Jet& g, int k, bool require_finite = true) {
  if (require_finite && !finite_codimension(g, k)) throw InfiniteCodimension("the germ is of infinite codimension");
  const Jet gx = g.derivative(0), gl = g.derivative(1);
  const std::vector<Jet> ideal{times(g, Monomial{1, 0}, k), times(g, Monomial{0, 1}, k), times(gx, Monomial{2, 0}, k),
                               times(gx, Monomial{0, 1}, k)};
  std::vector<Jet> module;
  for (unsigned j = 2; static_cast<int>(j) <= k; ++j) module.push_back(times(gl, Monomial{0, j}, k));
  return intrinsic_part(JetSubspace(g.vars(), ideal, module, k));
}

std::vector<Monomial> descending(std::vector<Monomial> v) {
  const auto ord = MonomialOrder::local(2);
  std::sort(v.begin(), v.end(), ord.descending());
  return v;
}

}  // namespace

std::string SpanSpace::to_string() const {
  std::string s = intrinsic.is_zero() ? "" : intrinsic.to_string();
  if (!extra.empty()) s += (s.empty() ? "{" : "+{") + join_jets(extra, false) + "}";
  return s.empty() ? "0" : s;
}

std::string SpanSpace::to_unicode() const {
  std::string s = intrinsic.is_zero() ? "" : intrinsic.to_unicode();
  if (!extra.empty()) s += (s.empty() ? "{" : "+{") + join_jets(extra, true) + "}";
  return s.empty() ? "0" : s;
}

std::string RestrictedTangent::to_string() const {
  std::string s = high_order.is_zero() ? "" : high_order.to_string();
  if (!display.empty()) s += (s.empty() ? "<" : "+<") + join_jets(display, false) + ">";
  return s.empty() ? "0" : s;
}

std::string RestrictedTangent::to_unicode() const {
  std::string s = high_order.is_zero() ? "" : high_order.to_unicode();
  if (!display.empty()) s += (s.empty() ? "⟨" : "+⟨") + join_jets(display, true) + "⟩";
  return s.empty() ? "0" : s;
}

std::vector<std::string> singularity_warnings(const Jet& g) {
  std::vector<std::string> out;
  if (sgn(g.coeff(Monomial{})) != 0) out.push_back("the germ does not vanish at the origin");
  else if (sgn(g.coeff(Monomial{1, 0})) != 0)
    out.push_back("the germ is not singular at the origin (g_x(0) is nonzero)");
  return out;
}

std::vector<Jet> tangent_spanning_set(const Jet& g, int k) {
  check_germ(g, k);
  const Jet gx = g.derivative(0), gl = g.derivative(1);
  std::vector<Jet> out;
  for (const auto& m : monomials_up_to(2, static_cast<unsigned>(k))) {
    out.push_back(times(g, m, k));
    out.push_back(times(gx, m, k));
  }
  for (unsigned j = 0; static_cast<int>(j) <= k; ++j) out.push_back(times(gl, Monomial{0, j}, k));
  return out;
}

RestrictedTangent restricted_tangent(const Jet& g, int k) {
  check_germ(g, k);
  RestrictedTangent rt;
  rt.generators = rt_generators(g, k);
  rt.high_order = high_order_part(g, k, false);
  for (auto it = rt.generators.rbegin(); it != rt.generators.rend(); ++it) {
    Jet d = primitive_part(rt.high_order.strip(*it));
    if (!d.is_zero()) rt.display.push_back(std::move(d));
  }
  return rt;
}

SpanSpace tangent_space(const Jet& g, int k) {
  check_germ(g, k);
  const VarList& vars = g.vars();
  const Jet gl = g.derivative(1);
  std::vector<Jet> module;
  for (unsigned j = 0; static_cast<int>(j) <= k; ++j) module.push_back(times(gl, Monomial{0, j}, k));
  JetSubspace t(vars, {g.truncated(k), g.derivative(0).truncated(k)}, module, k);

  SpanSpace out;
  out.truncation = k;
  out.intrinsic = intrinsic_part(t);
  const auto graded = MonomialOrder::graded(2);
  JetSpace span(graded);
  for (const auto& m : monomials_up_to(2, static_cast<unsigned>(k)))
    if (out.intrinsic.contains(m)) span.insert(Jet::term(vars, m, 1, k));
  for (const auto& v : tangent_spanning_set(g, k)) span.insert(v);
  for (auto& row : span.reduced_basis())
    if (!out.intrinsic.contains(row.leading_monomial(graded))) out.extra.push_back(std::move(row));
  return out;
}

IntrinsicIdeal high_order_terms(const Jet& g, int k) {
  check_germ(g, k);
  return high_order_part(g, k);
}

std::vector<Monomial> tangent_perp(const Jet& g, int k) {
  check_germ(g, k);
  high_order_part(g, k);
  JetSpace span(MonomialOrder::graded(2));
  for (const auto& v : tangent_spanning_set(g, k)) span.insert(v);
  std::vector<Monomial> out;
  for (const auto& m : monomials_up_to(2, static_cast<unsigned>(k)))
    if (!span.has_pivot(m)) out.push_back(m);
  return descending(std::move(out));
}

IntrinsicIdeal smallest_intrinsic_of(const Jet& g, int k) {
  check_germ(g, k);
  return smallest_intrinsic(g.truncated(k));
}

std::vector<Monomial> s_perp(const Jet& g, int k) {
  const IntrinsicIdeal s = smallest_intrinsic_of(g, k);
  std::vector<Monomial> out;
  for (const auto& m : monomials_up_to(2, static_cast<unsigned>(k)))
    if (!s.contains(m)) out.push_back(m);
  return descending(std::move(out));
}

std::vector<Monomial> intrinsic_gens(const Jet& g, int k) { return smallest_intrinsic_of(g, k).generators(); }

AlgObjects alg_objects(const Jet& g, int k) {
  AlgObjects a;
  a.warnings = singularity_warnings(g);
  a.rt = restricted_tangent(g, k);
  a.p = a.rt.high_order;
  a.t = tangent_space(g, k);
  a.tangent_perp = tangent_perp(g, k);
  a.s = smallest_intrinsic_of(g, k);
  a.s_perp = s_perp(g, k);
  a.intrinsic_gens = a.s.generators();
  return a;
}

}  // namespace germforge
