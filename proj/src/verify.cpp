#include "germforge/verify.hpp"

#include "germforge/errors.hpp"
#include "germforge/groebner.hpp"
#include "germforge/mora.hpp"
#include "germforge/tangent.hpp"
#include "germforge/transition.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace germforge {

namespace {

const char* kIncreaseBound = "Increase the upper bound for the truncation degree!";

std::vector<Jet> rt_gens(const Jet& g) {
  const Jet gx = g.derivative(0);
  return {g, gx.times_monomial(Monomial{1, 0}), gx.times_monomial(Monomial{0, 1})};
}

void finish(VerifyReport& r, bool polynomial) {
  r.permissible_rings = {Ring::Smooth, Ring::Formal, Ring::Fractional};
  if (polynomial) r.permissible_rings.push_back(Ring::Polynomial);
  r.recommended = Ring::Fractional;
}

bool all_polynomial(const std::vector<GermExpr>& G) {
  return std::all_of(G.begin(), G.end(), [](const GermExpr& e) { return e.is_polynomial(); });
}

}  // namespace

std::string ring_title(Ring r) {
  switch (r) {
    case Ring::Smooth: return "Ring of smooth germs";
    case Ring::Formal: return "Ring of formal power series";
    case Ring::Fractional: return "Ring of fractional germs";
    case Ring::Polynomial: return "Ring of polynomial germs";
  }
  return "";
}

std::string ring_keyword(Ring r) {
  switch (r) {
    case Ring::Smooth: return "smooth";
    case Ring::Formal: return "formal";
    case Ring::Fractional: return "fractional";
    case Ring::Polynomial: return "polynomial";
  }
  return "";
}

Ring parse_ring(const std::string& name) {
  for (Ring r : {Ring::Smooth, Ring::Formal, Ring::Fractional, Ring::Polynomial})
    if (ring_keyword(r) == name) return r;
  throw std::invalid_argument("unknown ring '" + name + "' (expected smooth, formal, fractional or polynomial)");
}

int default_upper_bound() {
  if (const char* env = std::getenv("GERMFORGE_MAX_DEGREE")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0 && v < 1000) return static_cast<int>(v);
  }
  return 20;
}

bool VerifyReport::permits(Ring r) const {
  return std::find(permissible_rings.begin(), permissible_rings.end(), r) != permissible_rings.end();
}

std::string VerifyReport::to_text() const {
  std::string s;
  for (const auto& w : warnings) s += w + "\n";
  if (!truncation_degree) return s;
  if (!s.empty()) s += "\n";
  s += "The following rings are allowed as the means of computations:\n\n";
  for (Ring r : permissible_rings) s += ring_title(r) + "\n\n";
  s += "The truncation degree must be: " + std::to_string(*truncation_degree) + "\n";
  s += "Recommended ring: " + ring_title(recommended) + "\n";
  return s;
}

bool polynomial_ring_agrees(const std::vector<Jet>& gens, int k) {
  std::vector<Jet> exact;
  for (const auto& g : gens)
    if (!g.is_zero()) exact.push_back(g.as_exact());
  if (exact.empty()) return true;
  const std::size_t n = exact.front().nvars();
  const auto graded = MonomialOrder::graded(n);
  const auto gb = buchberger(exact, graded);
  const StandardBasis sb = standard_basis(exact, MonomialOrder::local(n), k);
  const auto ns = sb.normal_set();
  std::set<Monomial> boundary;
  for (const auto& m : ns)
    for (std::size_t v = 0; v < n; ++v) {
      const Monomial b = m * Monomial::unit(v);
      if (std::find(ns.begin(), ns.end(), b) == ns.end()) boundary.insert(b);
    }
  if (ns.empty()) boundary.insert(Monomial{});
  for (const auto& m : boundary) {
    const Jet t = Jet::term(exact.front().vars(), m);
    const bool global = mora_divide(t, gb, graded, Jet::kExact).remainder.is_zero();
    const bool local = static_cast<int>(m.degree()) > k || sb.contains(t.truncated(k));
    if (global != local) return false;
  }
  return true;
}

bool polynomial_ring_suitable(const GermExpr& g, const VarList& vars, int k) {
  return g.is_polynomial() && polynomial_ring_agrees(rt_gens(expand_polynomial(g, vars)), k + 1);
}

VerifyReport verify_germ(const GermExpr& g, const VarList& vars, int upper_bound) {
  VerifyReport r;
  bool infinite = false;
  for (int k = 1; k <= upper_bound; ++k) {
    infinite = false;
    try {
      const IntrinsicIdeal p1 = high_order_terms(taylor_expand(g, vars, k + 1), k + 1);
      if (!p1.contains_power(static_cast<unsigned>(k + 1))) continue;
      const IntrinsicIdeal p2 = high_order_terms(taylor_expand(g, vars, k + 2), k + 2);
      if (!(p1 == p2)) continue;
    } catch (const InfiniteCodimension&) {
      infinite = true;
      continue;
    }
    r.truncation_degree = k;
    finish(r, polynomial_ring_suitable(g, vars, k));
    return r;
  }
  if (infinite) r.warnings.push_back("The germ is of infinite codimension up to degree " + std::to_string(upper_bound) + ".");
  r.warnings.push_back(kIncreaseBound);
  return r;
}

VerifyReport verify_ideal(const std::vector<GermExpr>& G, const VarList& vars, int upper_bound) {
  if (G.empty()) throw std::invalid_argument("ideal mode needs at least one germ");
  VerifyReport r;
  bool infinite = false;
  for (int k = 1; k <= upper_bound; ++k) {
    std::vector<Jet> gens;
    for (const auto& e : G) gens.push_back(taylor_expand(e, vars, k + 1));
    const StandardBasis sb = standard_basis(gens, MonomialOrder::local(vars.size()), k);
    infinite = !sb.codimension().has_value();
    if (infinite || sb.certification() != Certification::Certified) continue;
    r.truncation_degree = k;
    bool poly = all_polynomial(G);
    if (poly) {
      std::vector<Jet> exact;
      for (const auto& e : G) exact.push_back(expand_polynomial(e, vars));
      poly = polynomial_ring_agrees(exact, k);
    }
    finish(r, poly);
    return r;
  }
  if (infinite) r.warnings.push_back("the ideal is of infinite codimension");
  r.warnings.push_back(kIncreaseBound);
  return r;
}

namespace {

std::optional<std::vector<std::vector<Jet>>> transition_polynomials(const GermExpr& H, const VarList& vars, int k) {
  try {
    const TransitionSet T = transition_set(parametric_germ(taylor_expand(H, vars, k)));
    std::vector<std::vector<Jet>> out;
    for (const auto& c : T.components) {
      std::vector<Jet> polys;
      for (const auto& piece : c.pieces)
        for (const auto& e : piece.equations) polys.push_back(e);
      out.push_back(std::move(polys));
    }
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

VerifyReport verify_persistent(const GermExpr& H, const VarList& vars, int upper_bound) {
  if (vars.size() < 2) throw std::invalid_argument("persistent mode needs the variables x and lambda");
  VerifyReport r;
  // The hysteresis system uses G_xx, so jets of degree below 2 do not represent it.
  auto prev = transition_polynomials(H, vars, 2);
  for (int k = 2; k <= upper_bound; ++k) {
    auto next = transition_polynomials(H, vars, k + 1);
    if (prev && next && *prev == *next) {
      r.truncation_degree = k;
      finish(r, H.is_polynomial());
      return r;
    }
    prev = std::move(next);
  }
  r.warnings.push_back(kIncreaseBound);
  return r;
}

}  // namespace germforge
