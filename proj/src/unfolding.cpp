#include "germforge/unfolding.hpp"

#include "germforge/errors.hpp"
#include "germforge/linalg.hpp"
#include "germforge/normalform.hpp"
#include "germforge/order.hpp"
#include "germforge/tangent.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace germforge {

namespace {

const VarList& xl() {
  static const VarList v{"x", "lambda"};
  return v;
}

bool graded_before(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a[0] > b[0];
}

JetSpace tangent_span(const Jet& g, int k) {
  JetSpace s(MonomialOrder::graded(2));
  for (const auto& v : tangent_spanning_set(g, k)) s.insert(v);
  return s;
}

std::string render(const UnfoldingGerm& u, bool unicode) {
  std::string s = u.base.is_zero() ? "" : unicode ? u.base.to_unicode() : u.base.to_string();
  for (std::size_t i = 0; i < u.directions.size(); ++i) {
    const Monomial& m = u.directions[i];
    const std::string a = unicode ? unicode_name(u.params[i]) : u.params[i];
    std::string mon;
    if (m.degree() > 0) {
      const Jet t = Jet::term(xl(), m);
      mon = unicode ? t.to_unicode() : "*" + t.to_string();
    }
    s += (s.empty() ? "" : " + ") + a + mon;
  }
  return s.empty() ? "0" : s;
}

}  // namespace

std::string UnfoldingGerm::to_string() const { return render(*this, false); }
std::string UnfoldingGerm::to_unicode() const { return render(*this, true); }

UnfoldingGerm make_unfolding(const Jet& base, const std::vector<Monomial>& directions) {
  if (base.nvars() != 2) throw std::invalid_argument("unfoldings need a germ in (x, lambda)");
  UnfoldingGerm u;
  u.base = base;
  u.directions = directions;
  u.state_var = base.vars()[0];
  u.dist_param = base.vars()[1];
  for (std::size_t i = 0; i < directions.size(); ++i) u.params.push_back("alpha" + std::to_string(i + 1));
  const VarList all = base.vars().extended(u.params);
  const int trunc = base.exact() ? Jet::kExact : base.truncation() + 1;
  u.body = base.embedded(all);
  u.body.set_truncation(trunc);
  for (std::size_t i = 0; i < directions.size(); ++i) {
    Monomial m = directions[i];
    m.set(2 + i, 1);
    u.body.add_term(m, 1);
  }
  return u;
}

std::vector<std::vector<Monomial>> complement_bases(const Jet& g, int k, std::size_t cap) {
  const auto perp = tangent_perp(g, k);
  const std::size_t p = perp.size();
  std::vector<std::vector<Monomial>> out;
  auto first = perp;
  std::sort(first.begin(), first.end(), graded_before);
  out.push_back(first);
  if (cap <= 1 || p == 0) return out;

  const JetSpace t = tangent_span(g, k);
  const IntrinsicIdeal itr = tangent_space(g, k).intrinsic;
  std::vector<Monomial> cand;
  for (const auto& m : monomials_up_to(2, static_cast<unsigned>(k)))
    if (!itr.contains(m) && !t.contains(Jet::term(g.vars(), m).truncated(k))) cand.push_back(m);
  std::sort(cand.begin(), cand.end(), graded_before);

  std::vector<Monomial> pick;
  std::function<void(std::size_t, JetSpace)> rec = [&](std::size_t from, JetSpace space) {
    if (out.size() >= cap) return;
    if (pick.size() == p) {
      if (std::find(out.begin(), out.end(), pick) == out.end()) out.push_back(pick);
      return;
    }
    for (std::size_t i = from; i + (p - pick.size()) <= cand.size() && out.size() < cap; ++i) {
      JetSpace next = space;
      if (!next.insert(Jet::term(g.vars(), cand[i]).truncated(k))) continue;
      pick.push_back(cand[i]);
      rec(i + 1, std::move(next));
      pick.pop_back();
    }
  };
  rec(0, t);
  return out;
}

std::vector<std::string> unfolding_ring_warnings(const GermExpr& g, const VarList& vars, int k, Ring ring) {
  if (ring != Ring::Polynomial || polynomial_ring_suitable(g, vars, k)) return {};
  return {"Warning: The ring of polynomial germs is not suitable for normal form computations of g.",
          "Suggestion: The permissible computational ring options are Fractional, SmoothGerms and Formal."};
}

UnfoldingResult universal_unfolding(const GermExpr& g, const VarList& vars, const UnfoldingOptions& opts) {
  UnfoldingResult r;
  r.degree = resolve_degree(g, vars, opts.degree);
  const int k = r.degree;
  r.warnings = unfolding_ring_warnings(g, vars, k, opts.ring);
  const Jet gk = taylor_expand(g, vars, k);
  std::vector<Jet> bases;
  if (opts.normalform)
    bases = normal_forms(gk, k, opts.list);
  else
    bases = {gk};
  const std::size_t cap = opts.list ? opts.max_bases : 1;
  for (const auto& b : bases)
    for (const auto& dirs : complement_bases(b, k, cap)) r.unfoldings.push_back(make_unfolding(b, dirs));
  return r;
}

Jet unfolding_base(const Jet& G) {
  if (G.nvars() < 2) throw std::invalid_argument("an unfolding needs the variables (x, lambda, ...)");
  Jet b = G;
  for (std::size_t v = 2; v < G.nvars(); ++v) b = b.substitute(v, 0);
  return b.embedded(VarList({G.vars()[0], G.vars()[1]}));
}

bool check_universal(const Jet& G, int k) {
  const Jet g = unfolding_base(G).truncated(k);
  const std::size_t codim = tangent_perp(g, k).size();
  const std::size_t p = G.nvars() - 2;
  if (p != codim) return false;
  JetSpace t = tangent_span(g, k);
  for (std::size_t v = 2; v < G.nvars(); ++v) {
    Jet d = G.derivative(v);
    for (std::size_t w = 2; w < G.nvars(); ++w) d = d.substitute(w, 0);
    d = d.embedded(g.vars());
    if (!t.insert(d.truncated(k))) return false;
  }
  return true;
}

bool check_universal(const GermExpr& G, const VarList& vars, std::optional<int> degree) {
  if (vars.size() < 2) throw std::invalid_argument("an unfolding needs the variables (x, lambda, ...)");
  const std::vector<std::string> params(vars.names().begin() + 2, vars.names().end());
  const VarList base_vars{vars[0], vars[1]};
  const int k = resolve_degree(set_to_zero(G, params), base_vars, degree);
  return check_universal(taylor_expand(G, vars, k + 1), k);
}

}  // namespace germforge
