#include "germforge/transition.hpp"

#include "germforge/groebner.hpp"
#include "germforge/polytools.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace germforge {

namespace {

// Helper variable names; never valid user identifiers.
const char* const kX1 = "_x1";
const char* const kX2 = "_x2";
const char* const kS = "_s";
const char* const kM = "_m";
const char* const kT = "_t";

std::vector<std::string> param_names(const VarList& v) {
  return {v.names().begin() + 2, v.names().end()};
}

// Parameter names of the (s, m, lambda, params) ring.
std::vector<std::string> sm_params(const VarList& v) {
  return {v.names().begin() + 3, v.names().end()};
}

Jet over(const Jet& p, const VarList& vars) {
  Jet r(vars);
  for (const auto& [m, c] : p.terms()) r.add_term(m, c);
  return r;
}

TransitionComponent named(const std::string& name) {
  TransitionComponent c;
  c.name = name;
  return c;
}

void add_piece(TransitionComponent& c, const std::vector<Jet>& system, const std::vector<std::string>& drop) {
  c.systems.push_back(system);
  auto piece = piece_from(eliminate(system, drop));
  if (!piece) return;
  for (const auto& q : c.pieces)
    if (q.equations == piece->equations) return;
  c.pieces.push_back(std::move(*piece));
}

void degeneracy_notes(const Jet& G, TransitionComponent& c) {
  for (std::size_t i = 0; i < 2; ++i)
    if (!G.depends_on(i)) c.notes.push_back("the germ does not depend on " + G.vars()[i]);
}

// Side condition s^2 - 4m > 0 when the reduced system gives s and m as
// polynomials in the parameters.
std::optional<SideCondition> real_pair_condition(const std::vector<Jet>& system, const VarList& vars,
                                                 std::size_t is, std::size_t im, std::size_t il) {
  const auto gb = buchberger(system, MonomialOrder::elimination(vars.size(), {il, is, im}));
  std::optional<Jet> s_val, m_val;
  auto solve_linear = [&](const Jet& g, std::size_t v, std::size_t other) -> std::optional<Jet> {
    if (g.degree_in(il) || g.degree_in(other) || g.degree_in(v) != 1) return std::nullopt;
    Jet rest(vars);
    Rational lead;
    for (const auto& [m, c] : g.terms()) {
      if (m[v] == 0) {
        rest.add_term(m, c);
      } else {
        if (m.degree() != 1) return std::nullopt;
        lead = c;
      }
    }
    return rest.scaled(-1 / lead);
  };
  for (const auto& g : gb) {
    if (!s_val) s_val = solve_linear(g, is, im);
    if (!m_val) m_val = solve_linear(g, im, is);
  }
  if (!s_val || !m_val) return std::nullopt;
  const Jet disc = (*s_val) * (*s_val) - m_val->scaled(4);
  if (disc.is_constant()) return std::nullopt;
  const Jet c = canonical(disc);
  // canonical may flip the sign; compare one coefficient
  const auto& [m0, c0] = *c.terms().begin();
  const bool flipped = sgn(c0) * sgn(disc.coeff(m0)) < 0;
  SideCondition sc;
  sc.poly = c.embedded(VarList(sm_params(vars)));
  sc.rel = flipped ? Relation::Le : Relation::Ge;
  return sc;
}

}  // namespace

std::string relation_symbol(Relation r, bool unicode) {
  switch (r) {
    case Relation::Eq: return "=";
    case Relation::Lt: return "<";
    case Relation::Le: return unicode ? "≤" : "<=";
    case Relation::Gt: return ">";
    case Relation::Ge: return unicode ? "≥" : ">=";
  }
  return "=";
}

std::string component_symbol(const std::string& name, bool unicode) {
  if (!unicode) return name;
  static const std::vector<std::pair<std::string, std::string>> table = {
      {"B", "ℬ"}, {"H", "ℋ"}, {"D", "𝒟"}, {"L_C", "ℒ_C"}, {"L_SH", "ℒ_SH"}, {"L_SV", "ℒ_SV"},
      {"L_T", "ℒ_T"}, {"G_1", "𝒢₁"}, {"G_2", "𝒢₂"}, {"L_B", "ℒ_B"}, {"L_H", "ℒ_H"}, {"G_D", "𝒢_D"}};
  for (const auto& [a, u] : table)
    if (a == name) return u;
  return name;
}

bool TransitionComponent::is_dense() const {
  return std::any_of(pieces.begin(), pieces.end(), [](const auto& p) { return p.equations.empty(); });
}

std::vector<Jet> TransitionComponent::hypersurfaces() const {
  std::vector<Jet> out;
  for (const auto& p : pieces)
    if (p.equations.size() == 1) out.push_back(p.equations.front());
  return out;
}

std::string TransitionComponent::to_text(const std::vector<std::string>& params, bool unicode) const {
  std::string head = component_symbol(name, unicode) + " := ";
  if (pieces.empty()) return head + (unicode ? "∅" : "{}");
  std::string tuple = "(";
  for (std::size_t i = 0; i < params.size(); ++i)
    tuple += (i ? ", " : "") + (unicode ? unicode_name(params[i]) : params[i]);
  tuple += ")";
  std::string body;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const auto& p = pieces[i];
    if (i) body += unicode ? " ∪ " : " u ";
    if (p.equations.empty()) {
      body += unicode ? "ℝ" + superscript(static_cast<unsigned>(params.size())) : "R^" + std::to_string(params.size());
      continue;
    }
    std::string conds;
    for (const auto& e : p.equations)
      conds += (conds.empty() ? "" : ", ") + (unicode ? e.to_unicode() : e.to_string()) + " = 0";
    for (const auto& s : p.side)
      conds += ", " + (unicode ? s.poly.to_unicode() : s.poly.to_string()) + " " + relation_symbol(s.rel, unicode) + " 0";
    body += "{" + tuple + " | " + conds + "}";
  }
  return head + body;
}

const TransitionComponent* TransitionSet::find(const std::string& name) const {
  for (const auto& c : components)
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<Jet> TransitionSet::polynomials() const {
  std::vector<Jet> out;
  for (const auto& c : components)
    for (const auto& p : c.hypersurfaces())
      if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  return out;
}

std::string TransitionSet::to_text(bool unicode) const {
  std::string s;
  for (const auto& c : components) {
    s += c.to_text(params, unicode) + "\n";
    for (const auto& n : c.notes) s += "  note: " + n + "\n";
  }
  return s;
}

UnfoldingGerm parametric_germ(const Jet& body) {
  if (body.nvars() < 2) throw std::invalid_argument("a parametric germ needs variables (x, lambda, ...)");
  UnfoldingGerm u;
  u.body = body.as_exact();
  u.base = unfolding_base(u.body);
  u.state_var = body.vars()[0];
  u.dist_param = body.vars()[1];
  u.params = param_names(body.vars());
  return u;
}

std::optional<TransitionPiece> piece_from(const std::vector<Jet>& eliminated) {
  TransitionPiece p;
  if (eliminated.empty()) return p;
  for (const auto& g : eliminated)
    if (g.is_constant()) return std::nullopt;
  if (eliminated.size() == 1) {
    p.equations = eliminated;
    return p;
  }
  const Jet d = poly_gcd(eliminated);
  if (!d.is_constant()) {
    p.equations = {d};
  } else {
    p.equations = eliminated;
  }
  return p;
}

TransitionComponent bifurcation_set(const Jet& G0) {
  const Jet G = G0.as_exact();
  TransitionComponent c = named("B");
  degeneracy_notes(G, c);
  add_piece(c, {G, G.derivative(0), G.derivative(1)}, {G.vars()[0], G.vars()[1]});
  return c;
}

TransitionComponent hysteresis_set(const Jet& G0) {
  const Jet G = G0.as_exact();
  TransitionComponent c = named("H");
  degeneracy_notes(G, c);
  const Jet Gx = G.derivative(0);
  add_piece(c, {G, Gx, Gx.derivative(0)}, {G.vars()[0], G.vars()[1]});
  return c;
}

TransitionComponent double_limit_set(const Jet& G0) {
  const Jet G = G0.as_exact();
  TransitionComponent c = named("D");
  degeneracy_notes(G, c);
  const VarList& V = G.vars();
  std::vector<std::string> names{kX1, kX2};
  std::vector<std::string> sm{kS, kM};
  for (std::size_t i = 1; i < V.size(); ++i) {
    names.push_back(V[i]);
    sm.push_back(V[i]);
  }
  const VarList E(names), SM(sm);
  std::vector<Jet> img1{Jet::variable(E, 0)}, img2{Jet::variable(E, 1)};
  for (std::size_t i = 1; i < V.size(); ++i) {
    img1.push_back(Jet::variable(E, i + 1));
    img2.push_back(Jet::variable(E, i + 1));
  }
  const Jet Gx = G.derivative(0);
  const Jet G1 = G.compose(img1), G2 = G.compose(img2);
  const Jet Gx1 = Gx.compose(img1), Gx2 = Gx.compose(img2);
  const Jet d = Jet::variable(E, 0) - Jet::variable(E, 1);
  // Symmetric combinations, divided by the powers of x1 - x2 they carry.
  const std::vector<Jet> S = {
      G1 + G2, Gx1 + Gx2, exact_quotient(Gx1 - Gx2, d),
      exact_quotient(G1 - G2 - (d * (Gx1 + Gx2)).scaled(Rational(1, 2)), d.pow(3))};
  std::vector<Jet> sys;
  for (const auto& s : S) sys.push_back(over(to_elementary(s, 0, 1), SM));
  add_piece(c, sys, {kS, kM, V[1]});
  c.systems.back() = S;  // witnesses in (x1, x2) keep both points real
  if (c.pieces.size() == 1 && c.pieces.front().equations.size() == 1) {
    if (auto sc = real_pair_condition(sys, SM, 0, 1, 2)) {
      c.pieces.front().side.push_back(*sc);
    } else {
      c.notes.push_back("the condition that both limit points are real is not imposed");
    }
  }
  return c;
}

TransitionSet transition_set(const UnfoldingGerm& G) {
  TransitionSet t;
  t.params = G.params;
  t.components = {bifurcation_set(G.body), hysteresis_set(G.body), double_limit_set(G.body)};
  return t;
}

TransitionSet nonpersistent_sets(const UnfoldingGerm& F0, const Interval& U, const Interval& L,
                                 const BoundaryOptions& opts) {
  if (U.lo >= U.hi || L.lo >= L.hi) throw std::invalid_argument("boundary intervals must satisfy lo < hi");
  const Jet F = F0.body.as_exact();
  const VarList& V = F.vars();
  const std::string x = V[0], lam = V[1];
  const Jet Fx = F.derivative(0), Fl = F.derivative(1);
  const std::vector<Rational> xs{U.lo, U.hi}, ls{L.lo, L.hi};
  TransitionSet t;
  t.params = F0.params;

  TransitionComponent lc = named("L_C"), lsh = named("L_SH"), lsv = named("L_SV"), lt = named("L_T");
  TransitionComponent g1 = named("G_1"), g2 = named("G_2");
  const bool vert = opts.vertical, hor = opts.horizontal;
  if (vert && hor)
    for (const auto& a : xs)
      for (const auto& b : ls) add_piece(lc, {F.substitute(0, a).substitute(1, b)}, {x, lam});
  if (vert) {
    for (const auto& a : xs) {
      add_piece(lsh, {F.substitute(0, a), Fx.substitute(0, a)}, {x, lam});
      add_piece(lt, {F.substitute(0, a), Fl.substitute(0, a)}, {x, lam});
    }
    // Boundary zero at (x0, lambda) and an interior fold at (x, lambda), x != x0.
    const VarList W = V.extended({kT});
    const Jet Fw = over(F, W), Fxw = over(Fx, W);
    const Jet tvar = Jet::variable(W, W.size() - 1), xvar = Jet::variable(W, 0);
    for (const auto& a : xs) {
      const Jet sat = tvar * (xvar - Jet::constant(W, a)) - Jet::constant(W, 1);
      add_piece(g1, {Fw.substitute(0, a), Fw, Fxw, sat}, {x, lam, kT});
    }
    add_piece(g2, {F.substitute(0, U.lo), F.substitute(0, U.hi)}, {x, lam});
  }
  if (hor)
    for (const auto& b : ls) add_piece(lsv, {F.substitute(1, b), Fx.substitute(1, b)}, {x, lam});
  const std::string off = "boundary family not requested";
  if (!(vert && hor)) lc.notes.push_back(off);
  if (!vert) {
    for (auto* c : {&lsh, &lt, &g1, &g2}) c->notes.push_back(off);
  }
  if (!hor) lsv.notes.push_back(off);

  TransitionComponent lb = bifurcation_set(F), lh = hysteresis_set(F), gd = double_limit_set(F);
  lb.name = "L_B";
  lh.name = "L_H";
  gd.name = "G_D";
  t.components = {lc, lsh, lsv, lt, g1, g2, lb, lh, gd};
  return t;
}

}  // namespace germforge
