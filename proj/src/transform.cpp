#include "germforge/transform.hpp"

#include "germforge/errors.hpp"
#include "germforge/intrinsic.hpp"
#include "germforge/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace germforge {

namespace {

struct Unknown {
  enum Part { S, X, L } part;
  Monomial m;
};

/// Rational positive solutions t of t^e = q, e possibly negative.
void add_root(std::vector<Rational>& out, const Rational& q, int e) {
  if (e == 0 || sgn(q) <= 0) return;
  auto r = rational_root(e > 0 ? q : Rational(1 / q), static_cast<unsigned>(e > 0 ? e : -e));
  if (r && std::find(out.begin(), out.end(), *r) == out.end()) out.push_back(*r);
}

std::optional<TransformationTriple> newton(const Jet& g, const Jet& f, int K, const Scaling& start,
                                          const IntrinsicIdeal* modulo) {
  const VarList& vars = g.vars();
  TransformationTriple t;
  t.degree = K + 1;
  t.S = Jet::constant(vars, start.c, K);
  t.X = Jet::term(vars, Monomial{1, 0}, start.a, K);
  t.Lambda = Jet::term(vars, Monomial{0, 1}, start.b, K);
  const Jet gx = g.derivative(0), gl = g.derivative(1);
  int last = -1, stall = 0;
  for (int iter = 0; iter < 8 * (K + 2); ++iter) {
    Jet r = (f - t.S * g.compose({t.X, t.Lambda})).truncated(K);
    if (modulo) r = modulo->strip(r);
    if (r.is_zero()) return t;
    const int e = static_cast<int>(r.order());
    if (e == last) {
      if (++stall > 3) return std::nullopt;
    } else {
      stall = 0;
      last = e;
    }
    const Jet G0 = g.compose({t.X, t.Lambda}).truncated(e);
    const Jet Gx = (t.S * gx.compose({t.X, t.Lambda})).truncated(e);
    const Jet Gl = (t.S * gl.compose({t.X, t.Lambda})).truncated(e);
    // low-degree unknowns last so that they stay free (zero) when possible
    std::vector<Unknown> unknowns;
    for (int d = e; d >= 0; --d)
      for (const auto& m : monomials_up_to(2, static_cast<unsigned>(d))) {
        if (static_cast<int>(m.degree()) != d) continue;
        unknowns.push_back({Unknown::S, m});
        if (d >= 1) unknowns.push_back({Unknown::X, m});
        if (d >= 1 && m[0] == 0) unknowns.push_back({Unknown::L, m});
      }
    std::stable_sort(unknowns.begin(), unknowns.end(), [](const Unknown& a, const Unknown& b) {
      const bool la = a.m.degree() <= (a.part == Unknown::S ? 0u : 1u);
      const bool lb = b.m.degree() <= (b.part == Unknown::S ? 0u : 1u);
      return la < lb;
    });
    std::vector<Monomial> rows;
    for (const auto& m : monomials_up_to(2, static_cast<unsigned>(e)))
      if (!modulo || !modulo->contains(m)) rows.push_back(m);
    Matrix A(rows.size(), unknowns.size());
    for (std::size_t c = 0; c < unknowns.size(); ++c) {
      const Unknown& u = unknowns[c];
      const Jet& base = u.part == Unknown::S ? G0 : u.part == Unknown::X ? Gx : Gl;
      const Jet col = base.times_monomial(u.m).truncated(e);
      for (std::size_t i = 0; i < rows.size(); ++i) A(i, c) = col.coeff(rows[i]);
    }
    std::vector<Rational> b(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) b[i] = r.coeff(rows[i]);
    const auto sol = A.solve(b);
    if (!sol) return std::nullopt;
    for (std::size_t c = 0; c < unknowns.size(); ++c) {
      if (sgn((*sol)[c]) == 0) continue;
      const Unknown& u = unknowns[c];
      Jet& target = u.part == Unknown::S ? t.S : u.part == Unknown::X ? t.X : t.Lambda;
      target.add_term(u.m, (*sol)[c]);
    }
    // the sign conditions only involve the linear parts, which later steps
    // leave alone unless forced; give up as soon as they fail
    if (!is_admissible(t)) return std::nullopt;
    // a diverging iteration shows up as coefficient blow-up
    for (const Jet* j : {&t.S, &t.X, &t.Lambda})
      for (const auto& [m, c] : j->terms())
        if (mpz_sizeinbase(c.get_num().get_mpz_t(), 2) + mpz_sizeinbase(c.get_den().get_mpz_t(), 2) > 4096)
          return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

std::string TransformationTriple::to_text() const {
  return "X = " + X.to_string() + "\nLambda = " + Lambda.to_string() + "\nS = " + S.to_string() + "\n";
}

std::optional<Scaling> solve_scaling(const std::vector<std::pair<Monomial, Rational>>& conditions) {
  if (conditions.empty()) return Scaling{};
  for (const auto& [m, r] : conditions)
    if (sgn(r) <= 0) return std::nullopt;
  auto exps = [](const Monomial& m) { return std::pair<int, int>(static_cast<int>(m[0]), static_cast<int>(m[1])); };
  std::vector<Rational> as{1};
  for (const auto& [m1, r1] : conditions)
    for (const auto& [m2, r2] : conditions) {
      const auto [i1, j1] = exps(m1);
      const auto [i2, j2] = exps(m2);
      if (j1 == j2) add_root(as, r1 / r2, i1 - i2);
    }
  for (const Rational& a : as) {
    std::vector<Rational> bs{1};
    for (const auto& [m1, r1] : conditions)
      for (const auto& [m2, r2] : conditions) {
        const auto [i1, j1] = exps(m1);
        const auto [i2, j2] = exps(m2);
        add_root(bs, r1 / r2 / power(a, i1 - i2), j1 - j2);
      }
    for (const Rational& b : bs) {
      const auto [i0, j0] = exps(conditions.front().first);
      const Rational c = conditions.front().second / (power(a, i0) * power(b, j0));
      const bool ok = std::all_of(conditions.begin(), conditions.end(), [&](const auto& cond) {
        const auto [i, j] = exps(cond.first);
        return c * power(a, i) * power(b, j) == cond.second;
      });
      if (ok) return Scaling{a, b, c};
    }
  }
  return std::nullopt;
}

Jet apply_scaling(const Jet& g, const Scaling& s) {
  Jet out(g.vars(), g.truncation());
  for (const auto& [m, c] : g.terms())
    out.add_term(m, c * s.c * power(s.a, static_cast<int>(m[0])) * power(s.b, static_cast<int>(m[1])));
  return out;
}

Jet transformation_residual(const Jet& g, const Jet& f, const TransformationTriple& t, int k) {
  if (k <= 0) return Jet(g.vars(), -1);
  const Jet X = t.X.truncated(k - 1), L = t.Lambda.truncated(k - 1), S = t.S.truncated(k - 1);
  return (f.truncated(k - 1) - S * g.truncated(k - 1).compose({X, L})).truncated(k - 1);
}

bool is_admissible(const TransformationTriple& t) {
  return sgn(t.X.coeff(Monomial{})) == 0 && sgn(t.Lambda.coeff(Monomial{})) == 0 &&
         sgn(t.X.coeff(Monomial{1, 0})) > 0 && sgn(t.Lambda.coeff(Monomial{0, 1})) > 0 &&
         sgn(t.S.coeff(Monomial{})) > 0 && !t.Lambda.depends_on(0);
}

std::optional<TransformationTriple> try_transformation(const Jet& g, const Jet& f, int k, const IntrinsicIdeal* modulo) {
  if (g.nvars() != 2 || !(g.vars() == f.vars())) throw std::invalid_argument("germs over (x, lambda) required");
  if (k < 1) throw std::invalid_argument("the degree must be positive");
  if (g.truncation() < k - 1 || f.truncation() < k - 1)
    throw std::invalid_argument("the germs are not known up to degree " + std::to_string(k - 1));
  const int K = k - 1;
  const Jet gk = g.truncated(K), fk = f.truncated(K);
  // candidate diagonal scalings: match the intrinsic generator coefficients,
  // optionally also the whole lowest-degree part
  std::vector<Scaling> starts;
  std::vector<std::pair<Monomial, Rational>> gens, lowest;
  auto add = [&](std::vector<std::pair<Monomial, Rational>>& v, const Monomial& m) {
    const Rational cg = gk.coeff(m), cf = fk.coeff(m);
    if (sgn(cg) != 0 && sgn(cf) != 0) v.emplace_back(m, cf / cg);
  };
  if (!gk.is_zero()) {
    for (const auto& m : smallest_intrinsic(gk).generators()) add(gens, m);
    lowest = gens;
    const Jet low = gk.homogeneous_part(gk.order());
    for (const auto& [m, c] : low.terms())
      if (std::none_of(gens.begin(), gens.end(), [&](const auto& p) { return p.first == m; })) add(lowest, m);
  }
  for (const auto* conds : {&lowest, &gens})
    if (auto s = solve_scaling(*conds)) starts.push_back(*s);
  starts.push_back(Scaling{});
  for (const auto& s : starts) {
    auto t = newton(gk, fk, K, s, modulo);
    if (!t || !is_admissible(*t)) continue;
    const Jet r = transformation_residual(g, f, *t, k);
    if (modulo ? modulo->contains(r) : r.is_zero()) return t;
  }
  return std::nullopt;
}

TransformationTriple transformation(const Jet& g, const Jet& f, int k) {
  auto t = try_transformation(g, f, k);
  if (!t) throw MathError("not equivalent up to degree " + std::to_string(k));
  return *t;
}

}  // namespace germforge
