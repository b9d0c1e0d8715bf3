#include "germforge/polytools.hpp"

#include "germforge/errors.hpp"
#include "germforge/groebner.hpp"
#include "germforge/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace germforge {

Jet canonical(const Jet& p) {
  if (p.is_zero()) return p.as_exact();
  mpz_class num = 0, den = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  const auto lead = p.leading_term(MonomialOrder::lex(p.nvars())).second;
  if (sgn(lead) < 0) scale = -scale;
  return p.as_exact().scaled(scale);
}

Jet poly_gcd(const Jet& a, const Jet& b) {
  if (a.is_zero()) return canonical(b);
  if (b.is_zero()) return canonical(a);
  if (a.is_constant() || b.is_constant()) return Jet::constant(a.vars(), 1);
  // lcm generates <a> intersected with <b>
  const auto lcm = ideal_intersection({a.as_exact()}, {b.as_exact()}, Jet::kExact);
  if (lcm.size() != 1) throw MathError("intersection of principal ideals is not principal");
  return canonical(exact_quotient(a.as_exact() * b.as_exact(), lcm.front()));
}

Jet squarefree_part(const Jet& p) {
  if (p.is_zero() || p.is_constant()) return canonical(p);
  Jet g = p.as_exact();
  for (std::size_t v = 0; v < p.nvars() && !g.is_constant(); ++v)
    if (p.depends_on(v)) g = poly_gcd(g, p.derivative(v).as_exact());
  return canonical(g.is_constant() ? p.as_exact() : exact_quotient(p.as_exact(), g));
}

Jet poly_gcd(const std::vector<Jet>& ps) {
  if (ps.empty()) return Jet();
  Jet g = canonical(ps.front());
  for (std::size_t i = 1; i < ps.size() && !g.is_constant(); ++i) g = poly_gcd(g, ps[i]);
  return g;
}

Jet to_elementary(const Jet& P, std::size_t a, std::size_t b) {
  const std::size_t n = P.nvars();
  std::vector<std::size_t> prec{a, b};
  for (std::size_t i = 0; i < n; ++i)
    if (i != a && i != b) prec.push_back(i);
  const MonomialOrder lex(OrderKind::Lex, prec);
  const VarList& vars = P.vars();
  const Jet e1 = Jet::variable(vars, a) + Jet::variable(vars, b);
  const Jet e2 = Jet::variable(vars, a) * Jet::variable(vars, b);
  Jet rest = P.as_exact();
  Jet out(vars);
  while (!rest.is_zero()) {
    const auto [lm, c] = rest.leading_term(lex);
    const unsigned p = lm[a], q = lm[b];
    if (p < q) throw std::invalid_argument("polynomial is not symmetric in the given variables");
    Monomial other = lm;
    other.set(a, 0);
    other.set(b, 0);
    Monomial target = other;
    target.set(a, p - q);
    target.set(b, q);
    out.add_term(target, c);
    rest -= (e1.pow(p - q) * e2.pow(q)).times_monomial(other, c);
  }
  return out;
}

std::vector<Jet> eliminate(const std::vector<Jet>& F, const std::vector<std::string>& drop) {
  if (F.empty()) return {};
  const VarList& vars = F.front().vars();
  std::vector<std::size_t> idx;
  for (const auto& d : drop) idx.push_back(vars.require(d));
  std::vector<std::string> keep;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(vars[i]);
  const VarList rest(keep);

  std::vector<Jet> in;
  for (const auto& f : F) {
    if (!f.exact()) throw std::invalid_argument("elimination needs polynomial inputs");
    if (!f.is_zero()) in.push_back(f);
  }
  if (in.empty()) return {};
  const auto gb = buchberger(in, MonomialOrder::elimination(vars.size(), idx));
  std::vector<Jet> out;
  for (const auto& g : gb) {
    if (std::any_of(idx.begin(), idx.end(), [&](std::size_t v) { return g.depends_on(v); })) continue;
    Jet h = squarefree_part(g.embedded(rest));
    if (std::none_of(out.begin(), out.end(), [&](const Jet& o) { return o == h; })) out.push_back(std::move(h));
  }
  return out;
}

}  // namespace germforge
