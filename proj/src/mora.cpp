#include "germforge/mora.hpp"

#include "germforge/errors.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace germforge {

namespace {

struct Lead {
  Monomial lm;
  Rational lc;
  unsigned ecart;
};

Lead lead_of(const Jet& f, const MonomialOrder& ord) {
  auto [m, c] = f.leading_term(ord);
  return {m, c, f.degree() - m.degree()};
}

Jet normalized(const Jet& f, const MonomialOrder& ord) { return f.scaled(1 / f.leading_term(ord).second); }

/// Mora weak normal form without bookkeeping, used during completion.
Jet weak_normal_form(Jet h, const std::vector<Jet>& basis, const MonomialOrder& ord) {
  std::vector<Jet> T = basis;
  std::vector<Lead> leads;
  for (const auto& t : T) leads.push_back(lead_of(t, ord));
  while (!h.is_zero()) {
    const Lead lh = lead_of(h, ord);
    std::size_t best = T.size();
    for (std::size_t i = 0; i < T.size(); ++i)
      if (leads[i].lm.divides(lh.lm) && (best == T.size() || leads[i].ecart < leads[best].ecart)) best = i;
    if (best == T.size()) break;
    if (ord.is_local() && leads[best].ecart > lh.ecart) {
      T.push_back(h);
      leads.push_back(lh);
    }
    const Jet& t = T[best];
    const Lead lt = leads[best];
    h.add_multiple(t, lt.lm.quotient_of(lh.lm), -(lh.lc / lt.lc));
  }
  return h;
}

Jet prepared(const Jet& f, int k) { return k >= Jet::kExact ? f : f.truncated(k); }

}  // namespace

// ---- division -------------------------------------------------------------------

DivisionResult mora_divide(const Jet& g, const std::vector<Jet>& divisors, const MonomialOrder& ord, int k) {
  if (divisors.empty()) throw std::invalid_argument("division needs at least one divisor");
  if (ord.is_local() && k >= Jet::kExact && !g.exact()) k = g.truncation();
  std::vector<Jet> G;
  for (const auto& d : divisors) {
    G.push_back(prepared(d, k));
    if (G.back().is_zero()) throw std::invalid_argument("zero divisor in division");
  }
  Jet h = prepared(g, k);
  const VarList& vars = h.vars();
  const int kk = std::min(k, h.truncation());

  DivisionResult res;
  res.unit = Jet::constant(vars, 1, kk);
  res.quotients.assign(G.size(), Jet(vars, kk));

  // Intermediate divisors carry their representation u*g = sum q*G + t.
  struct Elem {
    Jet t;
    Lead lead;
    int original;
    Jet unit;
    std::vector<Jet> q;
  };
  std::vector<Elem> T;
  for (std::size_t i = 0; i < G.size(); ++i) T.push_back({G[i], lead_of(G[i], ord), static_cast<int>(i), {}, {}});

  while (!h.is_zero()) {
    const Lead lh = lead_of(h, ord);
    std::size_t best = T.size();
    for (std::size_t i = 0; i < T.size(); ++i)
      if (T[i].lead.lm.divides(lh.lm) && (best == T.size() || T[i].lead.ecart < T[best].lead.ecart)) best = i;
    if (best == T.size()) break;
    if (ord.is_local() && T[best].lead.ecart > lh.ecart) T.push_back({h, lh, -1, res.unit, res.quotients});
    const Elem& e = T[best];
    const Monomial m = e.lead.lm.quotient_of(lh.lm);
    const Rational c = lh.lc / e.lead.lc;
    h.add_multiple(e.t, m, -c);
    if (e.original >= 0) {
      res.quotients[e.original].add_term(m, c);
    } else {
      res.unit.add_multiple(e.unit, m, -c);
      for (std::size_t i = 0; i < G.size(); ++i) res.quotients[i].add_multiple(e.q[i], m, -c);
    }
  }

  // Tail: reduce by the original divisors, collecting irreducible terms.
  res.remainder = Jet(vars, h.truncation());
  while (!h.is_zero()) {
    const auto [lm, lc] = h.leading_term(ord);
    std::size_t i = 0;
    while (i < G.size() && !T[i].lead.lm.divides(lm)) ++i;
    if (i == G.size()) {
      res.remainder.add_term(lm, lc);
      h.add_term(lm, -lc);
      continue;
    }
    const Monomial m = T[i].lead.lm.quotient_of(lm);
    const Rational c = lc / T[i].lead.lc;
    h.add_multiple(G[i], m, -c);
    res.quotients[i].add_term(m, c);
  }
  return res;
}

// ---- completion -------------------------------------------------------------------

namespace detail {

Jet reduce_full(const Jet& f, const std::vector<Jet>& basis, const MonomialOrder& ord) {
  if (ord.is_local() && f.exact() && !f.is_zero() && !f.is_constant())
    throw std::logic_error("full reduction in a local order needs a truncated jet");
  std::vector<std::pair<Monomial, Rational>> leads;
  for (const auto& b : basis) leads.push_back(b.leading_term(ord));
  Jet h = f;
  Jet r(f.vars(), f.truncation());
  while (!h.is_zero()) {
    const auto [lm, lc] = h.leading_term(ord);
    std::size_t i = 0;
    while (i < basis.size() && !leads[i].first.divides(lm)) ++i;
    if (i == basis.size()) {
      r.add_term(lm, lc);
      h.add_term(lm, -lc);
      continue;
    }
    h.add_multiple(basis[i], leads[i].first.quotient_of(lm), -(lc / leads[i].second));
  }
  return r;
}

std::vector<Jet> complete_basis(std::vector<Jet> input, const MonomialOrder& ord) {
  std::vector<Jet> S;
  std::vector<Monomial> lms;
  for (auto& g : input)
    if (!g.is_zero()) {
      S.push_back(normalized(g, ord));
      lms.push_back(S.back().leading_monomial(ord));
    }
  if (S.empty()) return {};
  const bool global = !ord.is_local();

  // Pending pairs; normal selection takes the pair whose lcm comes first in
  // degree, with ties broken by the order.
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::set<std::pair<std::size_t, std::size_t>> done;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) pending.insert({i, j});
  };
  for (std::size_t j = 1; j < S.size(); ++j) add_pairs(j);

  auto chain_skip = [&](std::size_t i, std::size_t j, const Monomial& l) {
    for (std::size_t t = 0; t < S.size(); ++t) {
      if (t == i || t == j || !lms[t].divides(l)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (!pending.count(key(i, t)) && !pending.count(key(j, t))) return true;
    }
    return false;
  };

  while (!pending.empty()) {
    auto pick = pending.begin();
    Monomial pick_lcm = lcm(lms[pick->first], lms[pick->second]);
    for (auto it = std::next(pending.begin()); it != pending.end(); ++it) {
      Monomial l = lcm(lms[it->first], lms[it->second]);
      if (l.degree() < pick_lcm.degree() || (l.degree() == pick_lcm.degree() && ord.compare(l, pick_lcm) < 0)) {
        pick = it;
        pick_lcm = l;
      }
    }
    const auto [i, j] = *pick;
    pending.erase(pick);
    if (global && (lms[i].coprime(lms[j]) || chain_skip(i, j, pick_lcm))) {
      done.insert({i, j});
      continue;
    }
    Jet sp(S[i].vars(), std::min(S[i].truncation(), S[j].truncation()));
    sp.add_multiple(S[i], lms[i].quotient_of(pick_lcm), 1);
    sp.add_multiple(S[j], lms[j].quotient_of(pick_lcm), -1);
    done.insert({i, j});
    Jet h = weak_normal_form(sp, S, ord);
    if (h.is_zero()) continue;
    S.push_back(normalized(h, ord));
    lms.push_back(S.back().leading_monomial(ord));
    add_pairs(S.size() - 1);
  }

  // Minimal basis: drop elements whose leading monomial is divisible by another's.
  std::vector<Jet> minimal;
  for (std::size_t i = 0; i < S.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < S.size() && !redundant; ++j) {
      if (i == j || !lms[j].divides(lms[i])) continue;
      redundant = lms[j] != lms[i] || j < i;
    }
    if (!redundant) minimal.push_back(S[i]);
  }
  // Tail reduction; reduction by the element itself (with a non-constant
  // multiplier) is allowed, which keeps the element in the ideal.
  std::vector<Jet> reduced;
  for (const auto& s : minimal) {
    auto [lm, lc] = s.leading_term(ord);
    Jet tail = s;
    tail.add_term(lm, -lc);
    Jet r = reduce_full(tail, minimal, ord);
    r.add_term(lm, lc);
    reduced.push_back(normalized(r, ord));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Jet& a, const Jet& b) {
    return ord.greater(a.leading_monomial(ord), b.leading_monomial(ord));
  });
  return reduced;
}

}  // namespace detail

// ---- StandardBasis ------------------------------------------------------------------

StandardBasis::StandardBasis(VarList vars, std::vector<Jet> generators, MonomialOrder order, int truncation,
                             RingMode mode, Certification cert)
    : gens_(std::move(generators)),
      order_(std::move(order)),
      trunc_(truncation),
      mode_(mode),
      cert_(cert),
      vars_(std::move(vars)) {
  for (const auto& g : gens_) lms_.push_back(g.leading_monomial(order_));
}

std::vector<std::string> StandardBasis::warnings() const {
  if (cert_ == Certification::Insufficient)
    return {"The truncation degree is not sufficiently high and thus, the following results might be wrong."};
  return {};
}

std::vector<Monomial> StandardBasis::leading_monomials() const { return lms_; }

bool StandardBasis::in_leading_ideal(const Monomial& m) const {
  if (trunc_ < Jet::kExact && static_cast<int>(m.degree()) > trunc_) return true;
  return std::any_of(lms_.begin(), lms_.end(), [&](const Monomial& l) { return l.divides(m); });
}

Jet StandardBasis::normal_form(const Jet& f) const {
  Jet g = f;
  if (trunc_ < Jet::kExact) g = f.truncated(trunc_);
  if (!(g.vars() == vars_) && !gens_.empty()) g = g.embedded(vars_);
  return detail::reduce_full(g, gens_, order_);
}

std::optional<std::size_t> StandardBasis::codimension() const {
  const std::size_t n = vars_.size();
  if (std::any_of(lms_.begin(), lms_.end(), [](const Monomial& l) { return l.is_one(); })) return 0;
  for (std::size_t v = 0; v < n; ++v) {
    bool found = false;
    for (const auto& l : lms_)
      if (l.degree() == l[v] && l[v] > 0) found = true;
    if (!found) return std::nullopt;
  }
  return normal_set().size();
}

std::vector<Monomial> StandardBasis::normal_set() const {
  const std::size_t n = vars_.size();
  std::vector<Monomial> out;
  if (std::any_of(lms_.begin(), lms_.end(), [](const Monomial& l) { return l.is_one(); })) return out;
  unsigned maxdeg = 0;
  for (std::size_t v = 0; v < n; ++v) {
    unsigned pure = 0;
    for (const auto& l : lms_)
      if (l.degree() == l[v] && l[v] > 0 && (pure == 0 || l[v] < pure)) pure = l[v];
    if (pure == 0) throw InfiniteCodimension();
    maxdeg += pure - 1;
  }
  if (trunc_ < Jet::kExact) maxdeg = std::min<unsigned>(maxdeg, trunc_);
  for (const auto& m : monomials_up_to(n, maxdeg))
    if (!in_leading_ideal(m)) out.push_back(m);
  std::sort(out.begin(), out.end(), order_.descending());
  return out;
}

Matrix StandardBasis::mult_matrix(const Jet& u, const std::vector<Monomial>& basis_in) const {
  const auto ns = normal_set();
  std::vector<Monomial> basis = basis_in.empty() ? ns : basis_in;
  {
    auto a = basis, b = ns;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) throw std::invalid_argument("the basis must be a permutation of the normal set");
  }
  const std::size_t n = basis.size();
  Matrix M(n, n);
  std::map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index[basis[i]] = i;
  const Jet uu = u.vars() == vars_ ? u : u.embedded(vars_);
  for (std::size_t j = 0; j < n; ++j) {
    Jet img = normal_form(uu.times_monomial(basis[j]));
    for (const auto& [m, c] : img.terms()) M(index.at(m), j) = c;
  }
  return M;
}

StandardBasis standard_basis(const std::vector<Jet>& G, const MonomialOrder& ord, int k) {
  if (G.empty()) throw std::invalid_argument("standard basis of an empty generator list");
  if (!ord.is_local()) {
    std::vector<Jet> in;
    for (const auto& g : G) in.push_back(prepared(g, k));
    return StandardBasis(G.front().vars(), detail::complete_basis(in, ord), ord, k, RingMode::Polynomial,
                         Certification::Certified);
  }
  if (k >= Jet::kExact) throw std::invalid_argument("a truncation degree is required in the local ring");
  std::vector<Jet> gk;
  bool next_available = true;
  for (const auto& g : G) {
    if (g.truncation() < k) throw std::invalid_argument("input jets are truncated below the requested degree");
    gk.push_back(g.truncated(k));
    if (g.truncation() < k + 1) next_available = false;
  }
  auto basis = detail::complete_basis(gk, ord);
  Certification cert = Certification::Unchecked;
  if (next_available) {
    std::vector<Jet> g1;
    for (const auto& g : G) g1.push_back(g.truncated(k + 1));
    StandardBasis next(G.front().vars(), detail::complete_basis(g1, ord), ord, k + 1, RingMode::Fractional,
                       Certification::Unchecked);
    cert = Certification::Certified;
    for (const auto& m : monomials_of_degree(ord.nvars(), k + 1))
      if (!next.in_leading_ideal(m)) {
        cert = Certification::Insufficient;
        break;
      }
  }
  return StandardBasis(G.front().vars(), std::move(basis), ord, k, RingMode::Fractional, cert);
}

bool ideal_membership(const Jet& f, const StandardBasis& B) { return B.contains(f); }

std::vector<Monomial> normal_set(const std::vector<Jet>& I, int k) {
  return standard_basis(I, MonomialOrder::local(I.at(0).nvars()), k).normal_set();
}

std::optional<std::size_t> codimension(const std::vector<Jet>& I, int k) {
  return standard_basis(I, MonomialOrder::local(I.at(0).nvars()), k).codimension();
}

Matrix mult_matrix(const std::vector<Jet>& A, const Jet& u, int k, const std::vector<Monomial>& basis) {
  return standard_basis(A, MonomialOrder::local(A.at(0).nvars()), k).mult_matrix(u, basis);
}

}  // namespace germforge
