#include "germforge/normalform.hpp"

#include "germforge/errors.hpp"
#include "germforge/intrinsic.hpp"
#include "germforge/order.hpp"
#include "germforge/tangent.hpp"
#include "germforge/transform.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace germforge {

namespace {

constexpr std::size_t kMaxPermutedTerms = 5;

struct Eliminator {
  IntrinsicIdeal p;
  int k;
  std::map<std::pair<std::string, Monomial>, bool> memo;

  bool removable(const Jet& h, const Monomial& m) {
    const auto key = std::make_pair(h.to_string(), m);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Jet cand = h;
    cand.add_term(m, -h.coeff(m));
    const bool ok = try_transformation(h, cand, k + 1, &p).has_value();
    memo.emplace(key, ok);
    return ok;
  }

  Jet run(Jet h, const std::vector<Monomial>& order) {
    for (const auto& m : order) {
      if (sgn(h.coeff(m)) == 0) continue;
      if (removable(h, m)) h.add_term(m, -h.coeff(m));
    }
    return h;
  }
};

Jet scale_generators(const Jet& h, const std::vector<Monomial>& gens) {
  std::vector<std::pair<Monomial, Rational>> conds;
  for (const auto& m : gens) {
    const Rational c = h.coeff(m);
    if (sgn(c) != 0) conds.emplace_back(m, 1 / abs(c));
  }
  if (conds.empty()) return h;
  const auto s = solve_scaling(conds);
  return s ? apply_scaling(h, *s) : h;
}

bool before(const Jet& a, const Jet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.to_string() < b.to_string();
}

}  // namespace

std::vector<Jet> normal_forms(const Jet& g, int k, bool list) {
  if (g.nvars() != 2) throw std::invalid_argument("normal forms need the variables (x, lambda)");
  const Jet gk = g.truncated(k);
  Eliminator el{high_order_terms(gk, k), k, {}};
  const Jet h = el.p.strip(gk);
  const auto gens = smallest_intrinsic(h).generators();
  const std::set<Monomial> gen_set(gens.begin(), gens.end());

  const auto local = MonomialOrder::local(2);
  std::vector<Monomial> inter;
  for (const auto& [m, c] : h.terms())
    if (!gen_set.count(m)) inter.push_back(m);
  // ascending local order: the smallest (highest degree) term first
  std::sort(inter.begin(), inter.end(), [&](const Monomial& a, const Monomial& b) { return local.greater(b, a); });

  std::vector<std::vector<Monomial>> orders{inter};
  if (list && inter.size() > 1) {
    if (inter.size() <= kMaxPermutedTerms) {
      auto perm = inter;
      while (std::next_permutation(perm.begin(), perm.end(), [&](const Monomial& a, const Monomial& b) {
        return local.greater(b, a);
      }))
        orders.push_back(perm);
    } else {
      for (std::size_t r = 1; r < inter.size(); ++r) {
        auto rot = inter;
        std::rotate(rot.begin(), rot.begin() + static_cast<std::ptrdiff_t>(r), rot.end());
        orders.push_back(std::move(rot));
      }
      orders.emplace_back(inter.rbegin(), inter.rend());
    }
  }

  std::vector<Jet> out;
  for (const auto& ord : orders) {
    const Jet f = scale_generators(el.run(h, ord), gens);
    if (std::none_of(out.begin(), out.end(), [&](const Jet& o) { return o == f; })) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), before);
  if (!list) return {out.front()};
  const std::size_t best = out.front().size();
  out.erase(std::remove_if(out.begin(), out.end(), [&](const Jet& f) { return f.size() != best; }), out.end());
  return out;
}

std::vector<std::string> normal_form_ring_warnings(const GermExpr& g, const VarList& vars, int k, Ring ring) {
  if (ring != Ring::Polynomial || polynomial_ring_suitable(g, vars, k)) return {};
  return {"Warning: The polynomial germ ring is not suitable for normal form computations.",
          "Suggestion: Use the command Verify to find the appropriate computational ring.",
          "The following output might be wrong."};
}

int resolve_degree(const GermExpr& g, const VarList& vars, std::optional<int> degree) {
  if (degree) {
    if (*degree < 1) throw std::invalid_argument("the truncation degree must be positive");
    return *degree;
  }
  const VerifyReport r = verify_germ(g, vars);
  if (!r.truncation_degree) throw InfiniteCodimension("no sufficient truncation degree found: " + r.warnings.front());
  return *r.truncation_degree;
}

NormalFormResult normal_form(const GermExpr& g, const VarList& vars, const NormalFormOptions& opts) {
  NormalFormResult r;
  r.degree = resolve_degree(g, vars, opts.degree);
  r.warnings = normal_form_ring_warnings(g, vars, r.degree, opts.ring);
  r.forms = normal_forms(taylor_expand(g, vars, r.degree), r.degree, opts.list);
  return r;
}

}  // namespace germforge
