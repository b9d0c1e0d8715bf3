#include "germforge/groebner.hpp"

#include "germforge/errors.hpp"
#include "germforge/mora.hpp"

#include <stdexcept>

namespace germforge {

std::vector<Jet> buchberger(const std::vector<Jet>& G, const MonomialOrder& ord) {
  if (ord.is_local()) throw std::invalid_argument("buchberger needs a global order");
  std::vector<Jet> in;
  for (const auto& g : G) {
    if (!g.exact()) throw std::invalid_argument("buchberger needs polynomial inputs");
    in.push_back(g);
  }
  return detail::complete_basis(in, ord);
}

Jet exact_quotient(const Jet& f, const Jet& g) {
  if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
  auto res = mora_divide(f.as_exact(), {g.as_exact()}, MonomialOrder::graded(f.nvars()), Jet::kExact);
  if (!res.remainder.is_zero()) throw MathError("inexact polynomial division");
  return res.quotients.front();
}

std::vector<Jet> power_of_maximal_ideal(const VarList& vars, unsigned degree) {
  std::vector<Jet> out;
  for (const auto& m : monomials_of_degree(vars.size(), degree)) out.push_back(Jet::term(vars, m));
  return out;
}

namespace {

std::vector<Jet> with_power(const std::vector<Jet>& I, int k) {
  std::vector<Jet> out;
  for (const auto& f : I) out.push_back(k >= Jet::kExact ? f.as_exact() : f.truncated(k).as_exact());
  if (k < Jet::kExact) {
    auto mk = power_of_maximal_ideal(I.at(0).vars(), k + 1);
    out.insert(out.end(), mk.begin(), mk.end());
  }
  return out;
}

/// Global intersection by the t-trick: t*I + (1-t)*J, eliminating t.
std::vector<Jet> global_intersection(const std::vector<Jet>& I, const std::vector<Jet>& J) {
  const VarList& vars = I.at(0).vars();
  std::string t = "t";
  while (vars.index_of(t)) t += "_";
  const VarList ext = VarList(std::vector<std::string>{t}).extended(vars.names());
  const Jet T = Jet::variable(ext, 0);
  const Jet one = Jet::constant(ext, 1);
  std::vector<Jet> gens;
  for (const auto& f : I) gens.push_back(T * f.embedded(ext));
  for (const auto& g : J) gens.push_back((one - T) * g.embedded(ext));
  auto gb = buchberger(gens, MonomialOrder::elimination(ext.size(), {0}));
  std::vector<Jet> out;
  for (const auto& h : gb)
    if (!h.depends_on(0)) out.push_back(h.embedded(vars));
  return out;
}

std::vector<Jet> finish(const std::vector<Jet>& gens, const VarList& vars, int k) {
  if (gens.empty()) return {};
  if (k >= Jet::kExact) return buchberger(gens, MonomialOrder::graded(vars.size()));
  std::vector<Jet> jets;
  for (const auto& g : gens) jets.push_back(g.truncated(k));
  return standard_basis(jets, MonomialOrder::local(vars.size()), k).generators();
}

}  // namespace

std::vector<Jet> ideal_intersection(const std::vector<Jet>& I, const std::vector<Jet>& J, int k) {
  if (I.empty() || J.empty()) throw std::invalid_argument("intersection of an empty generator list");
  return finish(global_intersection(with_power(I, k), with_power(J, k)), I.front().vars(), k);
}

std::vector<Jet> colon_ideal(const std::vector<Jet>& I, const Jet& g, int k) {
  if (I.empty()) throw std::invalid_argument("colon of an empty generator list");
  if (g.is_zero()) throw std::invalid_argument("colon by the zero germ");
  const Jet gg = k >= Jet::kExact ? g.as_exact() : g.truncated(k).as_exact();
  if (gg.is_zero()) return finish({Jet::constant(g.vars(), 1)}, g.vars(), k);
  std::vector<Jet> quotients;
  for (const auto& h : global_intersection(with_power(I, k), {gg})) quotients.push_back(exact_quotient(h, gg));
  return finish(quotients, g.vars(), k);
}

}  // namespace germforge
