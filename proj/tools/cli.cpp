#include "cli.hpp"

#include "germforge/bifurcation.hpp"
#include "germforge/errors.hpp"
#include "germforge/expr.hpp"
#include "germforge/groebner.hpp"
#include "germforge/intrinsic.hpp"
#include "germforge/mora.hpp"
#include "germforge/normalform.hpp"
#include "germforge/recognition.hpp"
#include "germforge/tangent.hpp"
#include "germforge/transform.hpp"
#include "germforge/transition.hpp"
#include "germforge/unfolding.hpp"
#include "germforge/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace germforge::cli {

namespace {

using nlohmann::json;

/// Usage errors detected after parsing (exit code 2).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::vector<std::string> germs;
  std::string vars = "x,lambda";
  std::string params;
  std::optional<int> degree;
  std::string ring = "fractional";
  bool list = false;
  bool normalform = false;
  std::string plot;
  std::string format = "text";
  std::string box;
  std::size_t grid = 41;
  std::string window;
  std::optional<std::size_t> resolution;
  std::string granularity = "complete";
  std::string boundary;
  std::optional<int> upper_bound;
  std::string mode = "germ";
  std::string by;
  std::vector<std::string> span;
  std::optional<std::size_t> unfolding;
  std::string fix;
  bool vertical = false;
  bool horizontal = false;
  bool infinite = false;
};

struct Output {
  json result = json::object();
  std::vector<std::string> warnings;
  std::string text;
  bool failed = false;  // no result (exit 1), output still printed
};

// ---- input helpers ----------------------------------------------------------------

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty() || !out.empty()) out.push_back(cur);
  for (const auto& v : out)
    if (v.empty()) throw UsageError("empty entry in list '" + s + "'");
  return out;
}

/// "1/2", "-3", "0.25".
Rational parse_number(const std::string& s) {
  const auto dot = s.find('.');
  if (dot == std::string::npos) return parse_rational(s);
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  if (digits.empty() || digits == "-" || digits == "+") throw UsageError("invalid number '" + s + "'");
  Rational q = parse_rational(digits);
  q /= power(Rational(10), static_cast<int>(s.size() - dot - 1));
  return q;
}

std::vector<Rational> parse_numbers(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& t : split_list(s)) {
    try {
      out.push_back(parse_number(t));
    } catch (const std::invalid_argument&) {
      throw UsageError("invalid number '" + t + "'");
    }
  }
  return out;
}

std::vector<Interval> parse_intervals(const std::string& s, std::size_t count, const std::string& flag) {
  const auto v = parse_numbers(s);
  if (v.size() != 2 * count)
    throw UsageError(flag + " needs " + std::to_string(2 * count) + " numbers (lo,hi per axis)");
  std::vector<Interval> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (v[2 * i] > v[2 * i + 1]) throw UsageError(flag + ": lower end exceeds upper end");
    out.push_back({v[2 * i], v[2 * i + 1]});
  }
  return out;
}

struct Context {
  const Options& opt;
  VarList xl;                       // state variable and distinguished parameter
  std::vector<std::string> params;  // unfolding parameters
  VarList all;                      // xl followed by params
  int upper_bound;

  explicit Context(const Options& o) : opt(o) {
    const auto v = split_list(o.vars);
    if (v.size() != 2) throw UsageError("--vars needs exactly two names");
    if (v[0] == v[1]) throw UsageError("--vars names must differ");
    xl = VarList(v);
    if (!o.params.empty()) params = split_list(o.params);
    std::vector<std::string> names = v;
    for (const auto& p : params) {
      if (std::find(names.begin(), names.end(), p) != names.end())
        throw UsageError("parameter '" + p + "' repeats a variable or parameter");
      names.push_back(p);
    }
    all = VarList(names);
    upper_bound = o.upper_bound ? *o.upper_bound : default_upper_bound();
    if (upper_bound < 1) throw UsageError("--upper-bound must be positive");
    if (o.degree && (*o.degree < 1 || *o.degree > upper_bound))
      throw UsageError("--degree must lie in 1.." + std::to_string(upper_bound));
  }

  GermExpr germ(std::size_t i, const VarList& vars) const { return parse_germ(opt.germs.at(i), vars); }
  std::vector<GermExpr> germs(const VarList& vars) const {
    std::vector<GermExpr> out;
    for (const auto& s : opt.germs) out.push_back(parse_germ(s, vars));
    return out;
  }
  Ring ring() const { return parse_ring(opt.ring); }
};

void need_germs(const Options& o, std::size_t min, std::size_t max) {
  if (o.germs.size() < min || o.germs.size() > max) {
    if (min == max)
      throw UsageError("expected " + std::to_string(min) + " germ argument" + (min == 1 ? "" : "s"));
    throw UsageError("expected at least " + std::to_string(min) + " germ argument" + (min == 1 ? "" : "s"));
  }
}

void need_params(const Context& c) {
  if (c.params.empty()) throw UsageError("--params is required for this command");
}

// ---- output helpers ---------------------------------------------------------------

std::string monomial_text(const Monomial& m, const VarList& vars) { return Jet::term(vars, m).to_string(); }

json monomial_list(const std::vector<Monomial>& ms, const VarList& vars) {
  json a = json::array();
  for (const auto& m : ms) a.push_back(monomial_text(m, vars));
  return a;
}

std::string bracket(const std::vector<std::string>& items) {
  std::string s = "[";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
  return s + "]";
}

std::string bracket_monomials(const std::vector<Monomial>& ms, const VarList& vars) {
  std::vector<std::string> items;
  for (const auto& m : ms) items.push_back(monomial_text(m, vars));
  return bracket(items);
}

std::string bracket_jets(const std::vector<Jet>& js) {
  std::vector<std::string> items;
  for (const auto& j : js) items.push_back(j.to_string());
  return bracket(items);
}

json jet_list(const std::vector<Jet>& js) {
  json a = json::array();
  for (const auto& j : js) a.push_back(j.to_string());
  return a;
}

json ideal_json(const IntrinsicIdeal& I) {
  json blocks = json::array();
  for (const auto& b : I.blocks()) blocks.push_back({{"k", b.k}, {"l", b.l}});
  return {{"ideal", I.to_string()}, {"blocks", blocks}};
}

std::string warnings_text(const std::vector<std::string>& ws) {
  std::string s;
  for (const auto& w : ws) s += w + "\n";
  return s;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << content;
}

// ---- germ commands ----------------------------------------------------------------

void cmd_verify(const Context& c, Output& out) {
  VerifyReport r;
  if (c.opt.mode == "germ") {
    need_germs(c.opt, 1, 1);
    r = verify_germ(c.germ(0, c.xl), c.xl, c.upper_bound);
  } else if (c.opt.mode == "ideal") {
    need_germs(c.opt, 1, SIZE_MAX);
    r = verify_ideal(c.germs(c.xl), c.xl, c.upper_bound);
  } else if (c.opt.mode == "persistent") {
    need_germs(c.opt, 1, 1);
    r = verify_persistent(c.germ(0, c.all), c.all, c.upper_bound);
  } else {
    throw UsageError("--mode must be germ, ideal or persistent");
  }
  json rings = json::array();
  for (Ring ring : r.permissible_rings) rings.push_back(ring_keyword(ring));
  out.result = {{"mode", c.opt.mode}, {"rings", rings}};
  out.result["truncation_degree"] = r.truncation_degree ? json(*r.truncation_degree) : json(nullptr);
  out.result["recommended"] = r.truncation_degree ? json(ring_keyword(r.recommended)) : json(nullptr);
  out.warnings = r.warnings;
  out.text = r.to_text();
  out.failed = !r.truncation_degree;
}

void cmd_normalform(const Context& c, Output& out) {
  need_germs(c.opt, 1, 1);
  NormalFormOptions o;
  o.degree = c.opt.degree;
  o.ring = c.ring();
  o.list = c.opt.list;
  const NormalFormResult r = normal_form(c.germ(0, c.xl), c.xl, o);
  out.warnings = r.warnings;
  out.result = {{"degree", r.degree}, {"forms", jet_list(r.forms)}};
  out.text = warnings_text(r.warnings);
  for (const auto& f : r.forms) out.text += f.to_string() + "\n";
}

json unfolding_json(const UnfoldingGerm& u) {
  const VarList xl{u.state_var, u.dist_param};
  return {{"germ", u.to_string()},
          {"base", u.base.to_string()},
          {"params", u.params},
          {"directions", monomial_list(u.directions, xl)}};
}

void cmd_unfolding(const Context& c, Output& out) {
  need_germs(c.opt, 1, 1);
  UnfoldingOptions o;
  o.degree = c.opt.degree;
  o.ring = c.ring();
  o.normalform = c.opt.normalform;
  o.list = c.opt.list;
  const UnfoldingResult r = universal_unfolding(c.germ(0, c.xl), c.xl, o);
  out.warnings = r.warnings;
  json list = json::array();
  for (const auto& u : r.unfoldings) list.push_back(unfolding_json(u));
  out.result = {{"degree", r.degree}, {"unfoldings", list}};
  out.text = warnings_text(r.warnings);
  for (const auto& u : r.unfoldings) out.text += u.to_string() + "\n";
}

std::vector<std::string> condition_names(const std::vector<Monomial>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(derivative_symbol("f", m, false));
  return out;
}

void cmd_recognize(const Context& c, Output& out) {
  need_germs(c.opt, 1, 1);
  const GermExpr g = c.germ(0, c.xl);
  if (!c.opt.unfolding) {
    const RecognitionConditions r = recognition_normal_form(g, c.xl, c.opt.degree);
    out.result = {{"zero", condition_names(r.zero)}, {"nonzero", condition_names(r.nonzero)}, {"notes", r.notes}};
    out.text = r.to_string();
    return;
  }
  const RecognitionMatrix m = recognition_unfolding(g, c.xl, *c.opt.unfolding, c.opt.degree);
  const VarList xl{"x", "lambda"};
  json rows = json::array();
  for (const auto& row : m.entries) {
    json r = json::array();
    for (const auto& e : row) {
      if (e.is_zero()) {
        r.push_back(nullptr);
        continue;
      }
      r.push_back({{"coeff", e.coeff.get_str()},
                   {"function", e.unfolding ? "G" : "g"},
                   {"x", e.derivative[0]},
                   {"lambda", e.derivative[1]},
                   {"alpha", e.alpha}});
    }
    rows.push_back(r);
  }
  out.result = {{"columns", monomial_list(m.columns, xl)}, {"rows", m.rows}, {"entries", rows}};
  out.text = m.to_string();
}

void cmd_check_universal(const Context& c, Output& out) {
  need_germs(c.opt, 1, 1);
  need_params(c);
  const bool yes = check_universal(c.germ(0, c.all), c.all, c.opt.degree);
  out.result = {{"universal", yes}};
  out.text = yes ? "Yes\n" : "No\n";
}

void cmd_transform(const Context& c, Output& out) {
  need_germs(c.opt, 2, 2);
  const GermExpr g = c.germ(0, c.xl), f = c.germ(1, c.xl);
  const int k = c.opt.degree ? *c.opt.degree : resolve_degree(f, c.xl, std::nullopt);
  const Jet gj = taylor_expand(g, c.xl, k), fj = taylor_expand(f, c.xl, k);
  const TransformationTriple t = transformation(gj, fj, k);
  out.result = {{"degree", k},
                {"X", t.X.to_string()},
                {"Lambda", t.Lambda.to_string()},
                {"S", t.S.to_string()},
                {"residual_in_M^k", transformation_residual(gj, fj, t, k).is_zero()}};
  out.text = t.to_text();
}

// ---- local algebra commands -------------------------------------------------------

/// Requested degree; exact computation for polynomial input when `exact_ok`;
/// otherwise the ideal-mode verify degree of `basis`.
int algebra_degree(const Context& c, const std::vector<GermExpr>& exprs, const std::vector<GermExpr>& basis,
                   Output& out, bool exact_ok = false) {
  if (c.opt.degree) return *c.opt.degree;
  if (exact_ok && std::all_of(exprs.begin(), exprs.end(), [](const GermExpr& e) { return e.is_polynomial(); }))
    return Jet::kExact;
  const VerifyReport r = verify_ideal(basis, c.xl, c.upper_bound);
  if (!r.truncation_degree) throw MathError(r.warnings.empty() ? "no truncation degree found" : r.warnings.back());
  out.warnings.push_back("Using truncation degree " + std::to_string(*r.truncation_degree) + ".");
  return *r.truncation_degree;
}

Jet jet_of(const GermExpr& e, const VarList& vars, int k) {
  return k == Jet::kExact ? expand_polynomial(e, vars) : taylor_expand(e, vars, k);
}

std::vector<Jet> jets_of(const std::vector<GermExpr>& es, const VarList& vars, int k) {
  std::vector<Jet> out;
  for (const auto& e : es) out.push_back(jet_of(e, vars, k));
  return out;
}

void ring_note(const Context& c, const std::vector<GermExpr>& exprs, Output& out) {
  if (c.ring() != Ring::Polynomial) return;
  if (std::all_of(exprs.begin(), exprs.end(), [](const GermExpr& e) { return e.is_polynomial(); })) return;
  out.warnings.push_back("The ring of polynomial germs is not suitable for non-polynomial germs; the ring of fractional germs is used.");
}

json degree_json(int k) { return k == Jet::kExact ? json(nullptr) : json(k); }

GermExpr by_germ(const Context& c) {
  if (c.opt.by.empty()) throw UsageError("--by is required for this command");
  return parse_germ(c.opt.by, c.xl);
}

void cmd_intrinsic(const Context& c, Output& out) {
  need_germs(c.opt, 1, SIZE_MAX);
  const auto A = c.germs(c.xl);
  std::vector<GermExpr> B;
  for (const auto& s : c.opt.span) B.push_back(parse_germ(s, c.xl));
  std::vector<GermExpr> every = A;
  every.insert(every.end(), B.begin(), B.end());
  ring_note(c, every, out);
  int k = c.opt.degree ? *c.opt.degree : c.upper_bound;
  if (!c.opt.degree && !c.opt.infinite) {
    const VerifyReport r = verify_ideal(A, c.xl, c.upper_bound);
    if (!r.truncation_degree) throw InfiniteCodimension();
    k = *r.truncation_degree;
  }
  const IntrinsicIdeal I = intrinsic_part(jets_of(A, c.xl, k), jets_of(B, c.xl, k), k, c.opt.infinite);
  out.result = ideal_json(I);
  out.result["degree"] = k;
  out.text = warnings_text(out.warnings) + I.to_string() + "\n";
}

void cmd_algobjects(const Context& c, Output& out) {
  need_germs(c.opt, 1, 1);
  const GermExpr g = c.germ(0, c.xl);
  // the verify degree k certifies M^{k+1} inside P from the (k+1)-jet
  const int k = c.opt.degree ? *c.opt.degree : resolve_degree(g, c.xl, std::nullopt) + 1;
  const AlgObjects a = alg_objects(taylor_expand(g, c.xl, k), k);
  out.warnings = a.warnings;
  out.result = {{"degree", k},
                {"RT", a.rt.to_string()},
                {"T", a.t.to_string()},
                {"P", ideal_json(a.p)},
                {"TangentPerp", monomial_list(a.tangent_perp, c.xl)},
                {"S", ideal_json(a.s)},
                {"SPerp", monomial_list(a.s_perp, c.xl)},
                {"IntrinsicGen", monomial_list(a.intrinsic_gens, c.xl)}};
  std::string& t = out.text;
  t = warnings_text(a.warnings);
  t += "RT = " + a.rt.to_string() + "\n";
  t += "T = " + a.t.to_string() + "\n";
  t += "P = " + a.p.to_string() + "\n";
  t += "TangentPerp = " + bracket_monomials(a.tangent_perp, c.xl) + "\n";
  t += "S = " + a.s.to_string() + "\n";
  t += "SPerp = " + bracket_monomials(a.s_perp, c.xl) + "\n";
  t += "IntrinsicGen = " + bracket_monomials(a.intrinsic_gens, c.xl) + "\n";
}

void cmd_multmatrix(const Context& c, Output& out) {
  need_germs(c.opt, 1, SIZE_MAX);
  const auto A = c.germs(c.xl);
  const GermExpr u = by_germ(c);
  ring_note(c, A, out);
  const int k = algebra_degree(c, A, A, out);
  const auto gens = jets_of(A, c.xl, k);
  const StandardBasis sb = standard_basis(gens, MonomialOrder::local(2), k);
  if (!sb.codimension()) throw InfiniteCodimension();
  for (const auto& w : sb.warnings()) out.warnings.push_back(w);
  const auto basis = sb.normal_set();
  const Matrix m = sb.mult_matrix(jet_of(u, c.xl, k), basis);
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).get_str());
    rows.push_back(r);
  }
  out.result = {{"degree", degree_json(k)}, {"basis", monomial_list(basis, c.xl)}, {"matrix", rows}};
  out.text = warnings_text(out.warnings) + "basis = " + bracket_monomials(basis, c.xl) + "\n" + m.to_string();
}

void cmd_division(const Context& c, Output& out) {
  need_germs(c.opt, 2, SIZE_MAX);
  const auto all = c.germs(c.xl);
  const std::vector<GermExpr> divisors(all.begin() + 1, all.end());
  ring_note(c, all, out);
  const int k = algebra_degree(c, all, divisors, out);
  const DivisionResult r = mora_divide(jet_of(all[0], c.xl, k), jets_of(divisors, c.xl, k), MonomialOrder::local(2), k);
  out.result = {{"degree", degree_json(k)},
                {"remainder", r.remainder.to_string()},
                {"quotients", jet_list(r.quotients)},
                {"unit", r.unit.to_string()}};
  out.text = warnings_text(out.warnings) + "remainder = " + r.remainder.to_string() + "\nquotients = " +
             bracket_jets(r.quotients) + "\nunit = " + r.unit.to_string() + "\n";
}

void cmd_standard_basis(const Context& c, Output& out) {
  need_germs(c.opt, 1, SIZE_MAX);
  const auto A = c.germs(c.xl);
  ring_note(c, A, out);
  const int k = algebra_degree(c, A, A, out);
  const StandardBasis sb = standard_basis(jets_of(A, c.xl, k), MonomialOrder::local(2), k);
  for (const auto& w : sb.warnings()) out.warnings.push_back(w);
  out.result = {{"degree", degree_json(k)},
                {"generators", jet_list(sb.generators())},
                {"leading_monomials", monomial_list(sb.leading_monomials(), c.xl)}};
  out.text = warnings_text(out.warnings) + bracket_jets(sb.generators()) + "\n";
}

void cmd_colon_ideal(const Context& c, Output& out) {
  need_germs(c.opt, 1, SIZE_MAX);
  const auto A = c.germs(c.xl);
  const GermExpr g = by_germ(c);
  auto every = A;
  every.push_back(g);
  ring_note(c, every, out);
  const int k = algebra_degree(c, every, A, out, true);
  const auto gens = colon_ideal(jets_of(A, c.xl, k), jet_of(g, c.xl, k), k);
  out.result = {{"degree", degree_json(k)}, {"generators", jet_list(gens)}};
  out.text = warnings_text(out.warnings) + bracket_jets(gens) + "\n";
}

void cmd_normalset(const Context& c, Output& out) {
  need_germs(c.opt, 1, SIZE_MAX);
  const auto A = c.germs(c.xl);
  ring_note(c, A, out);
  const int k = algebra_degree(c, A, A, out);
  const StandardBasis sb = standard_basis(jets_of(A, c.xl, k), MonomialOrder::local(2), k);
  if (!sb.codimension()) throw InfiniteCodimension();
  for (const auto& w : sb.warnings()) out.warnings.push_back(w);
  const auto ns = sb.normal_set();
  out.result = {{"degree", degree_json(k)}, {"monomials", monomial_list(ns, c.xl)}, {"codimension", ns.size()}};
  out.text = warnings_text(out.warnings) + bracket_monomials(ns, c.xl) + "\n";
}

// ---- bifurcation commands ---------------------------------------------------------

/// Polynomial body of G in (x, lambda, params...), truncated at the
/// persistent-mode degree when G is not polynomial.
UnfoldingGerm parametric_input(const Context& c, Output& out) {
  need_germs(c.opt, 1, 1);
  need_params(c);
  const GermExpr G = c.germ(0, c.all);
  if (G.is_polynomial() && !c.opt.degree) return parametric_germ(expand_polynomial(G, c.all));
  int k = 0;
  if (c.opt.degree) {
    k = *c.opt.degree;
  } else {
    const VerifyReport r = verify_persistent(G, c.all, c.upper_bound);
    if (!r.truncation_degree) throw MathError(r.warnings.back());
    k = *r.truncation_degree;
  }
  out.warnings.push_back("Truncation degree " + std::to_string(k) + ".");
  return parametric_germ(taylor_expand(G, c.all, k));
}

json transition_json(const TransitionSet& T) {
  json comps = json::array();
  for (const auto& comp : T.components) {
    json pieces = json::array();
    for (const auto& piece : comp.pieces) {
      json side = json::array();
      for (const auto& sc : piece.side) side.push_back({{"poly", sc.poly.to_string()}, {"rel", relation_symbol(sc.rel, false)}});
      pieces.push_back({{"equations", jet_list(piece.equations)}, {"side", side}});
    }
    comps.push_back({{"name", comp.name}, {"empty", comp.is_empty()}, {"pieces", pieces}, {"notes", comp.notes}});
  }
  return {{"params", T.params}, {"components", comps}};
}

std::string rational_text(const Rational& q) { return q.get_str(); }

SliceOptions slice_options(const Context& c) {
  SliceOptions o;
  if (c.params.size() < 2) throw UsageError("--plot needs at least two parameters");
  if (!c.opt.box.empty()) {
    const auto box = parse_intervals(c.opt.box, c.params.size(), "--box");
    o.h = box[0];
    o.v = box[1];
  }
  if (!c.opt.fix.empty()) {
    o.fixed = parse_numbers(c.opt.fix);
    if (o.fixed.size() != c.params.size() - 2) throw UsageError("--fix needs one value per parameter after the second");
  }
  if (c.opt.resolution) o.resolution = *c.opt.resolution;
  return o;
}

void plot_slice(const Context& c, const TransitionSet& T, Output& out) {
  if (c.opt.plot.empty()) return;
  const SliceOptions o = slice_options(c);
  const auto curves = transition_slice(T, o);
  const bool csv = c.opt.plot.size() >= 4 && c.opt.plot.compare(c.opt.plot.size() - 4, 4, ".csv") == 0;
  write_file(c.opt.plot, csv ? render_slice_csv(T, curves, o) : render_slice_svg(T, curves, o));
  out.result["plot"] = c.opt.plot;
}

void cmd_transition_set(const Context& c, Output& out) {
  const UnfoldingGerm G = parametric_input(c, out);
  const TransitionSet T = transition_set(G);
  out.result = transition_json(T);
  out.text = warnings_text(out.warnings) + T.to_text(false);
  plot_slice(c, T, out);
}

void cmd_nonpersistent(const Context& c, Output& out) {
  const UnfoldingGerm F = parametric_input(c, out);
  if (c.opt.boundary.empty()) throw UsageError("--boundary U_lo,U_hi,L_lo,L_hi is required");
  const auto b = parse_intervals(c.opt.boundary, 2, "--boundary");
  BoundaryOptions bo;
  if (c.opt.vertical && c.opt.horizontal) throw UsageError("--vertical and --horizontal exclude each other");
  if (c.opt.vertical) bo.horizontal = false;
  if (c.opt.horizontal) bo.vertical = false;
  const TransitionSet T = nonpersistent_sets(F, b[0], b[1], bo);
  out.result = transition_json(T);
  out.text = warnings_text(out.warnings) + T.to_text(false);
  plot_slice(c, T, out);
}

Window window_option(const Context& c) {
  Window w;
  if (c.opt.window.empty()) return w;
  const auto iv = parse_intervals(c.opt.window, 2, "--window");
  w.lambda = iv[0];
  w.x = iv[1];
  return w;
}

void cmd_persistent(const Context& c, Output& out) {
  const UnfoldingGerm G = parametric_input(c, out);
  const TransitionSet T = transition_set(G);
  RegionOptions ro;
  if (!c.opt.box.empty()) ro.box = parse_intervals(c.opt.box, c.params.size(), "--box");
  if (c.opt.grid < 2) throw UsageError("--grid must be at least 2");
  ro.grid = c.opt.grid;
  const auto gran = parse_granularity(c.opt.granularity);
  if (!gran) throw UsageError("--granularity must be short, intermediate or complete");
  ro.granularity = *gran;
  const RegionCatalog cat = classify_regions(T, ro);
  for (const auto& w : cat.warnings) out.warnings.push_back(w);

  const Window w = window_option(c);
  DiagramOptions dopt;
  dopt.window = w;
  if (c.opt.resolution) dopt.resolution = *c.opt.resolution;
  if (!c.opt.plot.empty()) std::filesystem::create_directories(c.opt.plot);

  json reps = json::array();
  std::string text = warnings_text(out.warnings);
  text += T.to_text(false);
  for (std::size_t i = 0; i < cat.representatives.size(); ++i) {
    const auto& r = cat.representatives[i];
    const Jet g = specialize(G, r.point);
    const RootSignature sig = window_signature(g, w);
    json point = json::array();
    std::string pt;
    for (std::size_t j = 0; j < r.point.size(); ++j) {
      point.push_back(rational_text(r.point[j]));
      pt += (j ? ", " : "") + rational_text(r.point[j]);
    }
    json entry = {{"point", point}, {"signs", r.signs}, {"size", r.size}, {"signature", sig.to_string()}};
    if (!c.opt.plot.empty()) {
      char name[32];
      std::snprintf(name, sizeof name, "diagram_%03zu.svg", i + 1);
      const Diagram d = bifurcation_diagram(G, r.point, dopt);
      write_file((std::filesystem::path(c.opt.plot) / name).string(), render_diagram_svg(d, "(" + pt + ")"));
      entry["plot"] = name;
    }
    reps.push_back(entry);
  }
  text += cat.to_text(false).substr(warnings_text(cat.warnings).size());
  for (std::size_t i = 0; i < cat.representatives.size(); ++i)
    text += "diagram " + std::to_string(i + 1) + ": " + reps[i]["signature"].get<std::string>() + "\n";
  out.result = {{"transition_set", transition_json(T)},
                {"granularity", granularity_name(ro.granularity)},
                {"grid", cat.grid},
                {"representatives", reps}};
  out.text = text;
}

// ---- dispatch ---------------------------------------------------------------------

using Handler = std::function<void(const Context&, Output&)>;

struct Command {
  const char* name;
  const char* help;
  Handler run;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> list = {
      {"verify", "permissible rings and truncation degree", cmd_verify},
      {"normalform", "normal form of a germ", cmd_normalform},
      {"unfolding", "universal unfolding of a germ", cmd_unfolding},
      {"recognize", "recognition conditions (matrix with --unfolding P)", cmd_recognize},
      {"check-universal", "whether a parametric germ is a universal unfolding", cmd_check_universal},
      {"transform", "contact transformation taking g to f", cmd_transform},
      {"transition-set", "bifurcation, hysteresis and double limit sets", cmd_transition_set},
      {"persistent", "persistent bifurcation diagram classification", cmd_persistent},
      {"nonpersistent", "transition set with boundary components", cmd_nonpersistent},
      {"intrinsic", "intrinsic part of an ideal (plus --span vectors)", cmd_intrinsic},
      {"algobjects", "RT, T, P, S and their complements", cmd_algobjects},
      {"multmatrix", "multiplication matrix of --by on the quotient", cmd_multmatrix},
      {"division", "divide the first germ by the others", cmd_division},
      {"standard-basis", "standard basis in the local ring", cmd_standard_basis},
      {"colon-ideal", "colon ideal I : --by", cmd_colon_ideal},
      {"normalset", "monomial basis of the quotient", cmd_normalset},
  };
  return list;
}

void add_options(CLI::App* sub, Options& o) {
  sub->add_option("germs", o.germs, "germ expressions");
  sub->add_option("--vars", o.vars, "state variable and distinguished parameter")->capture_default_str();
  sub->add_option("--params", o.params, "unfolding parameters, comma separated");
  sub->add_option("--degree", o.degree, "truncation degree");
  sub->add_option("--ring", o.ring, "fractional, formal, smooth or polynomial")->capture_default_str();
  sub->add_flag("--list", o.list, "list every alternative");
  sub->add_flag("--normalform", o.normalform, "unfold the normal form");
  sub->add_option("--plot", o.plot, "output file (slices) or directory (diagrams)");
  sub->add_option("--format", o.format, "text or json")->capture_default_str();
  sub->add_option("--box", o.box, "parameter box lo,hi per parameter");
  sub->add_option("--grid", o.grid, "grid points per parameter axis")->capture_default_str();
  sub->add_option("--window", o.window, "diagram window lambda_lo,lambda_hi,x_lo,x_hi");
  sub->add_option("--resolution", o.resolution, "plot sampling resolution");
  sub->add_option("--granularity", o.granularity, "short, intermediate or complete")->capture_default_str();
  sub->add_option("--boundary", o.boundary, "U_lo,U_hi,L_lo,L_hi");
  sub->add_option("--upper-bound", o.upper_bound, "upper bound for the truncation degree");
  sub->add_option("--mode", o.mode, "verify mode: germ, ideal or persistent")->capture_default_str();
  sub->add_option("--by", o.by, "multiplier (multmatrix) or divisor germ (colon-ideal)");
  sub->add_option("--span", o.span, "extra vector space generators (intrinsic)");
  sub->add_option("--unfolding", o.unfolding, "recognize: number of unfolding parameters");
  sub->add_option("--fix", o.fix, "values of parameters 3.. for slice plots");
  sub->add_flag("--vertical", o.vertical, "only vertical boundaries x in dU");
  sub->add_flag("--horizontal", o.horizontal, "only horizontal boundaries lambda in dL");
  sub->add_flag("--infinite", o.infinite, "allow infinite codimension (intrinsic)");
}

void emit(const std::string& name, const Options& o, const Output& r, std::ostream& out) {
  if (o.format == "json") {
    json inputs = {{"germs", o.germs}, {"vars", split_list(o.vars)}};
    inputs["params"] = o.params.empty() ? json::array() : json(split_list(o.params));
    inputs["degree"] = o.degree ? json(*o.degree) : json(nullptr);
    inputs["ring"] = o.ring;
    const json doc = {{"command", name}, {"inputs", inputs}, {"result", r.result}, {"warnings", r.warnings}};
    out << doc.dump(2) << "\n";
  } else {
    out << r.text;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"germforge: local algebra and bifurcation analysis of scalar germs g(x, lambda)"};
  app.name("germforge");
  app.require_subcommand(1);
  Options opt;
  std::map<CLI::App*, const Command*> subs;
  for (const auto& cmd : commands()) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    add_options(sub, opt);
    subs[sub] = &cmd;
  }
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 2;
  }
  const Command* cmd = nullptr;
  CLI::App* chosen = nullptr;
  for (auto& [sub, c] : subs)
    if (sub->parsed()) {
      cmd = c;
      chosen = sub;
    }
  Output result;
  try {
    if (opt.format != "text" && opt.format != "json") throw UsageError("--format must be text or json");
    const Context ctx(opt);
    parse_ring(opt.ring);
    cmd->run(ctx, result);
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n" << chosen->help();
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  emit(cmd->name, opt, result, out);
  return result.failed ? 1 : 0;
}

}  // namespace germforge::cli
