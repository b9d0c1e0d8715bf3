#include "germforge/recognition.hpp"

#include "germforge/errors.hpp"
#include "germforge/intrinsic.hpp"
#include "germforge/normalform.hpp"
#include "germforge/tangent.hpp"
#include "germforge/unfolding.hpp"

#include <algorithm>
#include <stdexcept>

namespace germforge {

namespace {

bool graded_before(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a[0] > b[0];
}

// pure powers first by degree (lambda before x), then mixed monomials by degree
bool column_before(const Monomial& a, const Monomial& b) {
  const bool ma = a[0] > 0 && a[1] > 0, mb = b[0] > 0 && b[1] > 0;
  if (ma != mb) return !ma;
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return ma ? a[0] > b[0] : a[1] > b[1];
}

Rational falling(unsigned n, unsigned k) {
  Rational r = 1;
  for (unsigned i = 0; i < k; ++i) r *= n - i;
  return r;
}

std::string var_name(std::size_t v, bool unicode) {
  if (v == 0) return "x";
  return unicode ? "λ" : "lambda";
}

std::string condition(const Monomial& m, bool unicode, bool zero) {
  std::string s;
  if (!unicode) {
    s = derivative_symbol("f", m, false);
    return s + (zero ? "=0" : "!=0");
  }
  const unsigned n = m.degree();
  if (n == 0) {
    s = "f";
  } else {
    s = "∂" + (n > 1 ? superscript(n) : std::string()) + "f/";
    for (std::size_t v = 0; v < 2; ++v)
      if (m[v] > 0) s += "∂" + var_name(v, true) + (m[v] > 1 ? superscript(m[v]) : std::string());
  }
  return s + (zero ? "=0" : "≠0");
}

std::string condition_list(const std::vector<Monomial>& ms, bool unicode, bool zero) {
  std::string s = "[";
  for (std::size_t i = 0; i < ms.size(); ++i) s += (i ? ", " : "") + condition(ms[i], unicode, zero);
  return s + "]";
}

std::string render_conditions(const RecognitionConditions& c, bool unicode) {
  std::string s = "nonzero condition=" + condition_list(c.nonzero, unicode, false) + "\n";
  s += "zero condition=" + condition_list(c.zero, unicode, true) + "\n";
  for (const auto& n : c.notes) s += n + "\n";
  return s;
}

std::string entry_text(const MatrixEntry& e, bool unicode) {
  if (e.is_zero()) return "0";
  std::string name = e.unfolding ? "G" : "g";
  std::vector<std::string> idx;
  for (std::size_t v = 0; v < 2; ++v)
    for (unsigned i = 0; i < e.derivative[v]; ++i) idx.push_back(var_name(v, unicode));
  if (e.alpha) {
    const std::string a = "alpha" + std::to_string(e.alpha);
    idx.push_back(unicode ? unicode_name(a) : a);
  }
  std::string sym = name;
  if (!idx.empty()) {
    sym += "_{";
    for (std::size_t i = 0; i < idx.size(); ++i) sym += (i ? "," : "") + idx[i];
    sym += "}";
  }
  sym += "(0)";
  if (e.coeff == 1) return sym;
  if (e.coeff == -1) return "-" + sym;
  return e.coeff.get_str() + (unicode ? "" : "*") + sym;
}

std::string render_matrix(const RecognitionMatrix& m, bool unicode) {
  std::string s = "columns=[";
  const VarList xl{"x", "lambda"};
  for (std::size_t j = 0; j < m.columns.size(); ++j) {
    const Jet t = Jet::term(xl, m.columns[j]);
    s += (j ? ", " : "") + (unicode ? t.to_unicode() : t.to_string());
  }
  s += "]\nrows=[";
  const auto& labels = unicode ? m.rows_unicode : m.rows;
  for (std::size_t i = 0; i < labels.size(); ++i) s += (i ? ", " : "") + labels[i];
  s += "]\ndet(\n";
  for (const auto& row : m.entries) {
    s += "  [";
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? ", " : "") + entry_text(row[j], unicode);
    s += "]\n";
  }
  s += unicode ? ") ≠ 0\n" : ") != 0\n";
  return s;
}

struct Candidate {
  Monomial m;
  int d;  // 0: g_x, 1: g_lambda, 2: g
};

std::string candidate_label(const Candidate& c, bool unicode) {
  static const char* ascii[] = {"g_x", "g_lambda", "g"};
  static const char* uni[] = {"g_x", "g_λ", "g"};
  const std::string base = unicode ? uni[c.d] : ascii[c.d];
  if (c.m.degree() == 0) return base;
  const Jet t = Jet::term(VarList{"x", "lambda"}, c.m);
  return unicode ? t.to_unicode() + base : t.to_string() + "*" + base;
}

/// g_x, g_lambda, g, then per degree d: m g_x, lambda^d g_lambda, m g.
std::vector<Candidate> candidates(int k) {
  std::vector<Candidate> out;
  for (int d : {0, 1, 2}) out.push_back({Monomial{}, d});
  for (unsigned deg = 1; static_cast<int>(deg) <= k; ++deg) {
    std::vector<Monomial> ms;
    for (unsigned a = deg + 1; a-- > 0;) ms.push_back(Monomial{a, deg - a});
    for (const auto& m : ms) out.push_back({m, 0});
    out.push_back({Monomial{0, deg}, 1});
    for (const auto& m : ms) out.push_back({m, 2});
  }
  return out;
}

}  // namespace

std::string derivative_symbol(const std::string& fn, const Monomial& m, bool unicode) {
  if (m.degree() == 0) return fn;
  std::string s = fn + "_{";
  bool first = true;
  for (std::size_t v = 0; v < 2; ++v)
    for (unsigned i = 0; i < m[v]; ++i) {
      s += (first ? "" : ",") + var_name(v, unicode);
      first = false;
    }
  return s + "}";
}

std::string RecognitionConditions::to_string() const { return render_conditions(*this, false); }
std::string RecognitionConditions::to_unicode() const { return render_conditions(*this, true); }

bool regular_in_lambda(const Jet& g) { return sgn(g.coeff(Monomial{0, 1})) != 0; }

RecognitionConditions recognition_normal_form(const Jet& g, int k) {
  const Jet gk = g.truncated(k);
  IntrinsicIdeal p;
  try {
    p = high_order_terms(gk, k);
  } catch (const InfiniteCodimension&) {
    // a germ with f_lambda(0) != 0 is recognized by that alone
    if (!regular_in_lambda(gk)) throw;
    p = restricted_tangent(gk, k).high_order;
  }
  const IntrinsicIdeal s = smallest_intrinsic(p.strip(gk));
  RecognitionConditions c;
  c.nonzero = s.generators();
  std::sort(c.nonzero.begin(), c.nonzero.end(), graded_before);
  const unsigned top = c.nonzero.empty() ? 0 : c.nonzero.back().degree();
  bool intermediate = false;
  for (const auto& m : monomials_up_to(2, static_cast<unsigned>(k))) {
    if (p.contains(m) || (m.degree() >= top && !s.contains(m))) continue;
    if (!s.contains(m))
      c.zero.push_back(m);
    else if (std::find(c.nonzero.begin(), c.nonzero.end(), m) == c.nonzero.end())
      intermediate = true;
  }
  std::sort(c.zero.begin(), c.zero.end(), graded_before);
  if (intermediate) c.notes.push_back("Note: intermediate order terms are not constrained by these conditions.");
  return c;
}

RecognitionConditions recognition_normal_form(const GermExpr& g, const VarList& vars, std::optional<int> degree) {
  int k = 1;
  try {
    k = resolve_degree(g, vars, degree);
  } catch (const InfiniteCodimension&) {
    if (!regular_in_lambda(taylor_expand(g, vars, 1))) throw;
  }
  return recognition_normal_form(taylor_expand(g, vars, k), k);
}

bool satisfies(const Jet& f, const RecognitionConditions& c) {
  for (const auto& m : c.zero)
    if (sgn(f.coeff(m)) != 0) return false;
  for (const auto& m : c.nonzero)
    if (sgn(f.coeff(m)) == 0) return false;
  return true;
}

Matrix RecognitionMatrix::evaluate(const Jet& G) const {
  const std::size_t n = size();
  Matrix out(n, n);
  const Jet h = unfolding_base(G);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const MatrixEntry& e = entries[i][j];
      if (e.is_zero()) continue;
      const Monomial& d = e.derivative;
      Rational v = factorial(d[0]) * factorial(d[1]);
      if (e.unfolding) {
        if (2 + e.alpha > G.nvars() + 1) throw std::invalid_argument("G has too few parameters");
        Monomial m = d;
        m.set(1 + e.alpha, 1);
        v *= G.coeff(m);
      } else {
        v *= h.coeff(d);
      }
      out(i, j) = e.coeff * v;
    }
  return out;
}

std::string RecognitionMatrix::to_string() const { return render_matrix(*this, false); }
std::string RecognitionMatrix::to_unicode() const { return render_matrix(*this, true); }

RecognitionMatrix recognition_unfolding(const Jet& g, int k, std::size_t p) {
  const Jet gk = g.truncated(k);
  const std::size_t codim = tangent_perp(gk, k).size();
  if (p != codim)
    throw std::invalid_argument("the number of parameters must equal codim T(g) = " + std::to_string(codim));
  const IntrinsicIdeal itr = tangent_space(gk, k).intrinsic;
  const RecognitionConditions conds = recognition_normal_form(gk, k);

  RecognitionMatrix rm;
  for (const auto& m : monomials_up_to(2, static_cast<unsigned>(k)))
    if (!itr.contains(m)) rm.columns.push_back(m);
  std::sort(rm.columns.begin(), rm.columns.end(), column_before);
  const std::size_t n = rm.columns.size();
  if (p > n) throw MathError("more parameters than the dimension " + std::to_string(n) + " of E/Itr(T(g))");
  const std::size_t q = n - p;

  const Jet derivs[] = {gk.derivative(0), gk.derivative(1), gk};
  JetSpace chosen(MonomialOrder::graded(2));
  for (const auto& cand : candidates(k)) {
    if (rm.rows.size() == q) break;
    Jet image(gk.vars(), k);
    const Jet v = derivs[cand.d].times_monomial(cand.m).truncated(k);
    for (const auto& col : rm.columns) image.add_term(col, v.coeff(col));
    if (!chosen.insert(image)) continue;
    rm.rows.push_back(candidate_label(cand, false));
    rm.rows_unicode.push_back(candidate_label(cand, true));
    std::vector<MatrixEntry> row;
    for (const auto& col : rm.columns) {
      MatrixEntry e;
      if (cand.m[0] <= col[0] && cand.m[1] <= col[1]) {
        Monomial d{col[0] - cand.m[0] + (cand.d == 0 ? 1u : 0u), col[1] - cand.m[1] + (cand.d == 1 ? 1u : 0u)};
        const bool vanishes = std::find(conds.zero.begin(), conds.zero.end(), d) != conds.zero.end();
        if (!vanishes) {
          e.coeff = falling(col[0], cand.m[0]) * falling(col[1], cand.m[1]);
          e.derivative = d;
        }
      }
      row.push_back(e);
    }
    rm.entries.push_back(std::move(row));
  }
  if (rm.rows.size() != q)
    throw MathError("the candidate germs do not span T(g)/Itr(T(g)) of dimension " + std::to_string(q));
  for (std::size_t i = 1; i <= p; ++i) {
    rm.rows.push_back("G_alpha" + std::to_string(i));
    rm.rows_unicode.push_back("G_" + unicode_name("alpha" + std::to_string(i)));
    std::vector<MatrixEntry> row;
    for (const auto& col : rm.columns) row.push_back(MatrixEntry{1, true, col, i});
    rm.entries.push_back(std::move(row));
  }
  return rm;
}

RecognitionMatrix recognition_unfolding(const GermExpr& g, const VarList& vars, std::size_t p, std::optional<int> degree) {
  const int k = resolve_degree(g, vars, degree);
  return recognition_unfolding(taylor_expand(g, vars, k), k, p);
}

}  // namespace germforge
