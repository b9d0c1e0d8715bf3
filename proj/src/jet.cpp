#include "germforge/jet.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace germforge {

// ---- monomials ---------------------------------------------------------------

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned degree) {
  std::vector<Monomial> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Monomial m;
  // recursive fill, variable 0 exponent descending
  auto rec = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
    if (var + 1 == nvars) {
      m.set(var, remaining);
      out.push_back(m);
      return;
    }
    for (unsigned e = remaining + 1; e-- > 0;) {
      m.set(var, e);
      self(self, var + 1, remaining - e);
    }
    m.set(var, 0);
  };
  rec(rec, 0, degree);
  return out;
}

std::vector<Monomial> monomials_up_to(std::size_t nvars, unsigned max_degree) {
  std::vector<Monomial> out;
  for (unsigned d = 0; d <= max_degree; ++d) {
    auto part = monomials_of_degree(nvars, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

// ---- orders ------------------------------------------------------------------

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence, std::size_t block)
    : kind_(kind), precedence_(std::move(precedence)), block_(block) {
  if (precedence_.size() > kMaxVars) throw std::invalid_argument("too many variables for an order");
  if (block_ > precedence_.size()) throw std::invalid_argument("elimination block larger than ring");
}

static std::vector<std::size_t> identity_precedence(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

MonomialOrder MonomialOrder::local(std::size_t nvars) {
  return {OrderKind::LocalAntigraded, identity_precedence(nvars)};
}
MonomialOrder MonomialOrder::graded(std::size_t nvars) {
  return {OrderKind::GlobalGraded, identity_precedence(nvars)};
}
MonomialOrder MonomialOrder::lex(std::size_t nvars) { return {OrderKind::Lex, identity_precedence(nvars)}; }

MonomialOrder MonomialOrder::elimination(std::size_t nvars, const std::vector<std::size_t>& eliminated) {
  std::vector<std::size_t> prec = eliminated;
  for (std::size_t i = 0; i < nvars; ++i)
    if (std::find(eliminated.begin(), eliminated.end(), i) == eliminated.end()) prec.push_back(i);
  return {OrderKind::BlockElimination, prec, eliminated.size()};
}

int MonomialOrder::lex_compare(const Monomial& a, const Monomial& b, std::size_t from, std::size_t to) const {
  for (std::size_t i = from; i < to; ++i) {
    const auto v = precedence_[i];
    if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
  }
  return 0;
}

unsigned MonomialOrder::partial_degree(const Monomial& m, std::size_t from, std::size_t to) const {
  unsigned d = 0;
  for (std::size_t i = from; i < to; ++i) d += m[precedence_[i]];
  return d;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = precedence_.size();
  switch (kind_) {
    case OrderKind::LocalAntigraded: {
      const unsigned da = a.degree(), db = b.degree();
      if (da != db) return da < db ? 1 : -1;
      return lex_compare(a, b, 0, n);
    }
    case OrderKind::GlobalGraded: {
      const unsigned da = a.degree(), db = b.degree();
      if (da != db) return da > db ? 1 : -1;
      return lex_compare(a, b, 0, n);
    }
    case OrderKind::Lex:
      return lex_compare(a, b, 0, n);
    case OrderKind::BlockElimination: {
      const unsigned da = partial_degree(a, 0, block_), db = partial_degree(b, 0, block_);
      if (da != db) return da > db ? 1 : -1;
      if (int c = lex_compare(a, b, 0, block_)) return c;
      const unsigned ra = partial_degree(a, block_, n), rb = partial_degree(b, block_, n);
      if (ra != rb) return ra > rb ? 1 : -1;
      return lex_compare(a, b, block_, n);
    }
  }
  return 0;
}

// ---- variable lists ----------------------------------------------------------

VarList::VarList(std::initializer_list<std::string> names)
    : VarList(std::vector<std::string>(names)) {}

VarList::VarList(std::vector<std::string> names) {
  if (names.size() > kMaxVars) throw std::invalid_argument("too many variables");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw std::invalid_argument("duplicate variable name: " + names[i]);
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::optional<std::size_t> VarList::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < names_->size(); ++i)
    if ((*names_)[i] == name) return i;
  return std::nullopt;
}

std::size_t VarList::require(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw std::invalid_argument("unknown variable " + name);
  return *i;
}

VarList VarList::extended(const std::vector<std::string>& more) const {
  auto all = *names_;
  all.insert(all.end(), more.begin(), more.end());
  return VarList(std::move(all));
}

// ---- jets --------------------------------------------------------------------

Jet::Jet(VarList vars, int truncation) : vars_(std::move(vars)), trunc_(truncation) {
  if (trunc_ < 0) trunc_ = -1;
}

Jet Jet::constant(const VarList& vars, const Rational& c, int truncation) {
  Jet j(vars, truncation);
  j.add_term(Monomial{}, c);
  return j;
}

Jet Jet::variable(const VarList& vars, std::size_t index, int truncation) {
  if (index >= vars.size()) throw std::out_of_range("variable index");
  Jet j(vars, truncation);
  j.add_term(Monomial::unit(index), 1);
  return j;
}

Jet Jet::term(const VarList& vars, const Monomial& m, const Rational& c, int truncation) {
  Jet j(vars, truncation);
  j.add_term(m, c);
  return j;
}

bool Jet::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Rational Jet::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Jet::add_term(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  if (static_cast<int>(m.degree()) > trunc_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Jet::set_truncation(int k) {
  trunc_ = std::max(k, -1);
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (static_cast<int>(it->first.degree()) > trunc_)
      it = terms_.erase(it);
    else
      ++it;
  }
}

Jet Jet::truncated(int k) const {
  Jet r = *this;
  r.set_truncation(std::min(k, trunc_));
  return r;
}

Jet Jet::as_exact() const {
  Jet r = *this;
  r.trunc_ = kExact;
  return r;
}

Jet Jet::homogeneous_part(unsigned d) const {
  Jet r(vars_, trunc_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.terms_.emplace(m, c);
  return r;
}

unsigned Jet::order() const {
  if (terms_.empty()) throw std::domain_error("order of the zero jet");
  unsigned best = ~0u;
  for (const auto& [m, c] : terms_) best = std::min(best, m.degree());
  return best;
}

unsigned Jet::degree() const {
  unsigned best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m.degree());
  return best;
}

unsigned Jet::degree_in(std::size_t var) const {
  unsigned best = 0;
  for (const auto& [m, c] : terms_) best = std::max(best, m[var]);
  return best;
}

std::pair<Monomial, Rational> Jet::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
    if (ord.greater(it->first, best->first)) best = it;
  return *best;
}

unsigned Jet::ecart(const MonomialOrder& ord) const { return degree() - leading_monomial(ord).degree(); }

Jet Jet::derivative(std::size_t var) const {
  Jet r(vars_, trunc_);
  for (const auto& [m, c] : terms_) {
    const unsigned e = m[var];
    if (e == 0) continue;
    Monomial d = m;
    d.set(var, e - 1);
    r.add_term(d, c * e);
  }
  return r;
}

Jet Jet::pow(unsigned e) const {
  Jet result = constant(vars_, 1, trunc_);
  Jet base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Jet Jet::scaled(const Rational& c) const {
  Jet r(vars_, trunc_);
  if (sgn(c) == 0) return r;
  for (const auto& [m, a] : terms_) r.terms_.emplace(m, a * c);
  return r;
}

Jet Jet::times_monomial(const Monomial& mono, const Rational& c) const {
  Jet r(vars_, trunc_);
  if (sgn(c) == 0) return r;
  for (const auto& [m, a] : terms_) {
    Monomial p = m * mono;
    if (static_cast<int>(p.degree()) <= trunc_) r.terms_.emplace(p, a * c);
  }
  return r;
}

Jet Jet::divided_by_monomial(const Monomial& mono) const {
  Jet r(vars_, trunc_ >= kExact ? kExact : trunc_ - static_cast<int>(mono.degree()));
  for (const auto& [m, a] : terms_) {
    if (!mono.divides(m)) throw std::domain_error("monomial division is not exact");
    r.terms_.emplace(mono.quotient_of(m), a);
  }
  return r;
}

Jet Jet::compose(const std::vector<Jet>& images) const {
  if (images.size() != nvars()) throw std::invalid_argument("compose: one image per variable required");
  if (images.empty()) return *this;
  const VarList& target = images.front().vars();
  int k = exact() ? kExact : trunc_;
  for (const auto& im : images) {
    if (!(im.vars() == target)) throw std::invalid_argument("compose: images over different rings");
    k = std::min(k, im.truncation());
  }
  // cache of powers per variable
  std::vector<std::vector<Jet>> powers(images.size());
  auto power = [&](std::size_t v, unsigned e) -> const Jet& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(constant(target, 1, k));
    while (cache.size() <= e) cache.push_back((cache.back() * images[v]).truncated(k));
    return cache[e];
  };
  Jet result(target, k);
  for (const auto& [m, c] : terms_) {
    Jet t = constant(target, c, k);
    for (std::size_t v = 0; v < images.size(); ++v)
      if (m[v]) t = t * power(v, m[v]);
    result += t;
  }
  return result;
}

Jet Jet::embedded(const VarList& target) const {
  // variables absent from the target may only appear with exponent zero
  constexpr std::size_t kMissing = ~std::size_t{0};
  std::vector<std::size_t> map(nvars(), kMissing);
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (auto idx = target.index_of(vars_[i]))
      map[i] = *idx;
    else if (depends_on(i))
      throw std::invalid_argument("variable " + vars_[i] + " is not in the target variable list");
  }
  Jet r(target, trunc_);
  for (const auto& [m, c] : terms_) {
    Monomial t;
    for (std::size_t i = 0; i < nvars(); ++i)
      if (map[i] != kMissing) t.set(map[i], m[i]);
    r.terms_.emplace(t, c);
  }
  return r;
}

Jet Jet::substitute(std::size_t var, const Rational& value) const {
  Jet r(vars_, trunc_);
  for (const auto& [m, c] : terms_) {
    Monomial t = m;
    t.set(var, 0);
    Rational v;
    mpz_pow_ui(v.get_num_mpz_t(), value.get_num_mpz_t(), m[var]);
    mpz_pow_ui(v.get_den_mpz_t(), value.get_den_mpz_t(), m[var]);
    v.canonicalize();
    r.add_term(t, c * v);
  }
  return r;
}

Rational Jet::eval(const std::vector<Rational>& point) const {
  if (point.size() != nvars()) throw std::invalid_argument("eval: wrong point dimension");
  Rational s = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t v = 0; v < nvars(); ++v)
      for (unsigned e = 0; e < m[v]; ++e) t *= point[v];
    s += t;
  }
  return s;
}

double Jet::eval(const std::vector<double>& point) const {
  if (point.size() != nvars()) throw std::invalid_argument("eval: wrong point dimension");
  double s = 0;
  for (const auto& [m, c] : terms_) {
    double t = c.get_d();
    for (std::size_t v = 0; v < nvars(); ++v) t *= std::pow(point[v], static_cast<int>(m[v]));
    s += t;
  }
  return s;
}

double Jet::eval_scale(const std::vector<double>& point) const {
  double s = 0;
  for (const auto& [m, c] : terms_) {
    double t = std::fabs(c.get_d());
    for (std::size_t v = 0; v < nvars(); ++v) t *= std::pow(std::fabs(point[v]), static_cast<int>(m[v]));
    s += t;
  }
  return s;
}

std::string superscript(unsigned n) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string s;
  for (char c : std::to_string(n)) s += digits[c - '0'];
  return s;
}

std::string unicode_name(const std::string& name) {
  static const char* sub[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  static const std::pair<const char*, const char*> greek[] = {{"lambda", "λ"}, {"alpha", "α"}, {"beta", "β"},
                                                              {"mu", "μ"}, {"epsilon", "ε"}};
  for (const auto& [ascii, glyph] : greek) {
    const std::string a = ascii;
    if (name.compare(0, a.size(), a) != 0) continue;
    const std::string rest = name.substr(a.size());
    if (!std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      continue;
    std::string out = glyph;
    for (char c : rest) out += sub[c - '0'];
    return out;
  }
  return name;
}

std::string monomial_to_string(const Monomial& m, const VarList& vars) {
  std::string s;
  for (std::size_t v = 0; v < vars.size(); ++v) {
    if (!m[v]) continue;
    if (!s.empty()) s += '*';
    s += vars[v];
    if (m[v] > 1) s += '^' + std::to_string(m[v]);
  }
  return s.empty() ? "1" : s;
}

std::string monomial_to_unicode(const Monomial& m, const VarList& vars) {
  std::string s;
  for (std::size_t v = 0; v < vars.size(); ++v) {
    if (!m[v]) continue;
    s += unicode_name(vars[v]);
    if (m[v] > 1) s += superscript(m[v]);
  }
  return s.empty() ? "1" : s;
}

namespace {

std::string format_jet(const Jet& f, bool unicode) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<Monomial, Rational>> sorted(f.terms().begin(), f.terms().end());
  const auto ord = MonomialOrder::graded(f.nvars());
  std::sort(sorted.begin(), sorted.end(),
            [&](const auto& a, const auto& b) { return ord.greater(a.first, b.first); });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : sorted) {
    Rational a = abs(c);
    if (first)
      os << (sgn(c) < 0 ? (unicode ? "−" : "-") : "");
    else
      os << (sgn(c) < 0 ? (unicode ? " − " : " - ") : " + ");
    first = false;
    if (m.is_one()) {
      os << a.get_str();
    } else if (unicode) {
      if (a != 1) os << (a.get_den() == 1 ? a.get_str() : "(" + a.get_str() + ")");
      os << monomial_to_unicode(m, f.vars());
    } else {
      if (a != 1) os << a.get_str() << '*';
      os << monomial_to_string(m, f.vars());
    }
  }
  return os.str();
}

}  // namespace

std::string Jet::to_string() const { return format_jet(*this, false); }

std::string Jet::to_unicode() const { return format_jet(*this, true); }

void Jet::check_compatible(const Jet& o) const {
  if (!(vars_ == o.vars_)) throw std::invalid_argument("jet arithmetic over different variable lists");
}

Jet& Jet::operator+=(const Jet& o) {
  check_compatible(o);
  if (o.trunc_ < trunc_) set_truncation(o.trunc_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Jet& Jet::operator-=(const Jet& o) {
  check_compatible(o);
  if (o.trunc_ < trunc_) set_truncation(o.trunc_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

void Jet::add_multiple(const Jet& g, const Monomial& mono, const Rational& c) {
  check_compatible(g);
  if (g.trunc_ < trunc_) set_truncation(g.trunc_);
  if (sgn(c) == 0) return;
  for (const auto& [m, a] : g.terms_) add_term(m * mono, a * c);
}

Jet operator*(const Jet& a, const Jet& b) {
  a.check_compatible(b);
  Jet r(a.vars_, std::min(a.trunc_, b.trunc_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma * mb;
      if (static_cast<int>(m.degree()) <= r.trunc_) r.add_term(m, ca * cb);
    }
  return r;
}

Jet primitive_part(const Jet& f) {
  if (f.is_zero()) return f;
  Integer den = 1, num = 0;
  for (const auto& [m, c] : f.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale = Rational(den) / Rational(num);
  scale.canonicalize();
  if (sgn(f.leading_term(MonomialOrder::graded(f.nvars())).second) < 0) scale = -scale;
  return f.scaled(scale);
}

bool operator==(const Jet& a, const Jet& b) { return a.vars_ == b.vars_ && a.terms_ == b.terms_; }

}  // namespace germforge
