#include "germforge/bifurcation.hpp"

#include "germforge/polytools.hpp"
#include "germforge/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace germforge {

Jet specialize(const UnfoldingGerm& G, const std::vector<Rational>& alpha) {
  const Jet body = G.body.as_exact();
  if (alpha.size() + 2 != body.nvars())
    throw std::invalid_argument("expected " + std::to_string(body.nvars() - 2) + " parameter values");
  Jet g = body;
  for (std::size_t i = 0; i < alpha.size(); ++i) g = g.substitute(i + 2, alpha[i]);
  return g.embedded(VarList{body.vars()[0], body.vars()[1]});
}

namespace {

// Coefficients of g(x, lambda) in the variable `var` with the other fixed.
UPoly slice(const Jet& g, std::size_t var, const Rational& other) {
  const std::size_t o = 1 - var;
  UPoly p(g.degree_in(var) + 1);
  for (const auto& [m, c] : g.terms()) p[m[var]] += c * power(other, static_cast<int>(m[o]));
  trim(p);
  return p;
}

UPoly univariate(const Jet& p) {
  UPoly u(p.degree() + 1);
  for (const auto& [m, c] : p.terms()) u[m[0]] += c;
  trim(u);
  return u;
}

double bisect_edge(const Jet& g, std::pair<double, double> a, std::pair<double, double> b, double va) {
  // parameter t in [0, 1] of the zero on the segment a-b, to double precision
  double lo = 0, hi = 1, vlo = va;
  auto at = [&](double t) {
    return std::vector<double>{a.second + t * (b.second - a.second), a.first + t * (b.first - a.first)};
  };
  double mid = 0.5;
  for (int it = 0; it < 200 && hi - lo > 1e-17; ++it) {
    mid = 0.5 * (lo + hi);
    const double v = g.eval(at(mid));
    if (v == 0) break;
    if ((v > 0) == (vlo > 0)) {
      lo = mid;
      vlo = v;
    } else {
      hi = mid;
    }
  }
  return mid;
}

}  // namespace

Diagram bifurcation_diagram(const UnfoldingGerm& G, const std::vector<Rational>& alpha, const DiagramOptions& opts) {
  Diagram d = zero_set(specialize(G, alpha), opts);
  d.alpha = alpha;
  return d;
}

Diagram zero_set(const Jet& g, const DiagramOptions& opts) {
  Diagram d;
  d.window = opts.window;
  const std::size_t n = std::max<std::size_t>(opts.resolution, 2);
  const double l0 = opts.window.lambda.lo.get_d(), l1 = opts.window.lambda.hi.get_d();
  const double x0 = opts.window.x.lo.get_d(), x1 = opts.window.x.hi.get_d();
  auto lam = [&](std::size_t i) { return l0 + (l1 - l0) * static_cast<double>(i) / static_cast<double>(n - 1); };
  auto xv = [&](std::size_t j) { return x0 + (x1 - x0) * static_cast<double>(j) / static_cast<double>(n - 1); };
  std::vector<double> v(n * n);
  auto val = [&](std::size_t i, std::size_t j) -> double& { return v[i * n + j]; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double w = g.eval(std::vector<double>{xv(j), lam(i)});
      if (w == 0) w = 1e-300;  // zero counts as positive
      val(i, j) = w;
    }

  // zero on each sign-changing edge; edge ids: 2*(i*n+j) along lambda, +1 along x
  std::map<std::size_t, std::pair<double, double>> roots;
  auto edge_root = [&](std::size_t i, std::size_t j, bool along_x) -> std::size_t {
    const std::size_t id = 2 * (i * n + j) + (along_x ? 1 : 0);
    if (!roots.count(id)) {
      const std::pair<double, double> a{lam(i), xv(j)};
      const std::pair<double, double> b = along_x ? std::pair{lam(i), xv(j + 1)} : std::pair{lam(i + 1), xv(j)};
      const double t = bisect_edge(g, a, b, val(i, j));
      roots[id] = {a.first + t * (b.first - a.first), a.second + t * (b.second - a.second)};
    }
    return id;
  };
  std::multimap<std::size_t, std::size_t> adj;
  auto link = [&](std::size_t a, std::size_t b) {
    adj.emplace(a, b);
    adj.emplace(b, a);
  };
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < n; ++j) {
      const double a = val(i, j), b = val(i + 1, j), c = val(i + 1, j + 1), e = val(i, j + 1);
      const bool sa = a > 0, sb = b > 0, sc = c > 0, se = e > 0;
      std::vector<std::size_t> cut;
      std::size_t bottom = 0, right = 0, top = 0, left = 0;
      if (sa != sb) cut.push_back(bottom = edge_root(i, j, false));
      if (sb != sc) cut.push_back(right = edge_root(i + 1, j, true));
      if (sc != se) cut.push_back(top = edge_root(i, j + 1, false));
      if (se != sa) cut.push_back(left = edge_root(i, j, true));
      if (cut.size() == 2) {
        link(cut[0], cut[1]);
      } else if (cut.size() == 4) {
        const double center = g.eval(std::vector<double>{0.5 * (xv(j) + xv(j + 1)), 0.5 * (lam(i) + lam(i + 1))});
        if ((center > 0) == sa) {
          link(bottom, right);
          link(top, left);
        } else {
          link(bottom, left);
          link(top, right);
        }
      }
    }

  std::map<std::size_t, bool> used;
  auto walk = [&](std::size_t start) {
    Polyline pl;
    std::size_t prev = start, cur = start;
    used[start] = true;
    pl.points.push_back(roots[start]);
    for (;;) {
      std::size_t next = cur;
      bool found = false;
      for (auto [it, end] = adj.equal_range(cur); it != end; ++it)
        if (!used[it->second]) {
          next = it->second;
          found = true;
          break;
        }
      if (!found) {
        // closed when the start is a neighbour of the end
        for (auto [it, end] = adj.equal_range(cur); it != end; ++it)
          if (it->second == start && cur != start && prev != start) pl.closed = true;
        break;
      }
      used[next] = true;
      pl.points.push_back(roots[next]);
      prev = cur;
      cur = next;
    }
    if (pl.closed) pl.points.push_back(pl.points.front());
    if (pl.points.size() >= 2) d.curves.push_back(std::move(pl));
  };
  for (const auto& [id, pt] : roots)
    if (!used[id] && adj.count(id) == 1) walk(id);
  for (const auto& [id, pt] : roots)
    if (!used[id] && adj.count(id) > 0) walk(id);
  return d;
}

int diagram_root_count(const Diagram& d, double lambda) {
  int c = 0;
  for (const auto& pl : d.curves)
    for (std::size_t k = 0; k + 1 < pl.points.size(); ++k)
      if ((pl.points[k].first <= lambda) != (pl.points[k + 1].first <= lambda)) ++c;
  return c;
}

int exact_root_count(const Jet& g, const Rational& lambda, const std::optional<Interval>& x) {
  const UPoly p = slice(g, 0, lambda);
  if (p.empty()) return -1;
  const SturmSequence s(p);
  if (!x) return s.count_all();
  return s.count(x->lo, x->hi) + (sgn(eval(p, x->lo)) == 0 ? 1 : 0);
}

std::string RootSignature::to_string() const {
  if (degenerate) return "degenerate";
  std::string s;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    s += std::to_string(counts[i]);
    if (i < events.size()) s += " [" + events[i] + "] ";
  }
  return s;
}

namespace {

struct Event {
  double lambda;
  std::vector<std::string> kinds;  // "fold", "lo", "hi", "inf"
};

std::vector<double> real_roots_in(const UPoly& p, const Rational& lo, const Rational& hi) {
  if (p.size() < 2) return {};
  return SturmSequence(p).roots(lo, hi);
}

RootSignature signature(const Jet& g, const Interval& lrange, const std::optional<Interval>& xw) {
  RootSignature sig;
  const std::string xname = g.vars()[0];
  const Jet gx = g.derivative(0);
  std::vector<std::pair<UPoly, std::string>> cands;
  const auto folds = eliminate({g, gx}, {xname});
  if (folds.empty()) {
    sig.degenerate = true;
    return sig;
  }
  cands.emplace_back(univariate(folds.front()), "fold");
  if (xw) {
    for (auto [v, name] : {std::pair{xw->lo, "lo"}, std::pair{xw->hi, "hi"}}) {
      const UPoly e = slice(g, 1, v);
      if (e.empty()) {
        sig.degenerate = true;
        return sig;
      }
      cands.emplace_back(e, name);
    }
  } else {
    Jet lc(g.vars());
    const unsigned dx = g.degree_in(0);
    for (const auto& [m, c] : g.terms())
      if (m[0] == dx) lc.add_term(m, c);
    cands.emplace_back(univariate(lc.substitute(0, 1).embedded(VarList{g.vars()[1]})), "inf");
  }
  std::vector<Event> events;
  for (const auto& [p, kind] : cands)
    for (double r : real_roots_in(p, lrange.lo, lrange.hi)) {
      auto it = std::find_if(events.begin(), events.end(), [&](const Event& e) { return std::fabs(e.lambda - r) < 1e-9; });
      if (it == events.end()) events.push_back({r, {kind}});
      else it->kinds.push_back(kind);
    }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.lambda < b.lambda; });
  std::vector<double> cuts{lrange.lo.get_d()};
  for (const auto& e : events) cuts.push_back(e.lambda);
  cuts.push_back(lrange.hi.get_d());

  auto count_at = [&](double l) { return exact_root_count(g, Rational(l), xw); };
  auto roots_at = [&](double l) {
    const UPoly p = slice(g, 0, Rational(l));
    if (p.empty()) return std::vector<double>{};
    if (xw) return SturmSequence(p).roots(xw->lo, xw->hi);
    const Rational b = root_bound(p);
    return SturmSequence(p).roots(-b, b);
  };
  std::vector<int> counts;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) counts.push_back(count_at(0.5 * (cuts[k] + cuts[k + 1])));
  if (std::find(counts.begin(), counts.end(), -1) != counts.end()) {
    sig.degenerate = true;
    return sig;
  }
  sig.counts.push_back(counts.front());
  for (std::size_t k = 0; k < events.size(); ++k) {
    const int before = counts[k], after = counts[k + 1];
    if (before == after) continue;
    const Event& e = events[k];
    const double gap = std::min(e.lambda - cuts[k], cuts[k + 2] - e.lambda);
    const double delta = std::min(1e-6 * std::max(1.0, std::fabs(e.lambda)), 0.5 * gap);
    std::string label;
    const bool fold = std::find(e.kinds.begin(), e.kinds.end(), "fold") != e.kinds.end();
    if (e.kinds.size() == 1 && fold && std::abs(after - before) == 2) {
      // locate the double zero: zero of g_x where |g| is least
      const Rational le(e.lambda);
      const UPoly px = slice(gx, 0, le);
      double xf = 0, best = INFINITY;
      if (px.size() >= 2) {
        const Rational b = xw ? Rational(std::max(abs(xw->lo), abs(xw->hi))) : root_bound(px);
        for (double r : SturmSequence(px).roots(-b, b)) {
          const std::vector<double> pt{r, e.lambda};
          const double sc = g.eval_scale(pt);
          const double res = sc > 0 ? std::fabs(g.eval(pt)) / sc : 0;
          if (res < best) {
            best = res;
            xf = r;
          }
        }
      }
      const bool birth = after > before;
      const auto rs = roots_at(birth ? e.lambda + delta : e.lambda - delta);
      int below = 0;
      for (double r : rs)
        if (r < xf) ++below;
      label = std::string(birth ? "+2@" : "-2@") + std::to_string(std::max(below - 1, 0));
    } else if (e.kinds.size() == 1 && !fold) {
      label = (after > before ? "+" : "-") + e.kinds.front();
      if (std::abs(after - before) != 1) label += std::to_string(std::abs(after - before));
    } else {
      label = "d" + std::to_string(after - before);
      for (const auto& kd : e.kinds) label += ":" + kd;
    }
    sig.events.push_back(label);
    sig.counts.push_back(after);
  }
  return sig;
}

}  // namespace

RootSignature window_signature(const Jet& g, const Window& w) { return signature(g, w.lambda, w.x); }

RootSignature global_signature(const Jet& g) {
  // every event lies inside the root bounds of the candidate polynomials
  Rational b = 1;
  const auto folds = eliminate({g, g.derivative(0)}, {g.vars()[0]});
  if (!folds.empty()) b = std::max(b, root_bound(univariate(folds.front())));
  Jet lc(g.vars());
  const unsigned dx = g.degree_in(0);
  for (const auto& [m, c] : g.terms())
    if (m[0] == dx) lc.add_term(m, c);
  b = std::max(b, root_bound(univariate(lc.substitute(0, 1).embedded(VarList{g.vars()[1]}))));
  return signature(g, Interval{-b - 1, b + 1}, std::nullopt);
}

}  // namespace germforge
