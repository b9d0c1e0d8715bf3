#include "germforge/bifurcation.hpp"

#include "germforge/sturm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <stdexcept>

namespace germforge {

std::string granularity_name(Granularity g) {
  switch (g) {
    case Granularity::Short: return "short";
    case Granularity::Intermediate: return "intermediate";
    case Granularity::Complete: return "complete";
  }
  return "complete";
}

std::optional<Granularity> parse_granularity(const std::string& s) {
  if (s == "short") return Granularity::Short;
  if (s == "intermediate") return Granularity::Intermediate;
  if (s == "complete") return Granularity::Complete;
  return std::nullopt;
}

namespace {

struct Grid {
  std::vector<std::vector<Rational>> axis;  // values per parameter
  std::vector<std::size_t> stride;
  std::size_t total = 1;

  std::vector<Rational> point(std::size_t idx) const {
    std::vector<Rational> p(axis.size());
    for (std::size_t i = 0; i < axis.size(); ++i) p[i] = axis[i][(idx / stride[i]) % axis[i].size()];
    return p;
  }
  std::size_t coord(std::size_t idx, std::size_t i) const { return (idx / stride[i]) % axis[i].size(); }
};

Grid make_grid(const std::vector<Interval>& box, std::size_t n) {
  Grid g;
  for (const auto& iv : box) {
    std::vector<Rational> vals;
    if (iv.lo == iv.hi || n < 2) {
      vals.push_back(iv.lo == iv.hi ? iv.lo : (iv.lo + iv.hi) / 2);
    } else {
      for (std::size_t j = 0; j < n; ++j) {
        Rational t(static_cast<long>(j), static_cast<long>(n - 1));
        t.canonicalize();
        vals.push_back(iv.lo + (iv.hi - iv.lo) * t);
      }
    }
    g.axis.push_back(std::move(vals));
  }
  g.stride.assign(box.size(), 1);
  for (std::size_t i = 0; i < box.size(); ++i) {
    g.stride[i] = g.total;
    g.total *= g.axis[i].size();
  }
  return g;
}

int exact_sign(const Jet& p, const std::vector<Rational>& q, const std::vector<double>& qd) {
  const double v = p.eval(qd);
  const double s = p.eval_scale(qd);
  if (std::fabs(v) > 1e-9 * s) return v > 0 ? 1 : -1;
  return sgn(p.eval(q));
}

std::string sign_char(int s) { return s > 0 ? "+" : s < 0 ? "-" : "0"; }

// Side conditions (alternatives) under which a sign change of a polynomial is
// a crossing of the transition set.
using SideAlternatives = std::vector<std::vector<SideCondition>>;

bool holds(const SideCondition& c, const std::vector<Rational>& q) {
  const int s = sgn(c.poly.eval(q));
  switch (c.rel) {
    case Relation::Eq: return s == 0;
    case Relation::Lt:
    case Relation::Le: return s <= 0;
    case Relation::Gt:
    case Relation::Ge: return s >= 0;
  }
  return true;
}

bool active(const SideAlternatives& alts, const std::vector<Rational>& q) {
  for (const auto& alt : alts)
    if (std::all_of(alt.begin(), alt.end(), [&](const auto& c) { return holds(c, q); })) return true;
  return false;
}

bool holds(const SideCondition& c, const std::vector<double>& q) {
  const double v = c.poly.eval(q);
  const double tol = 1e-12 * std::max(1.0, c.poly.eval_scale(q));
  switch (c.rel) {
    case Relation::Eq: return std::fabs(v) <= tol;
    case Relation::Lt:
    case Relation::Le: return v <= tol;
    case Relation::Gt:
    case Relation::Ge: return v >= -tol;
  }
  return true;
}

bool active(const SideAlternatives& alts, const std::vector<double>& q) {
  for (const auto& alt : alts)
    if (std::all_of(alt.begin(), alt.end(), [&](const auto& c) { return holds(c, q); })) return true;
  return false;
}

// Real zeros of each polynomial along the grid line through a point, parallel
// to one axis; cached per line.
class LineZeros {
 public:
  LineZeros(const Grid& g, const std::vector<Jet>& polys) : grid_(g), polys_(polys) {}

  const std::vector<std::vector<double>>& at(std::size_t idx, std::size_t axis) {
    const std::size_t base = idx - grid_.coord(idx, axis) * grid_.stride[axis];
    auto [it, fresh] = cache_.try_emplace({axis, base});
    if (!fresh) return it->second;
    const auto q = grid_.point(base);
    const auto& ax = grid_.axis[axis];
    for (const auto& p : polys_) {
      UPoly u(p.degree_in(axis) + 1);
      for (const auto& [m, c] : p.terms()) {
        Rational t = c;
        for (std::size_t v = 0; v < q.size(); ++v)
          if (v != axis) t *= power(q[v], static_cast<int>(m[v]));
        u[m[axis]] += t;
      }
      trim(u);
      it->second.push_back(u.size() >= 2 ? SturmSequence(u).roots(ax.front(), ax.back()) : std::vector<double>{});
    }
    return it->second;
  }

 private:
  const Grid& grid_;
  const std::vector<Jet>& polys_;
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::vector<double>>> cache_;
};

}  // namespace

RegionCatalog classify_regions(const TransitionSet& sigma, const RegionOptions& opts) {
  RegionCatalog cat;
  cat.params = sigma.params;
  const std::size_t p = sigma.params.size();
  cat.box = opts.box.empty() ? std::vector<Interval>(p, Interval{-1, 1}) : opts.box;
  if (cat.box.size() != p) throw std::invalid_argument("box needs one interval per parameter");
  for (const auto& iv : cat.box)
    if (iv.lo > iv.hi) throw std::invalid_argument("box intervals must satisfy lo <= hi");
  cat.grid = opts.grid;

  std::vector<SideAlternatives> sides;
  std::vector<std::vector<std::string>> owners;
  for (const auto& c : sigma.components)
    for (const auto& piece : c.pieces) {
      if (piece.equations.size() != 1) continue;
      const Jet& e = piece.equations.front();
      auto it = std::find(cat.polynomials.begin(), cat.polynomials.end(), e);
      std::size_t i = it - cat.polynomials.begin();
      if (it == cat.polynomials.end()) {
        cat.polynomials.push_back(e);
        sides.emplace_back();
        owners.emplace_back();
      }
      sides[i].push_back(piece.side);
      if (std::find(owners[i].begin(), owners[i].end(), c.name) == owners[i].end()) owners[i].push_back(c.name);
    }
  const std::size_t np = cat.polynomials.size();

  const Grid grid = make_grid(cat.box, opts.grid);
  std::vector<std::vector<int>> signs(grid.total);
  std::vector<double> depth(grid.total, np ? std::numeric_limits<double>::infinity() : 0.0);
  std::vector<bool> valid(grid.total, true);
  for (std::size_t idx = 0; idx < grid.total; ++idx) {
    const auto q = grid.point(idx);
    std::vector<double> qd;
    for (const auto& v : q) qd.push_back(v.get_d());
    auto& sv = signs[idx];
    for (const auto& poly : cat.polynomials) {
      const int s = exact_sign(poly, q, qd);
      sv.push_back(s);
      if (s == 0) valid[idx] = false;
      const double sc = poly.eval_scale(qd);
      depth[idx] = std::min(depth[idx], sc > 0 ? std::fabs(poly.eval(qd)) / sc : 0.0);
    }
  }

  // class label per grid point
  std::vector<long> label(grid.total, -1);
  std::map<std::vector<int>, long> by_signs;
  long nlabels = 0;
  if (opts.granularity == Granularity::Complete) {
    LineZeros line_zeros(grid, cat.polynomials);
    std::vector<std::size_t> stack;
    for (std::size_t s = 0; s < grid.total; ++s) {
      if (!valid[s] || label[s] >= 0) continue;
      label[s] = nlabels;
      stack.push_back(s);
      while (!stack.empty()) {
        const std::size_t a = stack.back();
        stack.pop_back();
        const auto qa = grid.point(a);
        for (std::size_t i = 0; i < p; ++i) {
          const std::size_t c = grid.coord(a, i);
          for (int dir : {-1, 1}) {
            if ((dir < 0 && c == 0) || (dir > 0 && c + 1 >= grid.axis[i].size())) continue;
            const std::size_t b = dir < 0 ? a - grid.stride[i] : a + grid.stride[i];
            if (!valid[b] || label[b] >= 0) continue;
            // blocked when a polynomial vanishes on the edge where it belongs to the set
            bool blocked = false;
            const auto qb = grid.point(b);
            const auto& zeros = line_zeros.at(a, i);
            const double s0 = grid.axis[i][std::min(c, grid.coord(b, i))].get_d();
            const double s1 = grid.axis[i][std::max(c, grid.coord(b, i))].get_d();
            for (std::size_t k = 0; k < np && !blocked; ++k) {
              bool found = false;
              for (double r : zeros[k]) {
                if (r <= s0 || r >= s1) continue;
                found = true;
                std::vector<double> at;
                for (const auto& v : qa) at.push_back(v.get_d());
                at[i] = r;
                blocked = blocked || active(sides[k], at);
              }
              if (!found && signs[a][k] != signs[b][k]) blocked = active(sides[k], qa) || active(sides[k], qb);
            }
            if (blocked) continue;
            label[b] = nlabels;
            stack.push_back(b);
          }
        }
      }
      ++nlabels;
    }
  } else {
    for (std::size_t s = 0; s < grid.total; ++s) {
      if (!valid[s]) continue;
      std::vector<int> key = signs[s];
      if (opts.granularity == Granularity::Short) {
        int prod = 1;
        for (int v : key) prod *= v;
        key = {prod};
      }
      auto [it, fresh] = by_signs.emplace(key, nlabels);
      if (fresh) ++nlabels;
      label[s] = it->second;
    }
  }

  // representative: deepest point, then nearest the box center
  std::vector<std::vector<std::size_t>> classes(nlabels);
  for (std::size_t s = 0; s < grid.total; ++s)
    if (label[s] >= 0) classes[label[s]].push_back(s);
  auto centrality = [&](std::size_t idx) {
    double d = 0;
    for (std::size_t i = 0; i < p; ++i) {
      const double n = static_cast<double>(grid.axis[i].size() - 1);
      if (n > 0) d += std::pow(grid.coord(idx, i) / n - 0.5, 2);
    }
    return d;
  };
  for (auto& cls : classes) {
    std::size_t best = cls.front();
    for (std::size_t s : cls) {
      if (depth[s] > depth[best] + 1e-15) best = s;
      else if (std::fabs(depth[s] - depth[best]) <= 1e-15 && centrality(s) < centrality(best) - 1e-12) best = s;
    }
    RegionRepresentative r;
    r.point = grid.point(best);
    r.tag = opts.granularity;
    r.size = cls.size();
    if (opts.granularity == Granularity::Short) {
      int prod = 1;
      for (int v : signs[best]) prod *= v;
      r.signs = {prod};
    } else {
      r.signs = signs[best];
    }
    for (std::size_t j = 1; j <= opts.members && j < cls.size(); ++j) {
      const std::size_t s = cls[(j * cls.size()) / (opts.members + 1)];
      if (s != best) r.members.push_back(grid.point(s));
    }
    cat.representatives.push_back(std::move(r));
  }
  std::sort(cat.representatives.begin(), cat.representatives.end(),
            [](const auto& a, const auto& b) { return a.signs != b.signs ? a.signs > b.signs : a.point < b.point; });

  // a polynomial with one sign on the grid but a zero in the box
  std::vector<std::string> free;
  std::vector<std::size_t> free_idx;
  for (std::size_t i = 0; i < p; ++i)
    if (cat.box[i].lo < cat.box[i].hi) {
      free.push_back(cat.params[i]);
      free_idx.push_back(i);
    }
  double radius = 1;
  for (const auto& iv : cat.box) radius = std::max({radius, std::fabs(iv.lo.get_d()), std::fabs(iv.hi.get_d())});
  for (std::size_t k = 0; k < np; ++k) {
    int seen = 0;
    bool changes = false;
    for (std::size_t s = 0; s < grid.total; ++s) {
      const int v = signs[s][k];
      if (v == 0) {
        changes = true;
        break;
      }
      if (seen && v != seen) {
        changes = true;
        break;
      }
      seen = v;
    }
    if (changes || free.empty()) continue;
    Jet restricted = cat.polynomials[k];
    for (std::size_t i = 0; i < p; ++i)
      if (cat.box[i].lo == cat.box[i].hi) restricted = restricted.substitute(i, cat.box[i].lo);
    if (restricted.is_constant()) continue;
    bool inside = false;
    for (const auto& w : sample_witnesses({restricted}, free, 5, 7 + k, radius)) {
      bool ok = true;
      for (std::size_t j = 0; j < free.size(); ++j) {
        const auto& iv = cat.box[free_idx[j]];
        ok = ok && w[j] >= iv.lo.get_d() && w[j] <= iv.hi.get_d();
      }
      inside = inside || ok;
    }
    if (inside) {
      std::string names;
      for (const auto& o : owners[k]) names += (names.empty() ? "" : ", ") + o;
      cat.warnings.push_back("Warning: the grid is too coarse to resolve " + names + " (" +
                             cat.polynomials[k].to_string() + " = 0); refine the grid.");
    }
  }
  return cat;
}

std::string RegionCatalog::to_text(bool unicode) const {
  std::string tuple = "(";
  for (std::size_t i = 0; i < params.size(); ++i)
    tuple += (i ? ", " : "") + (unicode ? unicode_name(params[i]) : params[i]);
  tuple += ")";
  std::string s;
  for (const auto& w : warnings) s += w + "\n";
  for (const auto& r : representatives) {
    s += tuple + " = (";
    for (std::size_t i = 0; i < r.point.size(); ++i) s += (i ? ", " : "") + r.point[i].get_str();
    s += ")  signs ";
    for (int v : r.signs) s += sign_char(v);
    if (r.signs.empty()) s += "none";
    s += "\n";
  }
  return s;
}

}  // namespace germforge
