#include "germforge/bifurcation.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace germforge {

std::string component_color(const std::string& name) {
  if (name == "B" || name == "L_B") return "#0000FF";
  if (name == "H" || name == "L_H") return "#008000";
  if (name == "D" || name == "G_D") return "#FF0000";
  if (name == "L_C") return "#8B0000";
  if (name == "L_SH") return "#B22222";
  if (name == "L_SV") return "#DC143C";
  if (name == "L_T") return "#FF4500";
  if (name == "G_1") return "#CD5C5C";
  if (name == "G_2") return "#FF6347";
  return "#000000";
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", std::fabs(v) < 5e-4 ? 0.0 : v);
  return buf;
}

std::string csv_num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '<') o += "&lt;";
    else if (c == '>') o += "&gt;";
    else if (c == '&') o += "&amp;";
    else o += c;
  }
  return o;
}

constexpr double kSize = 600, kMargin = 50;

struct Frame {
  double h0, h1, v0, v1;
  double px(double h) const { return kMargin + (h - h0) / (h1 - h0) * (kSize - 2 * kMargin); }
  double py(double v) const { return kSize - kMargin - (v - v0) / (v1 - v0) * (kSize - 2 * kMargin); }
};

std::string svg_open(const Frame& f, const std::string& hlabel, const std::string& vlabel, const std::string& title) {
  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"600\" height=\"600\" viewBox=\"0 0 600 600\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"#FFFFFF\"/>\n";
  s += "<rect x=\"" + num(kMargin) + "\" y=\"" + num(kMargin) + "\" width=\"" + num(kSize - 2 * kMargin) + "\" height=\"" +
       num(kSize - 2 * kMargin) + "\" fill=\"none\" stroke=\"#808080\"/>\n";
  if (f.h0 < 0 && f.h1 > 0)
    s += "<line x1=\"" + num(f.px(0)) + "\" y1=\"" + num(kMargin) + "\" x2=\"" + num(f.px(0)) + "\" y2=\"" +
         num(kSize - kMargin) + "\" stroke=\"#C0C0C0\"/>\n";
  if (f.v0 < 0 && f.v1 > 0)
    s += "<line x1=\"" + num(kMargin) + "\" y1=\"" + num(f.py(0)) + "\" x2=\"" + num(kSize - kMargin) + "\" y2=\"" +
         num(f.py(0)) + "\" stroke=\"#C0C0C0\"/>\n";
  s += "<text x=\"" + num(kSize / 2) + "\" y=\"" + num(kSize - 15) + "\" text-anchor=\"middle\" font-size=\"14\">" +
       escape(hlabel) + " [" + num(f.h0) + ", " + num(f.h1) + "]</text>\n";
  s += "<text x=\"15\" y=\"" + num(kSize / 2) + "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 15 " +
       num(kSize / 2) + ")\">" + escape(vlabel) + " [" + num(f.v0) + ", " + num(f.v1) + "]</text>\n";
  if (!title.empty())
    s += "<text x=\"" + num(kSize / 2) + "\" y=\"30\" text-anchor=\"middle\" font-size=\"14\">" + escape(title) + "</text>\n";
  return s;
}

std::string svg_path(const Frame& f, const Polyline& pl, const std::string& color, const std::string& cls) {
  std::string d;
  for (std::size_t i = 0; i < pl.points.size(); ++i)
    d += (i ? " L " : "M ") + num(f.px(pl.points[i].first)) + " " + num(f.py(pl.points[i].second));
  return "<path class=\"" + cls + "\" d=\"" + d + "\" fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\"/>\n";
}

bool side_ok(const SideCondition& c, const std::vector<double>& a) {
  const double v = c.poly.eval(a);
  const double tol = 1e-12 * std::max(1.0, c.poly.eval_scale(a));
  switch (c.rel) {
    case Relation::Eq: return std::fabs(v) <= tol;
    case Relation::Lt:
    case Relation::Le: return v <= tol;
    case Relation::Gt:
    case Relation::Ge: return v >= -tol;
  }
  return true;
}

std::vector<double> full_point(const SliceOptions& o, std::size_t p, double h, double v) {
  std::vector<double> a{h, v};
  for (std::size_t i = 2; i < p; ++i) a.push_back(i - 2 < o.fixed.size() ? o.fixed[i - 2].get_d() : 0.0);
  return a;
}

}  // namespace

std::vector<SliceCurve> transition_slice(const TransitionSet& sigma, const SliceOptions& opts) {
  const std::size_t p = sigma.params.size();
  if (p < 2) throw std::invalid_argument("a transition set picture needs at least two parameters");
  std::vector<SliceCurve> out;
  DiagramOptions d;
  d.window.lambda = opts.h;
  d.window.x = opts.v;
  d.resolution = opts.resolution;
  const VarList plane{sigma.params[1], sigma.params[0]};
  for (const auto& c : sigma.components)
    for (const auto& piece : c.pieces) {
      if (piece.equations.size() != 1) continue;
      Jet q = piece.equations.front();
      for (std::size_t i = 2; i < p; ++i) q = q.substitute(i, i - 2 < opts.fixed.size() ? opts.fixed[i - 2] : Rational(0));
      if (q.is_constant()) continue;
      const Diagram z = zero_set(q.embedded(plane), d);
      for (const auto& pl : z.curves) {
        // split where a side condition fails
        Polyline cur;
        auto flush = [&] {
          if (cur.points.size() >= 2) out.push_back({c.name, cur});
          cur = Polyline{};
        };
        for (const auto& pt : pl.points) {
          const auto a = full_point(opts, p, pt.first, pt.second);
          bool ok = true;
          for (const auto& s : piece.side) ok = ok && side_ok(s, a);
          if (ok) cur.points.push_back(pt);
          else flush();
        }
        if (cur.points.size() == pl.points.size()) cur.closed = pl.closed;
        flush();
      }
    }
  return out;
}

std::string render_slice_svg(const TransitionSet& sigma, const std::vector<SliceCurve>& curves, const SliceOptions& opts,
                             const std::string& title) {
  const Frame f{opts.h.lo.get_d(), opts.h.hi.get_d(), opts.v.lo.get_d(), opts.v.hi.get_d()};
  const std::string hl = sigma.params.size() > 0 ? unicode_name(sigma.params[0]) : "";
  const std::string vl = sigma.params.size() > 1 ? unicode_name(sigma.params[1]) : "";
  std::string s = svg_open(f, hl, vl, title);
  for (const auto& c : curves) s += svg_path(f, c.line, component_color(c.component), c.component);
  // legend for the components present
  double y = 70;
  for (const auto& comp : sigma.components) {
    bool present = false;
    for (const auto& c : curves) present = present || c.component == comp.name;
    if (!present) continue;
    s += "<text x=\"" + num(kSize - kMargin - 5) + "\" y=\"" + num(y) + "\" text-anchor=\"end\" font-size=\"13\" fill=\"" +
         component_color(comp.name) + "\">" + escape(component_symbol(comp.name, true)) + "</text>\n";
    y += 16;
  }
  return s + "</svg>\n";
}

std::string render_slice_csv(const TransitionSet& sigma, const std::vector<SliceCurve>& curves, const SliceOptions& opts) {
  std::string s = "component";
  for (const auto& p : sigma.params) s += "," + p;
  s += "\n";
  for (const auto& c : curves)
    for (const auto& pt : c.line.points) {
      s += c.component;
      for (double v : full_point(opts, sigma.params.size(), pt.first, pt.second)) s += "," + csv_num(v);
      s += "\n";
    }
  return s;
}

std::string render_diagram_svg(const Diagram& d, const std::string& title) {
  const Frame f{d.window.lambda.lo.get_d(), d.window.lambda.hi.get_d(), d.window.x.lo.get_d(), d.window.x.hi.get_d()};
  std::string s = svg_open(f, "λ", "x", title);
  for (const auto& pl : d.curves) s += svg_path(f, pl, "#000000", "zero");
  return s + "</svg>\n";
}

std::string render_diagram_csv(const Diagram& d) {
  std::string s = "curve_id,lambda,x\n";
  for (std::size_t i = 0; i < d.curves.size(); ++i)
    for (const auto& pt : d.curves[i].points) s += std::to_string(i) + "," + csv_num(pt.first) + "," + csv_num(pt.second) + "\n";
  return s;
}

std::vector<std::string> render_slice_frames(const TransitionSet& sigma, const std::vector<Rational>& sweep,
                                             const SliceOptions& opts, const std::string& directory) {
  if (sigma.params.size() < 3) throw std::invalid_argument("an animation needs a third parameter to sweep");
  std::filesystem::create_directories(directory);
  std::vector<std::string> names;
  std::string index;
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    SliceOptions o = opts;
    if (o.fixed.empty()) o.fixed.push_back(0);
    o.fixed[0] = sweep[i];
    char buf[32];
    std::snprintf(buf, sizeof buf, "frame_%04zu.svg", i + 1);
    const std::string title = unicode_name(sigma.params[2]) + " = " + sweep[i].get_str();
    std::ofstream(directory + "/" + buf) << render_slice_svg(sigma, transition_slice(sigma, o), o, title);
    names.push_back(buf);
    index += std::string(buf) + " " + sigma.params[2] + "=" + sweep[i].get_str() + "\n";
  }
  std::ofstream(directory + "/index.txt") << index;
  return names;
}

}  // namespace germforge
