#include "test_util.hpp"

#include "germforge/bifurcation.hpp"
#include "germforge/expr.hpp"
#include "germforge/sturm.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

using namespace germforge;

namespace {

const VarList V3{"x", "lambda", "alpha1", "alpha2", "alpha3"};
const char* const kWinged = "x^4 - lambda*x + alpha1 + alpha2*lambda + alpha3*x^2";

UnfoldingGerm germ(const std::string& s, const VarList& v = V3) {
  return parametric_germ(expand_polynomial(parse_germ(s, v), v));
}

TransitionSet hyperplane_set() {
  TransitionSet t;
  t.params = {"alpha1"};
  TransitionComponent c;
  c.name = "B";
  TransitionPiece p;
  p.equations = {Jet::variable(VarList{"alpha1"}, 0)};
  c.pieces = {p};
  t.components = {c};
  return t;
}

void check_vertices(const Diagram& d, const Jet& g) {
  for (const auto& pl : d.curves)
    for (const auto& [l, x] : pl.points) CHECK(std::fabs(g.eval(std::vector<double>{x, l})) <= 1e-9);
}

void check_counts(const Diagram& d, const Jet& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(d.window.lambda.lo.get_d(), d.window.lambda.hi.get_d());
  for (int i = 0; i < 25; ++i) {
    const double l = u(rng);
    CHECK(diagram_root_count(d, l) == exact_root_count(g, Rational(l), d.window.x));
  }
}

}  // namespace

TEST_CASE("sturm sequences") {
  // (x - 1)(x + 2)(x - 1/2)^2 (x^2 + 1)
  UPoly p{1};
  for (UPoly f : {UPoly{-1, 1}, UPoly{2, 1}, UPoly{Rational(-1, 2), 1}, UPoly{Rational(-1, 2), 1}, UPoly{1, 0, 1}}) {
    UPoly q(p.size() + f.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j) q[i + j] += p[i] * f[j];
    p = q;
  }
  const SturmSequence s(p);
  CHECK(s.count_all() == 3);
  CHECK(s.count(0, 1) == 2);
  CHECK(s.count(-3, 0) == 1);
  const auto r = s.roots(-3, 3);
  REQUIRE(r.size() == 3);
  CHECK(r[0] == doctest::Approx(-2).epsilon(1e-12));
  CHECK(r[1] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(r[2] == doctest::Approx(1).epsilon(1e-12));
  CHECK(root_bound(p) > 2);
}

TEST_CASE("empty transition set has one class at the origin") {
  TransitionSet t;
  t.params = {"alpha1", "alpha2"};
  const auto c = classify_regions(t);
  REQUIRE(c.representatives.size() == 1);
  CHECK(c.representatives[0].point == std::vector<Rational>{0, 0});
}

TEST_CASE("a hyperplane splits the box in two") {
  for (auto g : {Granularity::Short, Granularity::Intermediate, Granularity::Complete}) {
    RegionOptions o;
    o.granularity = g;
    const auto c = classify_regions(hyperplane_set(), o);
    REQUIRE(c.representatives.size() == 2);
    CHECK(c.representatives[0].signs == std::vector<int>{1});
    CHECK(c.representatives[1].signs == std::vector<int>{-1});
    CHECK(sgn(c.representatives[0].point[0]) > 0);
    CHECK(sgn(c.representatives[1].point[0]) < 0);
  }
}

TEST_CASE("winged cusp slice classes") {
  const auto G = germ(kWinged);
  const auto sigma = transition_set(G);
  RegionOptions o;
  o.box = {{-1, 1}, {-1, 1}, {-1, -1}};
  const auto c = classify_regions(sigma, o);
  CHECK(c.representatives.size() >= 7);
  std::set<std::string> types;
  for (const auto& r : c.representatives) {
    for (int s : r.signs) CHECK(s != 0);
    const auto sig = global_signature(specialize(G, r.point));
    types.insert(sig.to_string());
    for (const auto& m : r.members) {
      INFO(m[0].get_str() << "," << m[1].get_str() << " vs rep " << r.point[0].get_str() << "," << r.point[1].get_str() << " "
           << sig.to_string() << " / " << global_signature(specialize(G, m)).to_string());
      CHECK(global_signature(specialize(G, m)) == sig);
    }
  }
  CHECK(types.size() >= 7);

  o.granularity = Granularity::Intermediate;
  const auto ci = classify_regions(sigma, o);
  std::set<std::vector<int>> vecs;
  for (const auto& r : ci.representatives) vecs.insert(r.signs);
  CHECK(vecs.size() == ci.representatives.size());
  o.granularity = Granularity::Short;
  CHECK(classify_regions(sigma, o).representatives.size() <= 2);
}

TEST_CASE("coarse grid warning") {
  // a small circle around the origin is missed by the corner grid
  const VarList A{"alpha1", "alpha2"};
  TransitionSet t;
  t.params = {"alpha1", "alpha2"};
  TransitionComponent c;
  c.name = "H";
  TransitionPiece p;
  p.equations = {expand_polynomial(parse_germ("100*alpha1^2 + 100*alpha2^2 - 1", A), A)};
  c.pieces = {p};
  t.components = {c};
  RegionOptions o;
  o.grid = 2;
  const auto cat = classify_regions(t, o);
  CHECK(cat.warnings.size() == 1);
  CHECK(cat.representatives.size() == 1);
  o.grid = 41;
  const auto fine = classify_regions(t, o);
  CHECK(fine.warnings.empty());
  CHECK(fine.representatives.size() == 2);
}

TEST_CASE("fold diagram") {
  const VarList v{"x", "lambda"};
  const auto G = germ("x^2 - lambda", v);
  const auto d = bifurcation_diagram(G, {});
  REQUIRE(d.curves.size() == 1);
  double xmin = 1, xmax = -1;
  for (const auto& [l, x] : d.curves[0].points) {
    CHECK(l >= -1e-9);  // opens towards positive lambda
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
  }
  CHECK(xmin < -0.9);
  CHECK(xmax > 0.9);
  check_vertices(d, specialize(G, {}));
  check_counts(d, specialize(G, {}), 1);
}

TEST_CASE("pitchfork diagram") {
  const VarList v{"x", "lambda", "alpha1", "alpha2"};
  const auto G = germ("x^3 - lambda*x + alpha1 + alpha2*x^2", v);
  const auto d = bifurcation_diagram(G, {0, 0});
  const Jet g = specialize(G, {0, 0});
  check_vertices(d, g);
  check_counts(d, g, 2);
  // x (x^2 - lambda): one zero for lambda < 0, three for lambda > 0
  for (double l : {-0.7, -0.2, 0.3, 0.8}) {
    const int expect = l < 0 ? 1 : 3;
    CHECK(diagram_root_count(d, l) == expect);
    CHECK(exact_root_count(g, Rational(l), Interval{-1, 1}) == expect);
  }
  CHECK(window_signature(g, {}).to_string() == "1 [+2@0] 3");
}

TEST_CASE("diagrams of winged cusp classes") {
  const auto G = germ(kWinged);
  RegionOptions o;
  o.box = {{-1, 1}, {-1, 1}, {-1, -1}};
  std::uint64_t seed = 10;
  DiagramOptions dopt;
  dopt.resolution = 200;
  for (const auto& r : classify_regions(transition_set(G), o).representatives) {
    const auto d = bifurcation_diagram(G, r.point, dopt);
    const Jet g = specialize(G, r.point);
    check_vertices(d, g);
    check_counts(d, g, ++seed);
  }
}

TEST_CASE("transition set picture") {
  const auto sigma = transition_set(germ(kWinged));
  SliceOptions o;
  o.fixed = {-1};
  const auto curves = transition_slice(sigma, o);
  const std::string svg = render_slice_svg(sigma, curves, o);
  CHECK(svg.find("#0000FF") != std::string::npos);
  CHECK(svg.find("#008000") != std::string::npos);
  CHECK(svg.find("#FF0000") != std::string::npos);
  // every CSV vertex lies on its component
  std::istringstream csv(render_slice_csv(sigma, curves, o));
  std::string line;
  std::getline(csv, line);
  CHECK(line == "component,alpha1,alpha2,alpha3");
  std::size_t rows = 0;
  while (std::getline(csv, line)) {
    std::istringstream ls(line);
    std::string name, cell;
    std::getline(ls, name, ',');
    std::vector<double> a;
    while (std::getline(ls, cell, ',')) a.push_back(std::stod(cell));
    CHECK(component_residual(*sigma.find(name), a) <= 1e-9);
    ++rows;
  }
  CHECK(rows > 100);
  CHECK(render_slice_svg(sigma, curves, o) == svg);
}

TEST_CASE("empty picture has axes only") {
  const VarList v{"x", "lambda", "alpha1", "alpha2"};
  const auto sigma = transition_set(germ("x^2 - lambda + alpha1 + alpha2*x", v));
  const auto curves = transition_slice(sigma);
  CHECK(curves.empty());
  const std::string svg = render_slice_svg(sigma, curves, {});
  CHECK(svg.find("<path") == std::string::npos);
  CHECK(svg.find("<line") != std::string::npos);
}

TEST_CASE("animation frames") {
  const auto sigma = transition_set(germ("x^5 - lambda + alpha1*x + alpha2*x^2 + alpha3*x^3"));
  const auto dir = std::filesystem::temp_directory_path() / "germforge_frames_test";
  std::filesystem::remove_all(dir);
  SliceOptions o;
  o.resolution = 60;
  const std::vector<Rational> sweep{-1, Rational(-1, 2), 0, Rational(1, 2)};
  const auto names = render_slice_frames(sigma, sweep, o, dir.string());
  REQUIRE(names.size() == 4);
  CHECK(names[0] == "frame_0001.svg");
  for (const auto& n : names) CHECK(std::filesystem::exists(dir / n));
  std::ifstream idx(dir / "index.txt");
  std::string first;
  std::getline(idx, first);
  CHECK(first == "frame_0001.svg alpha3=-1");
  std::filesystem::remove_all(dir);
}

TEST_CASE("diagram csv") {
  const VarList v{"x", "lambda"};
  const auto d = bifurcation_diagram(germ("x^2 - lambda", v), {}, {{}, 20});
  const std::string csv = render_diagram_csv(d);
  CHECK(csv.rfind("curve_id,lambda,x\n", 0) == 0);
  CHECK(render_diagram_svg(d).find("<path") != std::string::npos);
}
