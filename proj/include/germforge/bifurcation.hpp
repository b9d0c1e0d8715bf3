#pragma once

#include "germforge/jet.hpp"
#include "germforge/rational.hpp"
#include "germforge/transition.hpp"
#include "germforge/unfolding.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace germforge {

// ---- persistent region classification ------------------------------------------

enum class Granularity { Short, Intermediate, Complete };

std::string granularity_name(Granularity g);
std::optional<Granularity> parse_granularity(const std::string& s);

struct RegionRepresentative {
  std::vector<Rational> point;
  std::vector<int> signs;  // short: sign of the product; otherwise one per polynomial
  Granularity tag = Granularity::Complete;
  std::size_t size = 0;                   // grid points in the class
  std::vector<std::vector<Rational>> members;  // a few other grid points of the class
};

struct RegionCatalog {
  std::vector<std::string> params;
  std::vector<Jet> polynomials;
  std::vector<Interval> box;
  std::size_t grid = 0;
  std::vector<RegionRepresentative> representatives;
  std::vector<std::string> warnings;

  std::string to_text(bool unicode) const;
};

struct RegionOptions {
  std::vector<Interval> box;  // per parameter; empty: [-1, 1] each; lo == hi fixes it
  std::size_t grid = 41;      // points per free axis
  Granularity granularity = Granularity::Complete;
  std::size_t members = 3;
};

/// One parameter point per persistent class on a uniform rational grid.
RegionCatalog classify_regions(const TransitionSet& sigma, const RegionOptions& opts = {});

// ---- bifurcation diagrams ------------------------------------------------------

struct Window {
  Interval lambda{-1, 1};
  Interval x{-1, 1};
};

/// Vertices are (lambda, x).
struct Polyline {
  std::vector<std::pair<double, double>> points;
  bool closed = false;
};

struct Diagram {
  std::vector<Polyline> curves;
  Window window;
  std::vector<Rational> alpha;
};

struct DiagramOptions {
  Window window;
  std::size_t resolution = 400;
};

/// G(x, lambda, alpha) as a polynomial in (x, lambda).
Jet specialize(const UnfoldingGerm& G, const std::vector<Rational>& alpha);

/// Zero set of G(., ., alpha) in the window by marching squares.
Diagram bifurcation_diagram(const UnfoldingGerm& G, const std::vector<Rational>& alpha,
                            const DiagramOptions& opts = {});

/// Zero set of g(v, h) with v vertical (window.x) and h horizontal
/// (window.lambda); vertices are (h, v).
Diagram zero_set(const Jet& g, const DiagramOptions& opts);

/// Crossings of the diagram with the vertical line at lambda.
int diagram_root_count(const Diagram& d, double lambda);

/// Distinct real roots of g(., lambda) in [x.lo, x.hi], or on the line.
int exact_root_count(const Jet& g, const Rational& lambda, const std::optional<Interval>& x = std::nullopt);

/// Root counts along a lambda sweep and the events between them: "+2@i" or
/// "-2@i" for a pair of zeros created or annihilated above i other zeros,
/// "+lo"/"-lo"/"+hi"/"-hi" for a zero entering or leaving through an edge of
/// the x window.
struct RootSignature {
  std::vector<int> counts;
  std::vector<std::string> events;
  bool degenerate = false;

  std::string to_string() const;
  friend bool operator==(const RootSignature&, const RootSignature&) = default;
};

/// Signature over the window (diagram as drawn).
RootSignature window_signature(const Jet& g, const Window& w);
/// Signature over all lambda and x: the combinatorial type of the zero set.
RootSignature global_signature(const Jet& g);

// ---- rendering -----------------------------------------------------------------

/// SVG colors: B blue, H green, D and boundary components in reds.
std::string component_color(const std::string& name);

struct SliceOptions {
  std::vector<Rational> fixed;  // values of parameters 3.. (default 0)
  Interval h{-1, 1}, v{-1, 1};  // ranges of parameters 1 and 2
  std::size_t resolution = 300;
};

struct SliceCurve {
  std::string component;
  Polyline line;  // (alpha1, alpha2) vertices
};

/// Transition set curves in the (alpha1, alpha2) plane; side conditions are
/// applied to the vertices.
std::vector<SliceCurve> transition_slice(const TransitionSet& sigma, const SliceOptions& opts = {});

std::string render_slice_svg(const TransitionSet& sigma, const std::vector<SliceCurve>& curves,
                             const SliceOptions& opts, const std::string& title = "");
/// Header "component,alpha1,...,alphap".
std::string render_slice_csv(const TransitionSet& sigma, const std::vector<SliceCurve>& curves,
                             const SliceOptions& opts);
std::string render_diagram_svg(const Diagram& d, const std::string& title = "");
/// Header "curve_id,lambda,x".
std::string render_diagram_csv(const Diagram& d);

/// Frames "frame_0001.svg", ... of the slice at alpha3 = sweep values, plus
/// "index.txt" listing them; returns the frame file names.
std::vector<std::string> render_slice_frames(const TransitionSet& sigma, const std::vector<Rational>& sweep,
                                             const SliceOptions& opts, const std::string& directory);

}  // namespace germforge
