#pragma once

#include "germforge/jet.hpp"
#include "germforge/rational.hpp"
#include "germforge/unfolding.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace germforge {

enum class Relation { Eq, Lt, Le, Gt, Ge };

/// "=", "<", "<=", ">", ">=" (unicode "≤", "≥").
std::string relation_symbol(Relation r, bool unicode);

struct SideCondition {
  Jet poly;
  Relation rel = Relation::Le;  // poly rel 0
};

/// A set {alpha | equations = 0, side conditions}.
struct TransitionPiece {
  std::vector<Jet> equations;  // empty: every parameter value
  std::vector<SideCondition> side;
};

struct TransitionComponent {
  std::string name;                     // "B", "H", "D", "L_C", "L_SH", ...
  std::vector<TransitionPiece> pieces;  // union; no pieces: empty set
  std::vector<std::string> notes;
  /// Systems whose solutions project onto the component; unknowns are the
  /// non-parameter variables of each system.
  std::vector<std::vector<Jet>> systems;

  bool is_empty() const { return pieces.empty(); }
  bool is_dense() const;
  /// Polynomials of the pieces cut out by a single equation.
  std::vector<Jet> hypersurfaces() const;
  /// "B := {(alpha1, alpha2) | alpha1 = 0}"; "B := {}" when empty.
  std::string to_text(const std::vector<std::string>& params, bool unicode) const;
};

struct TransitionSet {
  std::vector<std::string> params;
  std::vector<TransitionComponent> components;

  const TransitionComponent* find(const std::string& name) const;
  /// Distinct hypersurface polynomials over all components.
  std::vector<Jet> polynomials() const;
  std::string to_text(bool unicode) const;
};

/// Unicode letter for a component name ("B" -> "ℬ", "L_SH" -> "ℒ_SH").
std::string component_symbol(const std::string& name, bool unicode);

/// A parametric germ G(x, lambda, alpha) given as a polynomial body; the first
/// two variables are the state variable and the distinguished parameter.
UnfoldingGerm parametric_germ(const Jet& body);

/// Piece cut out by eliminated generators: none for a nonzero constant, the
/// whole space for no generators, the gcd when several share a factor.
std::optional<TransitionPiece> piece_from(const std::vector<Jet>& eliminated);

/// Bifurcation B, hysteresis H and double limit point D sets.
TransitionSet transition_set(const UnfoldingGerm& G);

TransitionComponent bifurcation_set(const Jet& G);
TransitionComponent hysteresis_set(const Jet& G);
TransitionComponent double_limit_set(const Jet& G);

struct Interval {
  Rational lo, hi;
};

struct BoundaryOptions {
  bool vertical = true;    // boundaries x in dU
  bool horizontal = true;  // boundaries lambda in dL
};

/// The nine components L_B, L_H, L_C, L_SH, L_SV, L_T, G_D, G_1, G_2 of the
/// transition set on U x L.
TransitionSet nonpersistent_sets(const UnfoldingGerm& F, const Interval& U, const Interval& L,
                                 const BoundaryOptions& opts = {});

/// Up to `count` parameter points obtained by solving `system` numerically
/// (Gauss-Newton from random starts in [-box, box]); `params` names the
/// parameter variables, in output order. `reject` drops solutions, e.g. ones
/// on an excluded diagonal.
std::vector<std::vector<double>> sample_witnesses(
    const std::vector<Jet>& system, const std::vector<std::string>& params, std::size_t count,
    std::uint64_t seed, double box = 2.0,
    const std::function<bool(const std::vector<double>&)>& reject = nullptr);

/// |p(alpha)| divided by the sum of the absolute term values.
double normalized_residual(const Jet& p, const std::vector<double>& alpha);

/// Smallest normalized residual of alpha over the pieces (each piece: its
/// largest equation residual); 0 for a dense component.
double component_residual(const TransitionComponent& c, const std::vector<double>& alpha);

}  // namespace germforge
