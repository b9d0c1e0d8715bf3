#pragma once

#include "germforge/expr.hpp"
#include "germforge/jet.hpp"
#include "germforge/verify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace germforge {

struct NormalFormOptions {
  std::optional<int> degree;  // verify degree when unset
  Ring ring = Ring::Fractional;
  bool list = false;
};

struct NormalFormResult {
  std::vector<Jet> forms;  // one entry unless the list option is set
  int degree = 0;
  std::vector<std::string> warnings;
};

/// Normal forms of the k-jet of g: P(g) terms deleted, intermediate terms
/// eliminated greedily in ascending local order, intrinsic generator
/// coefficients scaled to +-1. With `list`, every distinct minimal-support
/// result over alternative elimination orders, sorted.
std::vector<Jet> normal_forms(const Jet& g, int k, bool list = false);

/// Warning lines for a germ handled in the polynomial ring, empty when that
/// ring is suitable.
std::vector<std::string> normal_form_ring_warnings(const GermExpr& g, const VarList& vars, int k, Ring ring);

/// Expands g (degree from verify if unset) and computes its normal form(s).
NormalFormResult normal_form(const GermExpr& g, const VarList& vars, const NormalFormOptions& opts = {});

/// Truncation degree for g: the requested one or the verify degree; throws
/// InfiniteCodimension when verify finds none.
int resolve_degree(const GermExpr& g, const VarList& vars, std::optional<int> degree);

}  // namespace germforge
