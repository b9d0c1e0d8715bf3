#include "germforge/intrinsic.hpp"

#include "germforge/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace germforge {

namespace {

bool block_has(const Block& b, const Monomial& m) { return m[1] >= b.l && m[0] + m[1] >= b.k + b.l; }

/// Generators x^{k-i} lambda^{l+i} of a block.
std::vector<Monomial> block_generators(const Block& b) {
  std::vector<Monomial> out;
  for (unsigned i = 0; i <= b.k; ++i) out.push_back(Monomial{b.k - i, b.l + i});
  return out;
}

}  // namespace

// ---- IntrinsicIdeal ---------------------------------------------------------------

IntrinsicIdeal::IntrinsicIdeal(std::vector<Block> blocks) {
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
    return a.k + a.l != b.k + b.l ? a.k + a.l < b.k + b.l : a.l < b.l;
  });
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  // Drop, one at a time, any block whose generators lie in the other blocks.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = blocks.size(); i-- > 0;) {
      const auto gens = block_generators(blocks[i]);
      const bool covered = std::all_of(gens.begin(), gens.end(), [&](const Monomial& m) {
        for (std::size_t j = 0; j < blocks.size(); ++j)
          if (j != i && block_has(blocks[j], m)) return true;
        return false;
      });
      if (covered) {
        blocks.erase(blocks.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) { return a.l < b.l; });
  blocks_ = std::move(blocks);
}

IntrinsicIdeal IntrinsicIdeal::generated_by(const std::vector<Monomial>& monomials) {
  std::vector<Block> blocks;
  for (const auto& m : monomials) blocks.push_back({m[0], m[1]});
  return IntrinsicIdeal(std::move(blocks));
}

bool IntrinsicIdeal::contains(const Monomial& m) const {
  return std::any_of(blocks_.begin(), blocks_.end(), [&](const Block& b) { return block_has(b, m); });
}

bool IntrinsicIdeal::contains(const Jet& f) const {
  for (const auto& [m, c] : f.terms())
    if (!contains(m)) return false;
  return true;
}

Jet IntrinsicIdeal::strip(const Jet& f) const {
  Jet r(f.vars(), f.truncation());
  for (const auto& [m, c] : f.terms())
    if (!contains(m)) r.add_term(m, c);
  return r;
}

IntrinsicIdeal IntrinsicIdeal::times_maximal() const {
  std::vector<Block> b = blocks_;
  for (auto& x : b) ++x.k;
  return IntrinsicIdeal(std::move(b));
}

std::vector<Monomial> IntrinsicIdeal::generators() const {
  std::vector<Monomial> out;
  for (const auto& b : blocks_) out.push_back(Monomial{b.k, b.l});
  return out;
}

bool IntrinsicIdeal::contains_power(unsigned d) const {
  for (unsigned a = 0; a <= d; ++a)
    if (!contains(Monomial{a, d - a})) return false;
  return true;
}

std::string IntrinsicIdeal::to_string() const {
  if (blocks_.empty()) return "0";
  std::string s;
  for (const auto& b : blocks_) {
    if (!s.empty()) s += "+";
    std::string part;
    if (b.k > 0) part += b.k == 1 ? "M" : "M^" + std::to_string(b.k);
    if (b.l > 0) part += b.l == 1 ? "<lambda>" : "<lambda^" + std::to_string(b.l) + ">";
    if (part.empty()) part = "<1>";
    s += part;
  }
  return s;
}

std::string IntrinsicIdeal::to_unicode() const {
  if (blocks_.empty()) return "0";
  std::string s;
  for (const auto& b : blocks_) {
    if (!s.empty()) s += "+";
    std::string part;
    if (b.k > 0) part += b.k == 1 ? "M" : "M" + superscript(b.k);
    if (b.l > 0) part += b.l == 1 ? "⟨λ⟩" : "⟨λ" + superscript(b.l) + "⟩";
    if (part.empty()) part = "⟨1⟩";
    s += part;
  }
  return s;
}

IntrinsicIdeal operator+(const IntrinsicIdeal& a, const IntrinsicIdeal& b) {
  std::vector<Block> all = a.blocks_;
  all.insert(all.end(), b.blocks_.begin(), b.blocks_.end());
  return IntrinsicIdeal(std::move(all));
}

// ---- JetSubspace ----------------------------------------------------------------------

JetSubspace::JetSubspace(const VarList& vars, const std::vector<Jet>& ideal_gens, const std::vector<Jet>& span_vectors,
                         int k)
    : vars_(vars), k_(k), extra_(MonomialOrder::local(vars.size())) {
  if (k < 0 || k >= Jet::kExact) throw std::invalid_argument("a finite truncation degree is required");
  std::vector<Jet> gens;
  for (const auto& g : ideal_gens)
    if (!g.truncated(k).is_zero()) gens.push_back(g);
  if (!gens.empty()) sb_ = standard_basis(gens, MonomialOrder::local(vars.size()), k);
  for (const auto& v : span_vectors) {
    Jet r = sb_ ? sb_->normal_form(v) : v.truncated(k);
    extra_.insert(r);
  }
}

Jet JetSubspace::reduce(const Jet& f) const {
  Jet r = f.truncated(k_);
  if (sb_) r = sb_->normal_form(r);
  return extra_.reduce(r);
}

bool JetSubspace::contains(const Monomial& m) const {
  if (static_cast<int>(m.degree()) > k_) return true;
  return contains(Jet::term(vars_, m, 1, k_));
}

std::optional<std::size_t> JetSubspace::codimension() const {
  if (!sb_) return std::nullopt;
  auto c = sb_->codimension();
  if (!c) return std::nullopt;
  return *c - extra_.dimension();
}

Certification JetSubspace::certification() const {
  return sb_ ? sb_->certification() : Certification::Unchecked;
}

// ---- intrinsic part -------------------------------------------------------------------

IntrinsicIdeal intrinsic_part(const JetSubspace& space) {
  const int k = space.truncation();
  std::vector<Block> blocks;
  for (unsigned l = 0; static_cast<int>(l) <= k; ++l) {
    // membership of M^a<lambda^l> is monotone in a; find the least a
    auto block_inside = [&](unsigned a) {
      for (unsigned d = a + l; static_cast<int>(d) <= k; ++d)
        for (unsigned j = l; j <= d; ++j)
          if (!space.contains(Monomial{d - j, j})) return false;
      return true;
    };
    const unsigned top = static_cast<unsigned>(k) - l;
    if (!block_inside(top)) continue;
    unsigned lo = 0, hi = top;
    while (lo < hi) {
      const unsigned mid = (lo + hi) / 2;
      if (block_inside(mid))
        hi = mid;
      else
        lo = mid + 1;
    }
    blocks.push_back({lo, l});
  }
  return IntrinsicIdeal(std::move(blocks));
}

IntrinsicIdeal intrinsic_part(const std::vector<Jet>& A, const std::vector<Jet>& B, int k, bool allow_infinite) {
  if (A.empty() && B.empty()) throw std::invalid_argument("intrinsic part of an empty generator list");
  const VarList& vars = A.empty() ? B.front().vars() : A.front().vars();
  JetSubspace space(vars, A, B, k);
  if (!allow_infinite && !space.codimension()) throw InfiniteCodimension(B.empty() ? "the ideal is of infinite codimension"
                                                                : "the vector space is of infinite codimension");
  return intrinsic_part(space);
}

IntrinsicIdeal smallest_intrinsic(const Jet& g) {
  if (g.nvars() != 2) throw std::invalid_argument("intrinsic ideals need exactly two variables");
  std::vector<Monomial> support;
  for (const auto& [m, c] : g.terms()) support.push_back(m);
  return IntrinsicIdeal::generated_by(support);
}

}  // namespace germforge
