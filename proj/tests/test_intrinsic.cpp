#include "test_util.hpp"

#include "oracle.hpp"

#include "germforge/errors.hpp"
#include "germforge/expr.hpp"
#include "germforge/intrinsic.hpp"

#include <random>

using namespace germforge;

namespace {

const VarList XL{"x", "lambda"};

Jet P(const std::string& s, int k = Jet::kExact) {
  auto e = parse_germ(s, XL);
  return k == Jet::kExact ? expand_polynomial(e, XL) : taylor_expand(e, XL, k);
}

std::vector<Jet> Ps(std::initializer_list<const char*> ss) {
  std::vector<Jet> out;
  for (auto s : ss) out.push_back(P(s));
  return out;
}

IntrinsicIdeal I(std::initializer_list<Block> b) { return IntrinsicIdeal(std::vector<Block>(b)); }

}  // namespace

TEST_CASE("block membership") {
  CHECK(I({{5, 0}, {0, 3}}).contains(Monomial{3, 2}));
  CHECK_FALSE(I({{5, 0}, {0, 3}}).contains(Monomial{0, 2}));
  CHECK_FALSE(I({{6, 0}, {1, 3}}).contains(Monomial{4, 1}));
  CHECK(I({{6, 0}, {1, 3}}).contains(Monomial{1, 3}));
  CHECK_FALSE(I({{6, 0}, {1, 3}}).contains(Monomial{0, 3}));
}

TEST_CASE("canonical form") {
  auto a = I({{8, 1}, {7, 0}, {2, 3}, {1, 2}});
  CHECK(a.blocks() == std::vector<Block>{{7, 0}, {1, 2}});
  CHECK(IntrinsicIdeal(a.blocks()) == a);
  // M^2 is covered by <x^2>-free blocks only when all generators are
  auto b = I({{2, 0}, {0, 2}, {1, 1}});
  CHECK(b.blocks() == std::vector<Block>{{2, 0}});
  CHECK(I({{0, 2}, {1, 1}, {3, 0}}).blocks() == std::vector<Block>{{3, 0}, {1, 1}});
  std::mt19937 rng(1);
  for (int t = 0; t < 100; ++t) {
    std::vector<Block> bl;
    for (int i = 0; i < 4; ++i) bl.push_back({static_cast<unsigned>(rng() % 7), static_cast<unsigned>(rng() % 5)});
    IntrinsicIdeal c(bl);
    CHECK(IntrinsicIdeal(c.blocks()) == c);
    for (std::size_t i = 1; i < c.blocks().size(); ++i) {
      CHECK(c.blocks()[i].l > c.blocks()[i - 1].l);
      CHECK(c.blocks()[i].k < c.blocks()[i - 1].k);
    }
    // same monomials as the raw sum
    for (unsigned a = 0; a < 10; ++a)
      for (unsigned b = 0; b < 8; ++b) {
        bool raw = false;
        for (auto& x : bl) raw = raw || (b >= x.l && a + b >= x.k + x.l);
        CHECK(raw == c.contains(Monomial{a, b}));
      }
  }
}

TEST_CASE("rendering") {
  CHECK(I({{3, 1}, {0, 2}}).to_string() == "M^3<lambda>+<lambda^2>");
  CHECK(I({{3, 1}, {0, 2}}).to_unicode() == "M³⟨λ⟩+⟨λ²⟩");
  CHECK(I({{6, 0}, {1, 3}}).to_string() == "M^6+M<lambda^3>");
  CHECK(I({{1, 0}}).to_string() == "M");
  CHECK(IntrinsicIdeal().to_string() == "0");
}

TEST_CASE("intrinsic part examples") {
  auto a = intrinsic_part(Ps({"x^3*lambda + lambda^2", "3*x^3*lambda", "3*x^2*lambda^2"}), {}, 8, true);
  CHECK(a.to_string() == "M^3<lambda>+<lambda^2>");

  auto b = intrinsic_part(Ps({"x^5 + lambda*x^3 + lambda^2", "5*x^5 + 3*x^3*lambda", "5*x^4*lambda + 3*x^2*lambda^2"}),
                          Ps({"lambda*x^3 + 2*lambda^2", "x^3 + 2*lambda", "x^4 + 3/5*lambda*x^2", "lambda^2", "x^5"}),
                          8);
  CHECK(b.to_string() == "M^5+M^3<lambda>+<lambda^2>");

  CHECK(intrinsic_part(Ps({"x", "lambda"}), {}, 4).to_string() == "M");
  CHECK_THROWS_AS(intrinsic_part(Ps({"x^2"}), {}, 5), InfiniteCodimension);
}

TEST_CASE("intrinsic part against exhaustive block testing") {
  std::mt19937 rng(9);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    const int k = 4 + trial % 4;
    std::vector<Jet> A;
    for (int g = 0; g < 3; ++g) {
      Jet j(XL, k);
      for (int t = 0; t < 3; ++t) {
        unsigned a = rng() % 6, b = rng() % (6 - a);
        if (a + b == 0) b = 1;
        j.add_term(Monomial{a, b}, c(rng));
      }
      A.push_back(j);
    }
    std::vector<Jet> B;
    if (trial % 2) B.push_back(Jet::term(XL, Monomial{static_cast<unsigned>(rng() % 3), 1}, 1, k));
    JetSubspace space(XL, A, B, k);
    auto ip = intrinsic_part(space);
    for (int d = 0; d <= k; ++d)
      for (int b = 0; b <= d; ++b) {
        Monomial m{static_cast<unsigned>(d - b), static_cast<unsigned>(b)};
        CHECK(ip.contains(m) == oracle::block_inside(A, B, m[0], m[1], k));
      }
    // maximality: lowering any block exponent leaves the space
    for (const auto& blk : ip.blocks()) {
      for (const auto& gm : std::vector<Monomial>{Monomial{blk.k, blk.l}}) CHECK(space.contains(gm));
      if (blk.k > 0) CHECK_FALSE(oracle::block_inside(A, B, blk.k - 1, blk.l, k));
    }
  }
}

TEST_CASE("smallest intrinsic ideal") {
  auto s = smallest_intrinsic(P("x^5 + x^3*lambda^2 + lambda^3"));
  CHECK(s.to_string() == "M^5+<lambda^3>");
  auto t = smallest_intrinsic(P("lambda*x^8 + x^7 - lambda^3*x^2 - lambda^2*x"));
  CHECK(t.to_string() == "M^7+M<lambda^2>");
  CHECK(t.generators() == std::vector<Monomial>{Monomial{7, 0}, Monomial{1, 2}});
  CHECK(smallest_intrinsic(P("lambda")).to_string() == "<lambda>");
  Jet g = P("x^4 - 3*x*lambda^2 + lambda^5");
  for (const auto& [m, c] : g.terms()) CHECK(smallest_intrinsic(g).contains(m));
}
