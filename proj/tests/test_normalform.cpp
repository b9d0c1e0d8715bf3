#include "test_util.hpp"

#include "germforge/errors.hpp"
#include "germforge/expr.hpp"
#include "germforge/normalform.hpp"
#include "germforge/tangent.hpp"
#include "germforge/transform.hpp"

using namespace germforge;

namespace {

const VarList XL{"x", "lambda"};

GermExpr E(const std::string& s) { return parse_germ(s, XL); }
Jet P(const std::string& s, int k) { return taylor_expand(E(s), XL, k); }

NormalFormResult nf(const std::string& s, int k, Ring ring = Ring::Fractional, bool list = false) {
  NormalFormOptions o;
  o.degree = k;
  o.ring = ring;
  o.list = list;
  return normal_form(E(s), XL, o);
}

}  // namespace

TEST_CASE("normal forms at degree 10") {
  const auto a = nf("x^3 - sin(lambda)", 10, Ring::Smooth);
  REQUIRE(a.forms.size() == 1);
  CHECK(a.forms[0] == P("x^3 - lambda", 10));
  CHECK(a.warnings.empty());

  const auto b = nf("1 - 1/(1 + x^4 - lambda^2)", 10, Ring::Formal);
  CHECK(b.forms[0] == P("x^4 - lambda^2", 10));

  const auto c = nf("x^5 + x^3*lambda + sin(lambda^2)", 10);
  CHECK(c.forms[0] == P("x^5 + x^3*lambda + lambda^2", 10));
}

TEST_CASE("polynomial ring warning") {
  const auto c = nf("x^5 + x^3*lambda + sin(lambda^2)", 10, Ring::Polynomial);
  REQUIRE(c.warnings.size() == 3);
  CHECK(c.warnings[0] == "Warning: The polynomial germ ring is not suitable for normal form computations.");
  CHECK(c.warnings[1] == "Suggestion: Use the command Verify to find the appropriate computational ring.");
  CHECK(c.warnings[2] == "The following output might be wrong.");
  CHECK(c.forms[0] == P("x^5 + x^3*lambda + lambda^2", 10));
  CHECK(nf("x^3 - lambda", 4, Ring::Polynomial).warnings.empty());
}

TEST_CASE("scaling and intermediate terms") {
  CHECK(nf("x^4 + 4*x^3 - lambda*x", 4).forms[0] == P("x^3 - x*lambda", 4));
  CHECK(nf("6*x - 6*sin(x) - lambda*x", 6).forms[0] == P("x^3 - x*lambda", 6));
  CHECK(nf("-2*x^2 + 3*lambda", 3).forms[0] == P("-x^2 + lambda", 3));
  // x^2 lambda is removable in the hysteresis germ x^3 - lambda + x^2 lambda? it lies in P
  CHECK(nf("x^3 - lambda + x*lambda", 4).forms[0] == P("x^3 - lambda", 4));
}

TEST_CASE("default degree from verify") {
  const auto r = normal_form(E("x^3 - sin(lambda)"), XL);
  CHECK(r.degree == 3);
  CHECK(r.forms[0] == P("x^3 - lambda", 3));
  CHECK_THROWS_AS(normal_form(E("x^2"), XL, NormalFormOptions{4, Ring::Fractional, false}), InfiniteCodimension);
}

TEST_CASE("normal form is equivalent to its germ") {
  for (const char* s : {"x^3 - sin(lambda)", "x^4 + 4*x^3 - lambda*x", "x^2 + lambda^2 + x^3", "exp(x^3) - 1 + lambda + x*lambda",
                        "x^5 + x^3*lambda + sin(lambda^2)", "x^2 - lambda^3 + x*lambda^2"}) {
    const std::string name = s;
    CAPTURE(name);
    const GermExpr g = E(s);
    const int k = resolve_degree(g, XL, std::nullopt);
    const Jet gk = taylor_expand(g, XL, k);
    const Jet f = normal_forms(taylor_expand(g, XL, k + 1), k).front();
    const auto t = try_transformation(gk, f, k);
    REQUIRE(t.has_value());
    CHECK(transformation_residual(gk, f, *t, k).is_zero());
  }
}

TEST_CASE("list option") {
  const auto r = nf("x^4 + 4*x^3 - lambda*x", 4, Ring::Fractional, true);
  REQUIRE(r.forms.size() == 1);
  CHECK(r.forms[0] == P("x^3 - x*lambda", 4));
  const auto m = normal_forms(P("x^4 + lambda^3 + x^3*lambda + x^2*lambda^2", 5), 4, true);
  REQUIRE(!m.empty());
  for (const auto& f : m) CHECK(f.size() == m.front().size());
}
