#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hessplus/bipoly.hpp"
#include "hessplus/errors.hpp"
#include "hessplus/family.hpp"

using namespace hessplus;

namespace {

BivariatePoly P(const std::string& text) { return BivariatePoly::parse(text); }

// s = x^2 + y^2 and t = x^2 - y^2 as honest xy-polynomials.
BivariatePoly s_poly() { return P("x^2 + y^2"); }
BivariatePoly t_poly() { return P("x^2 - y^2"); }

}  // namespace

TEST_CASE("arithmetic and term bookkeeping") {
  const BivariatePoly a = P("3*x^2*y - 2*y + 1/2");
  CHECK(a.degree() == 3);
  CHECK(a.coefficient(2, 1) == Rational(3));
  CHECK(a.coefficient(0, 1) == Rational(-2));
  CHECK(a.coefficient(0, 0) == Rational(1, 2));
  CHECK(a.coefficient(5, 5) == Rational(0));

  CHECK((a - a).is_zero());
  CHECK((a - a).degree() == -1);
  CHECK(a + a == Rational(2) * a);
  CHECK(a.pow(0) == BivariatePoly::constant(1));
  CHECK(a.pow(2) == a * a);
  CHECK(a.pow(3) == a * a * a);
  CHECK(-a == Rational(-1) * a);

  // Cancellation never leaves explicit zero terms behind.
  const BivariatePoly b = P("x^2") - P("x^2") + P("y");
  CHECK(b.terms().size() == 1);
}

TEST_CASE("evaluation agrees between exact and double paths") {
  const BivariatePoly f = P("x^4 + 2*x^2*y^2 + y^4 - 2*x^2 + 2*y^2");
  CHECK(f.eval(Rational(1), Rational(0)) == Rational(-1));
  CHECK(f.eval(Rational(1, 2), Rational(1, 3)) ==
        Rational(1, 16) + Rational(2) * Rational(1, 4) * Rational(1, 9) + Rational(1, 81) -
            Rational(1, 2) + Rational(2, 9));
  CHECK(f.eval_double(1.0, 0.0) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(f.eval_double(0.5, -1.25) ==
        doctest::Approx(to_double(f.eval(Rational(1, 2), Rational(-5, 4)))).epsilon(1e-14));
}

TEST_CASE("canonical printing round trips") {
  const std::string canon = "1*x^4 + 2*x^2*y^2 + 1*y^4 - 2*x^2 + 2*y^2";
  CHECK(P(canon).to_string() == canon);
  CHECK(P(P("y^2*x*3 - x + 7/5").to_string()) == P("3*x*y^2 - x + 7/5"));
  CHECK(P("x*x") == P("x^2"));
  CHECK(P("x * x^2 * y") == P("x^3*y"));
  CHECK(P("-x").to_string() == "-1*x");
  CHECK(P("0").is_zero());
  CHECK(P("x - x").to_string() == "0");
}

TEST_CASE("parse rejects malformed input with positions") {
  CHECK_THROWS_AS(P("0.5*x"), parse_error);
  CHECK_THROWS_AS(P("x^"), parse_error);
  CHECK_THROWS_AS(P("x^2 +"), parse_error);
  CHECK_THROWS_AS(P("2**x"), parse_error);
  CHECK_THROWS_AS(P("x^-2"), parse_error);
  CHECK_THROWS_AS(P("(x+1)^2"), parse_error);
  CHECK_THROWS_AS(P("z^2"), parse_error);
  CHECK_THROWS_AS(P(""), parse_error);

  try {
    P("x^2 + 0.5*y");
    FAIL("decimal coefficient must be rejected");
  } catch (const parse_error& e) {
    // The caret lands on the offending '.' inside the decimal literal.
    CHECK(e.position == 7);
  }

  try {
    BivariatePoly::parse("x^2 + y^", 10);
    FAIL("dangling exponent must be rejected");
  } catch (const parse_error& e) {
    CHECK(e.position >= 10 + 8);  // base offset is added for embedded fragments
  }
}

TEST_CASE("partial derivatives are exact") {
  const BivariatePoly f1 = family_polynomial(FamilySpec::cassini(1));
  CHECK(f1.partial_x() == P("4*x^3 + 4*x*y^2 - 4*x"));
  CHECK(f1.partial_y() == P("4*y^3 + 4*x^2*y + 4*y"));
  CHECK(P("7").partial_x().is_zero());
  // Schwarz symmetry on a generic polynomial.
  const BivariatePoly g = P("5*x^3*y^2 - x*y + 2*y^4");
  CHECK(g.partial_x().partial_y() == g.partial_y().partial_x());
}

TEST_CASE("product family expansion matches the closed form") {
  const BivariatePoly s = s_poly(), t = t_poly();
  const BivariatePoly f1 = family_polynomial(FamilySpec::cassini(1));
  const BivariatePoly g1 = family_polynomial(FamilySpec::anti(1));
  CHECK(f1 == s.pow(2) - Rational(2) * t);
  CHECK(g1 == s.pow(2) + Rational(2) * t);
  CHECK(f1 * g1 == s.pow(4) - Rational(4) * t.pow(2));
  CHECK(f1 * g1 ==
        P("x^8 + 4*x^6*y^2 + 6*x^4*y^4 + 4*x^2*y^6 + y^8 - 4*x^4 + 8*x^2*y^2 - 4*y^4"));
}

TEST_CASE("hessian trace and determinant of the product, exactly") {
  const BivariatePoly s = s_poly(), t = t_poly();
  const BivariatePoly h = family_polynomial(FamilySpec::cassini(1)) *
                          family_polynomial(FamilySpec::anti(1));
  CHECK(trace_hessian(h) == Rational(64) * s.pow(3) - Rational(32) * s);
  CHECK(det_hessian(h) ==
        Rational(64) * (Rational(7) * s.pow(6) - Rational(28) * s.pow(4) +
                        Rational(36) * s.pow(2) * t.pow(2) - Rational(12) * t.pow(2)));
}

TEST_CASE("hessian determinant of one quartic factor") {
  const BivariatePoly s = s_poly(), t = t_poly();
  const BivariatePoly f1 = family_polynomial(FamilySpec::cassini(1));
  CHECK(det_hessian(f1) == Rational(16) * (Rational(3) * s.pow(2) + Rational(2) * t -
                                           BivariatePoly::constant(1)));
  CHECK(trace_hessian(f1) == Rational(16) * s);
}

TEST_CASE("curvature indicator D") {
  CHECK(convexity_det(P("x^2 + y^2")) == Rational(-8) * s_poly());
  CHECK(convexity_det(P("3*x - 2*y + 5")).is_zero());

  // D(f) equals minus the Hessian quadratic form on the rotated gradient
  // (-fy, fx), term by term.
  for (const char* text : {"x^4 + 2*x^2*y^2 + y^4 - 2*x^2 + 2*y^2",
                           "x^3*y - 2*y^2 + x",
                           "5*x^2*y^2 - x*y"}) {
    const BivariatePoly f = P(text);
    const BivariatePoly fx = f.partial_x(), fy = f.partial_y();
    const BivariatePoly fxx = fx.partial_x(), fxy = fx.partial_y(), fyy = fy.partial_y();
    const BivariatePoly quad =
        fy * fy * fxx - Rational(2) * fx * fy * fxy + fx * fx * fyy;
    CHECK(convexity_det(f) == -quad);
  }
}

TEST_CASE("top homogeneous part and radial leading coefficient") {
  const BivariatePoly h = family_polynomial(FamilySpec::cassini(1)) *
                          family_polynomial(FamilySpec::anti(1));
  CHECK(top_homogeneous(h) == s_poly().pow(4));
  const auto c = radial_top_coefficient(h);
  REQUIRE(c.has_value());
  CHECK(*c == Rational(1));
  CHECK(!radial_top_coefficient(P("x^4 + y^4")).has_value());
  CHECK(!radial_top_coefficient(P("x^3")).has_value());

  CHECK(degree_coefficient_mass(h, 8) == Rational(16));   // 1+4+6+4+1
  CHECK(degree_coefficient_mass(h, 4) == Rational(16));   // |-4| + |8| + |-4|
  CHECK(degree_coefficient_mass(h, 3) == Rational(0));
}

TEST_CASE("positivity radius of the quartic factor determinant") {
  // det H(f) = 48 s^2 + 32 t - 16: top level is 48 s^2 so
  // R = 1 + max(mass_2, mass_0) / 48 = 1 + 64/48 = 7/3.
  const BivariatePoly d = det_hessian(family_polynomial(FamilySpec::cassini(1)));
  const auto r = positivity_radius(d);
  REQUIRE(r.has_value());
  CHECK(*r == Rational(7, 3));

  // Outside that radius the polynomial really is positive on a sample ring.
  const double rd = to_double(*r);
  for (int k = 0; k < 64; ++k) {
    const double th = 2.0 * 3.14159265358979323846 * k / 64;
    CHECK(d.eval_double(rd * std::cos(th), rd * std::sin(th)) > 0.0);
  }

  CHECK(!positivity_radius(P("x^4 - y^4")).has_value());
  CHECK(!positivity_radius(-s_poly()).has_value());
}

TEST_CASE("radial basis round trip") {
  const BivariatePoly h = family_polynomial(FamilySpec::cassini(1)) *
                          family_polynomial(FamilySpec::anti(1));
  const auto st = to_radial_basis(h);
  REQUIRE(st.has_value());
  // In the (s, t) encoding (s stored as x, t as y): s^4 - 4 t^2.
  CHECK(*st == P("x^4 - 4*y^2"));
  CHECK(from_radial_basis(*st) == h);
  CHECK(!to_radial_basis(P("x^3")).has_value());
  CHECK(!to_radial_basis(P("x*y")).has_value());
}

TEST_CASE("restricted determinant along a level, exactly") {
  // On the level f1*g1 = b we have t^2 = (s^4 - b)/4.  Substituting into the
  // radial form of D reproduces the closed form
  //   D|_level = -256 (3 s^8 + 5 b s^6 - 12 b s^4 - 3 b^2 s^2 + b^2).
  const BivariatePoly h = family_polynomial(FamilySpec::cassini(1)) *
                          family_polynomial(FamilySpec::anti(1));
  const auto d_st = to_radial_basis(convexity_det(h));
  REQUIRE(d_st.has_value());

  for (const int bi : {4, 25, 100}) {
    const Rational b(bi);
    const BivariatePoly s = BivariatePoly::x();  // s in the (s, t) encoding
    const BivariatePoly t2 = Rational(1, 4) * (s.pow(4) - BivariatePoly::constant(b));
    const auto restricted = eliminate_t_squared(*d_st, t2);
    REQUIRE(restricted.has_value());
    const BivariatePoly expected =
        Rational(-256) * (Rational(3) * s.pow(8) + Rational(5) * b * s.pow(6) -
                          Rational(12) * b * s.pow(4) - Rational(3) * b * b * s.pow(2) +
                          BivariatePoly::constant(b * b));
    CHECK(*restricted == expected);
  }

  CHECK(!eliminate_t_squared(P("y^3"), P("x")).has_value());
}

TEST_CASE("field view of a polynomial matches exact evaluation") {
  const BivariatePoly f = P("x^4 - 3*x*y + 2*y^2 - 1/2");
  const ScalarField field = make_field(f);
  REQUIRE(field.valid());
  CHECK(field.dim() == 2);
  for (const auto& [x, y] : std::vector<std::pair<double, double>>{
           {0.0, 0.0}, {1.25, -0.5}, {-2.0, 3.0}}) {
    const Jet2 jet = field.jet(point2(x, y));
    CHECK(jet.value == doctest::Approx(f.eval_double(x, y)).epsilon(1e-14));
    CHECK(jet.gradient[0] ==
          doctest::Approx(f.partial_x().eval_double(x, y)).epsilon(1e-14));
    CHECK(jet.gradient[1] ==
          doctest::Approx(f.partial_y().eval_double(x, y)).epsilon(1e-14));
    CHECK(jet.hessian.at(0, 1) ==
          doctest::Approx(f.partial_x().partial_y().eval_double(x, y)).epsilon(1e-14));
  }
}
