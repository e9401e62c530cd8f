#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hessplus/bipoly.hpp"
#include "hessplus/errors.hpp"
#include "hessplus/parse.hpp"

using namespace hessplus;

TEST_CASE("family shorthand") {
  const ParsedField f = parse_field_spec("cassini(1)");
  REQUIRE(f.field.valid());
  REQUIRE(f.poly.has_value());
  REQUIRE(f.family.has_value());
  CHECK(f.echo == "cassini(1)");
  CHECK(f.axis_parameter == 1.0);
  CHECK(*f.poly == family_polynomial(FamilySpec::cassini(1)));

  CHECK(parse_field_spec("anti(alpha=1/2)").echo == "anti(1/2)");
  CHECK(parse_field_spec("  cassini( alpha = 4 )  ").axis_parameter == 2.0);
  CHECK_THROWS_AS(parse_field_spec("cassini(-1)"), construction_error);
  CHECK_THROWS_AS(parse_field_spec("cassini()"), parse_error);
  CHECK_THROWS_AS(parse_field_spec("cassini(1"), parse_error);
}

TEST_CASE("radial plus shorthand") {
  const ParsedField f = parse_field_spec("radial_plus(P=z^2, p=2*y^2 - 2*x^2)");
  REQUIRE(f.poly.has_value());
  REQUIRE(f.family.has_value());
  CHECK(*f.poly == family_polynomial(FamilySpec::cassini(1)));

  CHECK_THROWS_AS(parse_field_spec("radial_plus(P=z^2 + y, p=x*y)"), parse_error);
  CHECK_THROWS_AS(parse_field_spec("radial_plus(P=z, p=x^2 + y^2 + x*y)"), construction_error);
  CHECK_THROWS_AS(parse_field_spec("radial_plus(p=x*y, P=z^2)"), parse_error);
  CHECK_THROWS_AS(parse_field_spec("radial_plus(P=z^2)"), parse_error);
}

TEST_CASE("products fold fields, polynomials and family structure") {
  const ParsedField f = parse_field_spec("prod(cassini(1), anti(1))");
  REQUIRE(f.poly.has_value());
  REQUIRE(f.family.has_value());
  CHECK(f.echo == "prod(cassini(1),anti(1))");
  CHECK(*f.poly == family_polynomial(FamilySpec::cassini(1)) *
                       family_polynomial(FamilySpec::anti(1)));
  CHECK(f.family->variant == FamilySpec::Variant::product);

  // A single-factor product keeps its wrapper but stays a valid family.
  const ParsedField one = parse_field_spec("prod(cassini(1))");
  CHECK(one.echo == "prod(cassini(1))");
  REQUIRE(one.family.has_value());
  REQUIRE(one.poly.has_value());
  CHECK(*one.poly == family_polynomial(FamilySpec::cassini(1)));

  // A raw polynomial factor keeps the product exact but drops the family.
  const ParsedField g = parse_field_spec("prod(cassini(1), x^2)");
  REQUIRE(g.poly.has_value());
  CHECK(!g.family.has_value());
  CHECK(*g.poly == family_polynomial(FamilySpec::cassini(1)) * BivariatePoly::parse("x^2"));

  // Nested products flatten in value terms.
  const ParsedField h = parse_field_spec("prod(prod(cassini(1), anti(1)), 2)");
  REQUIRE(h.poly.has_value());
  const double v = h.field.value(point2(1.0, 1.0));
  CHECK(v == doctest::Approx(2.0 * 16.0).epsilon(1e-13));
}

TEST_CASE("compositions: exact for affine and polynomial outers") {
  const ParsedField aff = parse_field_spec("compose(affine:2,3, x^2)");
  REQUIRE(aff.poly.has_value());
  CHECK(*aff.poly == BivariatePoly::parse("2*x^2 + 3"));
  CHECK(aff.field.value(point2(1, 0)) == doctest::Approx(5.0));

  const ParsedField cub = parse_field_spec("compose(poly:1,0,2, cassini(1))");
  REQUIRE(cub.poly.has_value());
  const BivariatePoly f1 = family_polynomial(FamilySpec::cassini(1));
  CHECK(*cub.poly == BivariatePoly::constant(1) + Rational(2) * f1 * f1);

  // exp and pow stay field-only.
  const ParsedField ex = parse_field_spec("compose(exp, cassini(1))");
  CHECK(!ex.poly.has_value());
  CHECK(!ex.family.has_value());
  CHECK(ex.field.value(point2(1, 0)) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));

  const ParsedField pw = parse_field_spec("compose(pow:3, anti(1))");
  CHECK(!pw.poly.has_value());
  CHECK(pw.field.value(point2(1, 0)) == doctest::Approx(27.0).epsilon(1e-13));

  CHECK_THROWS_AS(parse_field_spec("compose(exp)"), parse_error);
  CHECK_THROWS_AS(parse_field_spec("compose(banana, x^2)"), parse_error);
  CHECK_THROWS_AS(parse_field_spec("compose(pow:, x^2)"), parse_error);
  CHECK_THROWS_AS(parse_field_spec("compose(affine:1, x^2)"), parse_error);
}

TEST_CASE("raw polynomials pass through with canonical echo") {
  const ParsedField f = parse_field_spec("y^2*x*3 - x + 7/5");
  REQUIRE(f.poly.has_value());
  CHECK(!f.family.has_value());
  CHECK(f.echo == "3*x*y^2 - 1*x + 7/5");
  CHECK(f.axis_parameter == 1.0);
}

TEST_CASE("echo is canonical: reparsing is idempotent") {
  for (const char* text : {"cassini(alpha=1)", "prod( cassini(1) ,anti( 1 ) )",
                           "compose(affine:1/2,0, prod(cassini(1),anti(1)))",
                           "radial_plus(P=z^3, p=x^2*y^2)", "x^2 + y^2 - 1/3",
                           "compose(exp, compose(pow:2, anti(1)))"}) {
    const ParsedField once = parse_field_spec(text);
    const ParsedField twice = parse_field_spec(once.echo);
    CHECK(twice.echo == once.echo);
    CHECK(once.poly.has_value() == twice.poly.has_value());
    if (once.poly && twice.poly) CHECK(*once.poly == *twice.poly);
    const Point p = point2(0.8, -0.45);
    CHECK(once.field.value(p) == doctest::Approx(twice.field.value(p)).epsilon(1e-13));
  }
}

TEST_CASE("caret diagnostics point at the offending column") {
  auto caret_column = [](const std::string& text) -> std::size_t {
    try {
      parse_field_spec(text);
      return std::string::npos;
    } catch (const parse_error& e) {
      return e.position;
    }
  };

  // Error inside a nested argument keeps its absolute offset.
  const std::string bad = "prod(cassini(1), x^)";
  const std::size_t pos = caret_column(bad);
  REQUIRE(pos != std::string::npos);
  CHECK(pos >= bad.find("x^"));
  CHECK(pos <= bad.size());

  const std::string deco = "compose(exp, 0.5*x)";
  const std::size_t pos2 = caret_column(deco);
  REQUIRE(pos2 != std::string::npos);
  CHECK(pos2 == deco.find('.'));

  // The rendered diagnostic carries message, echo and caret line.
  try {
    parse_field_spec(deco);
  } catch (const parse_error& e) {
    const std::string msg = caret_diagnostic(deco, e);
    CHECK(msg.find("error:") == 0);
    CHECK(msg.find(deco) != std::string::npos);
    CHECK(msg.find('^') != std::string::npos);
    // The caret sits under the dot: column = position, plus two leading
    // spaces of indentation on the marker line.
    const auto lines_start = msg.find('\n');
    REQUIRE(lines_start != std::string::npos);
    const auto caret_line_start = msg.find('\n', lines_start + 1);
    REQUIRE(caret_line_start != std::string::npos);
    const std::string caret_line = msg.substr(caret_line_start + 1);
    CHECK(caret_line == std::string(2 + e.position, ' ') + "^");
  }
}

TEST_CASE("axis parameter aggregates over the whole expression") {
  CHECK(parse_field_spec("prod(cassini(4), anti(1))").axis_parameter == 2.0);
  CHECK(parse_field_spec("compose(exp, cassini(9/4))").axis_parameter == 1.5);
  CHECK(parse_field_spec("x^2 - y^2").axis_parameter == 1.0);
}
