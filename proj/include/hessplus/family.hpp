#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hessplus/bipoly.hpp"
#include "hessplus/geometry.hpp"

namespace hessplus {

// f = P(x^2 + y^2) + p(x, y) with P a one-variable profile of degree n >= 1,
// nonnegative coefficients and positive leading coefficient, and a remainder
// of total degree < 2n.  This is the shape whose positive-definiteness
// certificate works far from the origin.
struct RadialPlusForm {
  // profile[k] multiplies z^k; trailing (leading-degree) entry nonzero.
  std::vector<Rational> profile;
  BivariatePoly remainder;

  int profile_degree() const { return static_cast<int>(profile.size()) - 1; }
  Rational leading() const { return profile.empty() ? Rational(0) : profile.back(); }
};

BivariatePoly radial_plus_polynomial(const RadialPlusForm& form);

// Greedy top-down extraction: peel radial homogeneous levels
// c * (x^2+y^2)^k with c > 0 from the top until the next level is not of
// that shape; the rest is the remainder.  Returns nullopt when no level can
// be peeled or the remainder degree reaches 2 * deg(profile).
std::optional<RadialPlusForm> radial_decompose(const BivariatePoly& f);

// The studied quartic families and their products, with alpha = a^2 kept
// rational:
//   cassini(alpha): (x^2+y^2)^2 - 2 alpha (x^2 - y^2)
//   anti(alpha):    (x^2+y^2)^2 + 2 alpha (x^2 - y^2)
struct FamilySpec {
  enum class Variant { cassini, anti, radial_plus, product };
  Variant variant = Variant::cassini;
  Rational alpha = 1;
  std::vector<Rational> profile;
  BivariatePoly remainder;
  std::vector<FamilySpec> factors;

  static FamilySpec cassini(const Rational& alpha);
  static FamilySpec anti(const Rational& alpha);
  static FamilySpec radial_plus(std::vector<Rational> profile, BivariatePoly remainder);
  static FamilySpec product(std::vector<FamilySpec> factors);

  // Canonical shorthand, e.g. "prod(cassini(1),anti(1))".
  std::string text() const;
  // Largest semi-axis parameter a = sqrt(alpha) over the leaves, 1.0 when no
  // cassini/anti leaf occurs.
  double max_axis_parameter() const;
};

BivariatePoly family_polynomial(const FamilySpec& spec);
ScalarField family_field(const FamilySpec& spec);
// Structural radial-plus form: exact for leaves, combined across products by
//   (P1, p1) * (P2, p2) -> (P1 P2, P1(s) p2 + P2(s) p1 + p1 p2).
RadialPlusForm family_radial_form(const FamilySpec& spec);

// Search window sized to the family: [-(2 + 2a), 2 + 2a]^2.
Box default_family_box(double axis_parameter);

}  // namespace hessplus
