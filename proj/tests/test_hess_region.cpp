#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hessplus/errors.hpp"
#include "hessplus/family.hpp"
#include "hessplus/hess_region.hpp"

using namespace hessplus;

namespace {

const ScalarField& quartic() {
  static const ScalarField f = family_field(FamilySpec::cassini(1));
  return f;
}

const ScalarField& product() {
  static const ScalarField f =
      family_field(FamilySpec::product({FamilySpec::cassini(1), FamilySpec::anti(1)}));
  return f;
}

}  // namespace

TEST_CASE("pointwise membership verdicts") {
  // H(f1)(2, 0) = diag(44, 20): strictly inside.
  const MembershipVerdict in = hess_plus_contains(quartic(), point2(2, 0));
  CHECK(in.status == Membership::in);
  CHECK(in.used_trace_det);
  CHECK(in.trace == doctest::Approx(64.0));
  CHECK(in.det == doctest::Approx(880.0));
  CHECK(in.lambda == doctest::Approx(20.0));

  // H(f1)(0, 0) = diag(-4, 4): outside, and outside the closure too.
  const MembershipVerdict out = hess_plus_contains(quartic(), point2(0, 0));
  CHECK(out.status == Membership::out);
  CHECK(out.lambda == doctest::Approx(-4.0));
  CHECK(hess_semidef_contains(quartic(), point2(0, 0)).status == Membership::out);

  // The product Hessian vanishes at the origin: never in the strict open
  // region, boundary of it at any positive tolerance, inside the closure.
  CHECK(hess_plus_contains(product(), point2(0, 0), 0.0).status == Membership::out);
  CHECK(hess_plus_contains(product(), point2(0, 0), 1e-12).status == Membership::boundary);
  CHECK(hess_semidef_contains(product(), point2(0, 0), 0.0).status == Membership::in);
  const MembershipVerdict origin = hess_plus_contains(product(), point2(0, 0));
  CHECK(origin.lambda == 0.0);
  CHECK(origin.status == Membership::boundary);  // default tol is positive
}

TEST_CASE("default tolerance scales with the Hessian magnitude") {
  SymmetricMatrix h = SymmetricMatrix::diag2(100.0, 1.0);
  CHECK(default_membership_tol(h) == doctest::Approx(1e-9 * 101.0).epsilon(1e-12));
  CHECK(default_membership_tol(SymmetricMatrix(2)) == doctest::Approx(1e-9).epsilon(1e-12));
}

TEST_CASE("membership matches the exact trace and determinant signs") {
  // For the quartic factor, H is positive definite exactly where
  // 3 s^2 + 2 t > 1 (trace 16 s > 0 holds away from the origin).
  for (int i = 0; i < 40; ++i) {
    for (int j = 0; j < 40; ++j) {
      const double x = -2.0 + 4.0 * i / 39, y = -2.0 + 4.0 * j / 39;
      const double s = x * x + y * y, t = x * x - y * y;
      const double margin = 3.0 * s * s + 2.0 * t - 1.0;
      if (std::abs(margin) < 1e-6 || s < 1e-12) continue;  // skip the boundary band
      const bool expected = margin > 0.0;
      const MembershipVerdict v = hess_plus_contains(quartic(), point2(x, y), 0.0);
      CHECK((v.status == Membership::in) == expected);
    }
  }
}

TEST_CASE("complement scans") {
  // A strictly convex paraboloid has an empty complement.
  const ScalarField bowl = family_field(
      FamilySpec::radial_plus({Rational(0), Rational(1)}, BivariatePoly{}));
  CHECK(scan_complement(bowl, square_box(2.0), 0.05).empty());

  // The quartic factor complement contains the origin and every returned
  // point genuinely fails the strict test at zero tolerance.
  const auto bad = scan_complement(quartic(), square_box(2.0), 0.05);
  REQUIRE(!bad.empty());
  bool has_origin = false;
  for (const auto& p : bad) {
    if (norm(p) < 1e-12) has_origin = true;
    CHECK(hess_plus_contains(quartic(), p, 0.0).status != Membership::in);
  }
  CHECK(has_origin);

  // The product complement closure reaches exactly radius sqrt(2), at the
  // four diagonal points where det H vanishes; nothing lies beyond.
  const auto bad2 = scan_complement(product(), square_box(4.0), 0.02);
  REQUIRE(!bad2.empty());
  double max_r = 0.0;
  for (const auto& p : bad2) max_r = std::max(max_r, norm(p));
  CHECK(max_r <= std::sqrt(2.0) + 1e-9);
  CHECK(max_r > 1.3);
}

TEST_CASE("h_max estimates") {
  const auto bad = scan_complement(quartic(), square_box(2.0), 0.02);
  const HMaxEstimate hm = h_max_estimate(quartic(), bad);
  CHECK(hm.lower_bound);
  CHECK(hm.value == doctest::Approx(3.0).epsilon(2e-2));
  CHECK(hm.value <= 3.0 + 1e-9);
  CHECK(hm.refine_rounds == 3);
  // The supremum is approached on the boundary curve 3 s^2 + 2 t = 1; the
  // argmax must sit essentially on it.
  const double ax = hm.argmax[0], ay = hm.argmax[1];
  const double s = ax * ax + ay * ay, t = ax * ax - ay * ay;
  CHECK(3.0 * s * s + 2.0 * t - 1.0 == doctest::Approx(0.0).epsilon(1e-2));

  const HMaxEstimate hp = h_max_estimate(product(), scan_complement(product(), square_box(4.0), 0.02));
  CHECK(hp.value == doctest::Approx(16.0).epsilon(1e-2));
  CHECK(hp.value <= 16.0 + 1e-9);

  CHECK_THROWS_WITH_AS(h_max_estimate(quartic(), {}),
                       "h_max undefined (complement empty at this resolution)",
                       precondition_error);
}

TEST_CASE("boundedness certificates for the families") {
  const BoundednessCertificate c1 = certify_complement_bounded(FamilySpec::cassini(1));
  CHECK(c1.status == "certified");
  CHECK(c1.family == "cassini(1)");
  CHECK(c1.radius_exact == "7/3");
  CHECK(c1.radius == doctest::Approx(7.0 / 3.0).epsilon(1e-15));
  CHECK(c1.trace_leading == Rational(16));
  CHECK(c1.det_leading == Rational(48));
  CHECK(c1.trace_margin > 0.0);
  CHECK(c1.det_margin > 0.0);
  CHECK(c1.r_samples == 17);
  CHECK(c1.theta_samples == 4096);
  CHECK(c1.lipschitz_ok);

  const BoundednessCertificate cp = certify_complement_bounded(
      FamilySpec::product({FamilySpec::cassini(1), FamilySpec::anti(1)}));
  CHECK(cp.status == "certified");
  CHECK(cp.trace_leading == Rational(64));   // 4 n^2 a0 with n = 4
  CHECK(cp.det_leading == Rational(448));    // 4 n^2 (2n - 1) a0^2
  CHECK(cp.radius > 1.0);

  // Everything outside the certified radius really is in the region.
  for (int k = 0; k < 64; ++k) {
    const double th = 2.0 * 3.14159265358979323846 * k / 64;
    const double r = c1.radius * 1.0000001;
    CHECK(hess_plus_contains(quartic(), point2(r * std::cos(th), r * std::sin(th)), 0.0)
              .status == Membership::in);
  }
}

TEST_CASE("certificate preconditions on raw forms") {
  RadialPlusForm bad;
  bad.profile = {Rational(0), Rational(1)};  // P(z) = z
  bad.remainder = BivariatePoly::parse("x^2 + y^2 + x*y");
  CHECK_THROWS_AS(certify_complement_bounded(bad, "bad"), precondition_error);

  RadialPlusForm negative;
  negative.profile = {Rational(0), Rational(-1), Rational(1)};
  CHECK_THROWS_AS(certify_complement_bounded(negative, "negative"), precondition_error);

  RadialPlusForm flat;
  flat.profile = {Rational(5)};
  CHECK_THROWS_AS(certify_complement_bounded(flat, "flat"), precondition_error);
}

TEST_CASE("hypothesis audits") {
  const Box box = square_box(3.0);

  // f paired with itself: the positivity functional is 2 |grad f|^2 >= 0,
  // strictly positive off the critical set, and the two Jacobian rows
  // coincide so rank 2 never occurs.
  const HypothesisAuditReport self = audit_product_hypotheses(quartic(), quartic(), box, 4000, 7);
  CHECK(self.samples == 4000);
  CHECK(self.seed == 7);
  CHECK(self.positivity_fraction == doctest::Approx(1.0));
  CHECK(self.rank2_count == 0);
  CHECK(!self.rank2_bbox.has_value());
  CHECK(self.evidence_only);

  // Opposite gradients: <grad f, grad g> + |grad f||grad g| vanishes
  // identically, so no sample is strictly positive.
  const ScalarField x = coordinate_field(2, 0);
  const ScalarField neg_x = product_field(constant_field(2, -1.0), x);
  const HypothesisAuditReport opp = audit_product_hypotheses(x, neg_x, box, 2000, 7);
  CHECK(opp.positivity_fraction == doctest::Approx(0.0));
  CHECK(opp.rank2_count == 0);

  // The two quartic factors: hypothesis holds everywhere sampled, the pair
  // is generically rank 2, and the box-growth rays increase both factors.
  const HypothesisAuditReport pair =
      audit_product_hypotheses(quartic(), family_field(FamilySpec::anti(1)), box, 4000, 2026);
  CHECK(pair.positivity_fraction == doctest::Approx(1.0));
  CHECK(pair.rank2_count > 3000);
  REQUIRE(pair.rank2_bbox.has_value());
  CHECK(pair.rank2_bbox->xmin >= box.xmin);
  CHECK(pair.rank2_bbox->xmax <= box.xmax);
  REQUIRE(!pair.rays.empty());
  for (const auto& ray : pair.rays) {
    CHECK(ray.f_increasing);
    CHECK(ray.g_increasing);
  }

  // Determinism: repeating the seed reproduces the numbers.
  const HypothesisAuditReport again =
      audit_product_hypotheses(quartic(), family_field(FamilySpec::anti(1)), box, 4000, 2026);
  CHECK(again.positivity_fraction == pair.positivity_fraction);
  CHECK(again.rank2_count == pair.rank2_count);
}
