#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hessplus/bipoly.hpp"
#include "hessplus/errors.hpp"
#include "hessplus/family.hpp"
#include "hessplus/field.hpp"
#include "hessplus/sym_matrix.hpp"
#include "support/oracles.hpp"

using namespace hessplus;
using testsupport::fd_jet;
using testsupport::jet_deviation;

namespace {
const double kE = std::exp(1.0);
}

TEST_CASE("quartic factor jets at landmark points") {
  const ScalarField f1 = family_field(FamilySpec::cassini(1));

  Jet2 jet = f1.jet(point2(1, 0));
  CHECK(jet.value == -1.0);
  CHECK(jet.gradient[0] == 0.0);
  CHECK(jet.gradient[1] == 0.0);
  CHECK(jet.hessian.at(0, 0) == 8.0);
  CHECK(jet.hessian.at(1, 1) == 8.0);
  CHECK(jet.hessian.at(0, 1) == 0.0);

  jet = f1.jet(point2(0, 0));
  CHECK(jet.value == 0.0);
  CHECK(jet.hessian.at(0, 0) == -4.0);
  CHECK(jet.hessian.at(1, 1) == 4.0);
  CHECK(jet.hessian.at(0, 1) == 0.0);

  CHECK(f1.jet(point2(1, 1)).gradient[0] == 4.0);
  CHECK(f1.jet(point2(1, 1)).gradient[1] == 12.0);

  const ScalarField g1 = family_field(FamilySpec::anti(1));
  CHECK(g1.jet(point2(1, 1)).gradient[0] == 12.0);
  CHECK(g1.jet(point2(1, 1)).gradient[1] == 4.0);
}

TEST_CASE("constant and coordinate fields") {
  const ScalarField c = constant_field(2, 3.5);
  CHECK(c.value(point2(7, -2)) == 3.5);
  CHECK(norm(c.jet(point2(7, -2)).gradient) == 0.0);

  const ScalarField x = coordinate_field(2, 0);
  const Jet2 jx = x.jet(point2(4, 9));
  CHECK(jx.value == 4.0);
  CHECK(jx.gradient[0] == 1.0);
  CHECK(jx.gradient[1] == 0.0);
  CHECK(jx.hessian.max_abs() == 0.0);
}

TEST_CASE("product rule against the expanded polynomial") {
  const ScalarField x = coordinate_field(2, 0);
  const Jet2 sq = product_field(x, x).jet(point2(3, 1));
  CHECK(sq.value == 9.0);
  CHECK(sq.gradient[0] == 6.0);
  CHECK(sq.gradient[1] == 0.0);
  CHECK(sq.hessian.at(0, 0) == 2.0);
  CHECK(sq.hessian.at(1, 1) == 0.0);

  // Leibniz combination of the two quartic factors must agree with the jets
  // of the expanded degree-8 polynomial to rounding.
  const ScalarField prod = product_field(family_field(FamilySpec::cassini(1)),
                                         family_field(FamilySpec::anti(1)));
  const ScalarField expanded =
      make_field(family_polynomial(FamilySpec::cassini(1)) *
                 family_polynomial(FamilySpec::anti(1)));
  for (const auto& [px, py] : std::vector<std::pair<double, double>>{
           {0.3, -1.7}, {1.0, 1.0}, {-2.5, 0.25}, {0.0, 0.0}}) {
    CHECK(jet_deviation(prod.jet(point2(px, py)), expanded.jet(point2(px, py))) < 1e-12);
  }
}

TEST_CASE("chain rule for smooth outer maps") {
  // H(e^(x^2+y^2)) at (1, 0) is e * [[6, 0], [0, 2]].
  const ScalarField base = make_field(BivariatePoly::parse("x^2 + y^2"));
  const ScalarField expf = compose_field(OuterMap::exponential(), base);
  const Jet2 jet = expf.jet(point2(1, 0));
  CHECK(jet.value == doctest::Approx(kE).epsilon(1e-15));
  CHECK(jet.gradient[0] == doctest::Approx(2.0 * kE).epsilon(1e-15));
  CHECK(jet.gradient[1] == 0.0);
  CHECK(jet.hessian.at(0, 0) == doctest::Approx(6.0 * kE).epsilon(1e-15));
  CHECK(jet.hessian.at(1, 1) == doctest::Approx(2.0 * kE).epsilon(1e-15));
  CHECK(jet.hessian.at(0, 1) == 0.0);

  // pow:m equals repeated products wherever the base is positive.
  const ScalarField f1 = family_field(FamilySpec::anti(2));  // positive at (1, 0.5)
  ScalarField repeated = f1;
  for (int m = 2; m <= 5; ++m) {
    repeated = product_field(repeated, f1);
    const ScalarField powm = compose_field(OuterMap::power(m), f1);
    CHECK(jet_deviation(powm.jet(point2(1, 0.5)), repeated.jet(point2(1, 0.5))) < 1e-12);
  }

  // pow demands a positive argument.
  const ScalarField pow2 = compose_field(OuterMap::power(2), base);
  CHECK_THROWS_AS(pow2.jet(point2(0, 0)), domain_error);
}

TEST_CASE("outer map derivatives and monotonicity predicates") {
  const OuterMap aff = OuterMap::affine(2.0, -3.0);
  CHECK(aff.eval(5.0) == 7.0);
  CHECK(aff.d1(5.0) == 2.0);
  CHECK(aff.d2(5.0) == 0.0);
  CHECK(aff.convex_increasing_on(-100.0, 100.0));
  CHECK(!OuterMap::affine(-1.0, 0.0).convex_increasing_on(0.0, 1.0));

  const OuterMap ex = OuterMap::exponential();
  CHECK(ex.eval(0.0) == 1.0);
  CHECK(ex.d1(1.0) == doctest::Approx(kE).epsilon(1e-15));
  CHECK(ex.d2(1.0) == doctest::Approx(kE).epsilon(1e-15));
  CHECK(ex.convex_increasing_on(-50.0, 50.0));

  const OuterMap cubic = OuterMap::polynomial({0.0, 1.0, 0.0, 1.0});  // t + t^3
  CHECK(cubic.eval(2.0) == 10.0);
  CHECK(cubic.d1(2.0) == 13.0);
  CHECK(cubic.d2(2.0) == 12.0);
  CHECK(cubic.nondecreasing_convex_at(1.0));
  CHECK(!cubic.nondecreasing_convex_at(-1.0));  // phi'' < 0 left of zero
  CHECK(cubic.convex_increasing_on(0.0, 10.0));
  CHECK(!cubic.convex_increasing_on(-1.0, 1.0));
}

TEST_CASE("finite differences corroborate analytic jets") {
  const std::vector<ScalarField> fields = {
      family_field(FamilySpec::cassini(Rational(1, 2))),
      product_field(family_field(FamilySpec::cassini(1)), family_field(FamilySpec::anti(1))),
      compose_field(OuterMap::exponential(), family_field(FamilySpec::cassini(1))),
      compose_field(OuterMap::polynomial({1.0, 0.0, 2.0}), family_field(FamilySpec::anti(1))),
  };
  for (const auto& f : fields) {
    for (const auto& [px, py] : std::vector<std::pair<double, double>>{
             {0.4, -0.9}, {1.1, 0.6}, {-0.75, -0.3}}) {
      CHECK(jet_deviation(f.jet(point2(px, py)), fd_jet(f, point2(px, py))) < 1e-5);
    }
  }
}

TEST_CASE("jet rule fields plug into the combinators") {
  const ScalarField f = jet_rule_field(2,
                                       [](const Point& p) {
                                         Jet2 j(2);
                                         j.value = p[0] * p[0] - p[1];
                                         j.gradient = point2(2.0 * p[0], -1.0);
                                         j.hessian.at(0, 0) = 2.0;
                                         return j;
                                       },
                                       "custom");
  CHECK(f.name() == "custom");
  CHECK(f.value(point2(3, 4)) == 5.0);
  const ScalarField sq = product_field(f, f);
  CHECK(sq.value(point2(3, 4)) == 25.0);
  CHECK(sq.jet(point2(3, 4)).gradient[0] == 2.0 * 5.0 * 6.0);
}

TEST_CASE("rank-two symmetric spectra") {
  // u v^T + v u^T has eigenvalues <u,v> +/- |u||v| (rest zero).
  CHECK(rank2_sym_eigs(point2(1, 0), point2(0, 1)) == std::pair<double, double>{-1.0, 1.0});
  CHECK(rank2_sym_eigs(point2(3, 4), point2(3, 4)) == std::pair<double, double>{0.0, 50.0});
  CHECK(rank2_sym_eigs(point2(0, 0), point2(5, -2)) == std::pair<double, double>{0.0, 0.0});

  // Dense eigensolver agrees on the same data.
  const auto dense = eigenvalues(sym_outer(point2(1, 0), point2(0, 1)));
  CHECK(dense.front() == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(dense.back() == doctest::Approx(1.0).epsilon(1e-12));

  const auto self = eigenvalues(self_outer(point2(3, 4)));
  CHECK(self.front() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(self.back() == doctest::Approx(25.0).epsilon(1e-12));

  const SymmetricMatrix d = SymmetricMatrix::diag2(-4.0, 4.0);
  CHECK(lambda_min(d) == -4.0);
  CHECK(mu_max(d) == 4.0);
  CHECK(d.trace() == 0.0);
  CHECK(d.det2() == -16.0);
}

TEST_CASE("direct sum jacobian and its singular values") {
  const ScalarField x = coordinate_field(2, 0);
  const ScalarField y = coordinate_field(2, 1);
  const Jacobian2xN jxy = direct_sum_jacobian(x, y, point2(0.3, -0.8));
  CHECK(jxy.cols() == 2);
  CHECK(jxy.max_row_norm() == 1.0);
  const auto sv = jxy.singular_values();
  CHECK(sv[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(sv[1] == doctest::Approx(1.0).epsilon(1e-14));

  const Jacobian2xN jxx = direct_sum_jacobian(x, x, point2(0.3, -0.8));
  const auto sv2 = jxx.singular_values();
  CHECK(sv2[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
  CHECK(sv2[1] == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("eigenvalue lower bounds for products and compositions") {
  const ScalarField f1 = family_field(FamilySpec::cassini(1));
  const ScalarField g1 = family_field(FamilySpec::anti(1));

  // Wherever both factors are nonnegative the bound must sit below the true
  // smallest eigenvalue of the product Hessian.
  const ScalarField prod = product_field(f1, g1);
  for (const auto& [px, py] : std::vector<std::pair<double, double>>{
           {1.5, 1.0}, {2.0, 0.5}, {0.0, 1.5}}) {
    const Point p = point2(px, py);
    REQUIRE(f1.value(p) >= 0.0);
    REQUIRE(g1.value(p) >= 0.0);
    const double bound = product_lambda_lower_bound(f1, g1, p);
    const double actual = lambda_min(prod.jet(p).hessian);
    CHECK(actual >= bound - 1e-9 * (1.0 + std::abs(actual)));
  }
  // The hypothesis f >= 0 is enforced: f1 < 0 near (1, 0).
  CHECK_THROWS_AS(product_lambda_lower_bound(f1, g1, point2(1, 0)), precondition_error);

  // Composition bound for the exponential outer map.
  const OuterMap ex = OuterMap::exponential();
  const ScalarField ef = compose_field(ex, f1);
  for (const auto& [px, py] : std::vector<std::pair<double, double>>{
           {1.2, 0.1}, {0.5, 1.4}, {-1.3, -0.2}}) {
    const Point p = point2(px, py);
    const double bound = compose_lambda_lower_bound(ex, f1, p);
    const double actual = lambda_min(ef.jet(p).hessian);
    CHECK(actual >= bound - 1e-9 * (1.0 + std::abs(actual)));
  }
  // The cubic t + t^3 is only admissible where phi'' >= 0, i.e. f(p) >= 0.
  const OuterMap cubic = OuterMap::polynomial({0.0, 1.0, 0.0, 1.0});
  CHECK_THROWS_AS(compose_lambda_lower_bound(cubic, f1, point2(1, 0)), precondition_error);
  CHECK(compose_lambda_lower_bound(cubic, f1, point2(2, 0)) <=
        lambda_min(compose_field(cubic, f1).jet(point2(2, 0)).hessian) + 1e-9);
}

TEST_CASE("composition with a monotone convex map keeps rank-one correction") {
  // H(phi.f) - phi'(f) H(f) = phi''(f) grad f grad f^T has rank <= 1.
  const ScalarField f1 = family_field(FamilySpec::cassini(1));
  const OuterMap ex = OuterMap::exponential();
  const ScalarField ef = compose_field(ex, f1);
  const Point p = point2(0.7, -1.1);
  const Jet2 inner = f1.jet(p);
  const Jet2 outer = ef.jet(p);
  SymmetricMatrix corr = outer.hessian;
  corr += (-ex.d1(inner.value)) * inner.hessian;
  const auto eigs = eigenvalues(corr);
  // One eigenvalue is phi'' |grad f|^2, the other vanishes.
  CHECK(eigs[0] == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(eigs[1] ==
        doctest::Approx(ex.d2(inner.value) * dot(inner.gradient, inner.gradient))
            .epsilon(1e-12));
}
