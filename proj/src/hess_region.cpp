#include "hessplus/hess_region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include "hessplus/parallel.hpp"

namespace hessplus {

namespace {
constexpr double kPi = std::numbers::pi;
}

const char* to_string(Membership m) {
  switch (m) {
    case Membership::in: return "in";
    case Membership::out: return "out";
    case Membership::boundary: return "boundary";
  }
  return "out";
}

double default_membership_tol(const SymmetricMatrix& h) {
  return 1e-9 * (1.0 + h.max_abs());
}

namespace {

// `closed` asks about the closure {lambda_min >= 0}: at tol = 0 an exactly
// vanishing eigenvalue is then a member, while the strict open set excludes
// it.  With tol > 0 both queries report the +-tol band as `boundary`.
MembershipVerdict classify(const SymmetricMatrix& h, double tol, bool closed) {
  MembershipVerdict v;
  v.tol = tol;
  v.lambda = lambda_min(h);
  if (h.dim() == 2) {
    v.used_trace_det = true;
    v.trace = h.trace();
    v.det = h.det2();
  }
  if (v.lambda > tol || (closed && tol == 0.0 && v.lambda >= 0.0))
    v.status = Membership::in;
  else if (tol > 0.0 && std::abs(v.lambda) <= tol)
    v.status = Membership::boundary;
  else
    v.status = Membership::out;
  return v;
}

}  // namespace

MembershipVerdict hess_plus_contains(const ScalarField& f, const Point& p, double tol) {
  return classify(f.jet(p).hessian, tol, false);
}

MembershipVerdict hess_plus_contains(const ScalarField& f, const Point& p) {
  const SymmetricMatrix h = f.jet(p).hessian;
  return classify(h, default_membership_tol(h), false);
}

MembershipVerdict hess_semidef_contains(const ScalarField& f, const Point& p, double tol) {
  return classify(f.jet(p).hessian, tol, true);
}

MembershipVerdict hess_semidef_contains(const ScalarField& f, const Point& p) {
  const SymmetricMatrix h = f.jet(p).hessian;
  return classify(h, default_membership_tol(h), true);
}

std::vector<Point> scan_complement(const ScalarField& f, const Box& box, double spacing) {
  const int nx = static_cast<int>(std::floor(box.width() / spacing + 1e-9)) + 1;
  const int ny = static_cast<int>(std::floor(box.height() / spacing + 1e-9)) + 1;
  std::vector<std::vector<Point>> rows(ny);
  // tol = 0: every returned point genuinely fails the strict test.
  parallel_for(0, ny, [&](int iy) {
    const double y = box.ymin + iy * spacing;
    for (int ix = 0; ix < nx; ++ix) {
      const double x = box.xmin + ix * spacing;
      if (hess_plus_contains(f, point2(x, y), 0.0).status != Membership::in)
        rows[iy].push_back(point2(x, y));
    }
  });
  std::vector<Point> result;
  for (auto& row : rows)
    for (auto& p : row) result.push_back(std::move(p));
  return result;
}

HMaxEstimate h_max_estimate(const ScalarField& f, const std::vector<Point>& complement,
                            int refine_rounds) {
  if (complement.empty())
    throw precondition_error("h_max undefined (complement empty at this resolution)");
  HMaxEstimate est;
  est.refine_rounds = refine_rounds;

  // The scan grid pitch, recovered from the sample itself: the smallest
  // nonzero coordinate gap.
  double spacing = 0.0;
  for (int axis = 0; axis < 2; ++axis) {
    std::vector<double> coords;
    coords.reserve(complement.size());
    for (const auto& p : complement) coords.push_back(p[axis]);
    std::sort(coords.begin(), coords.end());
    for (std::size_t k = 1; k < coords.size(); ++k) {
      const double gap = coords[k] - coords[k - 1];
      if (gap > 1e-12 && (spacing == 0.0 || gap < spacing)) spacing = gap;
    }
  }
  est.spacing = spacing;

  double best = -std::numeric_limits<double>::infinity();
  Point best_p = complement.front();
  for (const auto& p : complement) {
    const double v = f.value(p);
    if (v > best) {
      best = v;
      best_p = p;
    }
  }

  double radius = spacing;
  for (int round = 0; round < refine_rounds && radius > 0.0; ++round) {
    const double step = radius / 10.0;
    Point center = best_p;
    for (int iy = -10; iy <= 10; ++iy) {
      for (int ix = -10; ix <= 10; ++ix) {
        const Point q = point2(center[0] + ix * step, center[1] + iy * step);
        if (hess_plus_contains(f, q, 0.0).status == Membership::in) continue;
        const double v = f.value(q);
        if (v > best) {
          best = v;
          best_p = q;
        }
      }
    }
    radius = step;
  }

  est.value = best;
  est.argmax = best_p;
  return est;
}

namespace {

// Sum over terms of |c| (i+j) r^{i+j}: a bound for |d/dtheta| of the
// polynomial restricted to the radius-r circle.
double theta_lipschitz(const BivariatePoly& p, double r) {
  double acc = 0.0;
  for (const auto& [m, c] : p.terms())
    acc += std::abs(to_double(c)) * m.degree() * std::pow(r, m.degree());
  return acc;
}

struct RingScan {
  double min_trace = 0.0;
  double min_det = 0.0;
  bool ok = false;
};

RingScan scan_annulus(const BivariatePoly& tr, const BivariatePoly& dt, double r_lo, double r_hi,
                      int r_samples, int theta_samples, double* trace_margin,
                      double* det_margin) {
  RingScan out;
  out.min_trace = std::numeric_limits<double>::infinity();
  out.min_det = std::numeric_limits<double>::infinity();
  out.ok = true;
  const double half_step = kPi / theta_samples;  // half of 2*pi/K
  for (int j = 0; j < r_samples; ++j) {
    const double r = r_lo + (r_hi - r_lo) * j / (r_samples - 1);
    double ring_tr = std::numeric_limits<double>::infinity();
    double ring_dt = std::numeric_limits<double>::infinity();
    for (int k = 0; k < theta_samples; ++k) {
      const double th = 2.0 * kPi * k / theta_samples;
      const double x = r * std::cos(th), y = r * std::sin(th);
      ring_tr = std::min(ring_tr, tr.eval_double(x, y));
      ring_dt = std::min(ring_dt, dt.eval_double(x, y));
    }
    const double guard_tr = theta_lipschitz(tr, r) * half_step;
    const double guard_dt = theta_lipschitz(dt, r) * half_step;
    out.min_trace = std::min(out.min_trace, ring_tr - guard_tr);
    out.min_det = std::min(out.min_det, ring_dt - guard_dt);
    if (!(ring_tr - guard_tr > 0.0) || !(ring_dt - guard_dt > 0.0)) out.ok = false;
  }
  *trace_margin = out.min_trace;
  *det_margin = out.min_det;
  return out;
}

}  // namespace

BoundednessCertificate certify_complement_bounded(const RadialPlusForm& form,
                                                  const std::string& name) {
  const int pd = form.profile_degree();
  if (pd < 1) throw precondition_error("profile must have positive degree");
  if (!(form.leading() > 0)) throw precondition_error("profile leading coefficient must be positive");
  for (const Rational& c : form.profile)
    if (c < 0) throw precondition_error("profile coefficients must be nonnegative");
  if (!form.remainder.is_zero()) {
    if (form.remainder.degree() < 2)
      throw precondition_error("remainder degree must be at least 2");
    if (form.remainder.degree() >= 2 * pd)
      throw precondition_error("remainder degree must be below twice the profile degree");
  }

  BoundednessCertificate cert;
  cert.family = name;
  cert.status = "unknown";
  cert.r_samples = 17;
  cert.theta_samples = 4096;

  const BivariatePoly f = radial_plus_polynomial(form);
  const BivariatePoly tr = trace_hessian(f);
  const BivariatePoly dt = det_hessian(f);

  const int n = form.profile_degree();
  const Rational a0 = form.leading();
  cert.trace_leading = Rational(4 * n * n) * a0;
  cert.det_leading = Rational(4 * n * n * (2 * n - 1)) * a0 * a0;

  const auto tr_top = radial_top_coefficient(tr);
  const auto dt_top = radial_top_coefficient(dt);
  if (!tr_top || *tr_top != cert.trace_leading || tr.degree() != 2 * n - 2) {
    cert.note = "Hessian trace does not have the expected radial leading level";
    return cert;
  }
  if (!dt_top || *dt_top != cert.det_leading || dt.degree() != 4 * n - 4) {
    cert.note = "Hessian determinant does not have the expected radial leading level";
    return cert;
  }

  const auto r_tr = positivity_radius(tr);
  const auto r_dt = positivity_radius(dt);
  if (!r_tr || !r_dt) {
    cert.note = "no exact positivity radius: a leading level is not positive-radial";
    return cert;
  }

  Rational radius = std::max(*r_tr, *r_dt);
  for (int attempt = 0; attempt < 6; ++attempt) {
    const double r_lo = to_double(radius);
    const RingScan ring = scan_annulus(tr, dt, r_lo, 2.0 * r_lo, cert.r_samples,
                                       cert.theta_samples, &cert.trace_margin, &cert.det_margin);
    if (ring.ok) {
      cert.status = "certified";
      cert.radius = r_lo;
      cert.radius_exact = rational_to_string(radius);
      cert.lipschitz_ok = true;
      return cert;
    }
    radius *= 2;
  }
  cert.note = "annulus validation failed after radius doubling retries";
  return cert;
}

BoundednessCertificate certify_complement_bounded(const FamilySpec& spec) {
  return certify_complement_bounded(family_radial_form(spec), spec.text());
}

HypothesisAuditReport audit_product_hypotheses(const ScalarField& f, const ScalarField& g,
                                               const Box& box, int samples, std::uint64_t seed) {
  HypothesisAuditReport report;
  report.samples = samples;
  report.seed = seed;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(box.xmin, box.xmax);
  std::uniform_real_distribution<double> uy(box.ymin, box.ymax);

  int positive = 0;
  double bx_min = 0, bx_max = 0, by_min = 0, by_max = 0;
  for (int k = 0; k < samples; ++k) {
    const Point p = point2(ux(rng), uy(rng));
    const Jacobian2xN jac = direct_sum_jacobian(f, g, p);
    // <grad f, grad g> + |grad f||grad g|, nonnegative by Cauchy-Schwarz.
    if (dot(jac.row_f, jac.row_g) + norm(jac.row_f) * norm(jac.row_g) > 0.0) ++positive;
    const double tau = 1e-9 * (1.0 + jac.max_row_norm());
    const auto sv = jac.singular_values();
    if (sv[0] > tau && sv[1] > tau) {
      if (report.rank2_count == 0) {
        bx_min = bx_max = p[0];
        by_min = by_max = p[1];
      } else {
        bx_min = std::min(bx_min, p[0]);
        bx_max = std::max(bx_max, p[0]);
        by_min = std::min(by_min, p[1]);
        by_max = std::max(by_max, p[1]);
      }
      ++report.rank2_count;
    }
  }
  report.positivity_fraction = samples > 0 ? static_cast<double>(positive) / samples : 0.0;
  if (report.rank2_count > 0) report.rank2_bbox = Box{bx_min, bx_max, by_min, by_max};

  const double base = 0.5 * std::max(box.width(), box.height());
  const int kRays = 16;
  for (int k = 0; k < kRays; ++k) {
    RayCheck ray;
    const double th = 2.0 * kPi * k / kRays;
    ray.dir_x = std::cos(th);
    ray.dir_y = std::sin(th);
    for (int j = 0; j < 3; ++j) {
      const double r = base * std::pow(2.0, j);
      const Point p = point2(r * ray.dir_x, r * ray.dir_y);
      ray.f_values[j] = f.value(p);
      ray.g_values[j] = g.value(p);
    }
    ray.f_increasing = ray.f_values[0] < ray.f_values[1] && ray.f_values[1] < ray.f_values[2];
    ray.g_increasing = ray.g_values[0] < ray.g_values[1] && ray.g_values[1] < ray.g_values[2];
    report.rays.push_back(ray);
  }
  return report;
}

}  // namespace hessplus
