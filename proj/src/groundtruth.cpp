#include "hessplus/groundtruth.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "hessplus/critical.hpp"
#include "hessplus/family.hpp"
#include "hessplus/hess_region.hpp"
#include "hessplus/levelset.hpp"
#include "hessplus/version.hpp"

namespace hessplus {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

BivariatePoly s_poly() { return BivariatePoly::parse("x^2 + y^2"); }
BivariatePoly t_poly() { return BivariatePoly::parse("x^2 - y^2"); }

FamilySpec product_spec() {
  return FamilySpec::product({FamilySpec::cassini(1), FamilySpec::anti(1)});
}

double d_indicator(const Jet2& j, bool negate) {
  const double fx = j.gradient[0], fy = j.gradient[1];
  const double fxx = j.hessian.at(0, 0), fxy = j.hessian.at(0, 1), fyy = j.hessian.at(1, 1);
  const double d = 2.0 * fx * fy * fxy - fx * fx * fyy - fy * fy * fxx;
  return negate ? -d : d;
}

// Richardson-extrapolated central differences, step h and h/2.
Jet2 fd_jet(const ScalarField& f, const Point& p, double h) {
  const auto grad_at = [&](double step) {
    Point g = point2(0, 0);
    for (int i = 0; i < 2; ++i) {
      Point a = p, b = p;
      a[i] += step;
      b[i] -= step;
      g[i] = (f.value(a) - f.value(b)) / (2.0 * step);
    }
    return g;
  };
  const auto hess_at = [&](double step) {
    SymmetricMatrix m(2);
    const double fp = f.value(p);
    for (int i = 0; i < 2; ++i) {
      Point a = p, b = p;
      a[i] += step;
      b[i] -= step;
      m.at(i, i) = (f.value(a) - 2.0 * fp + f.value(b)) / (step * step);
    }
    Point pp = p, pm = p, mp = p, mm = p;
    pp[0] += step; pp[1] += step;
    pm[0] += step; pm[1] -= step;
    mp[0] -= step; mp[1] += step;
    mm[0] -= step; mm[1] -= step;
    m.at(0, 1) = (f.value(pp) - f.value(pm) - f.value(mp) + f.value(mm)) / (4.0 * step * step);
    return m;
  };

  Jet2 out(2);
  out.value = f.value(p);
  const Point g1 = grad_at(h), g2 = grad_at(h / 2);
  const SymmetricMatrix h1 = hess_at(h), h2 = hess_at(h / 2);
  for (int i = 0; i < 2; ++i) out.gradient[i] = (4.0 * g2[i] - g1[i]) / 3.0;
  for (int i = 0; i < 2; ++i)
    for (int j = i; j < 2; ++j) out.hessian.at(i, j) = (4.0 * h2.at(i, j) - h1.at(i, j)) / 3.0;
  return out;
}

bool rel_close(double a, double b, double tol) { return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b))); }

struct PoolEntry {
  ScalarField field;
  Box box;
  bool wide_safe = true;  // false for exp-composed fields (value blowup)
};

std::vector<PoolEntry> property_pool(std::mt19937_64& rng) {
  std::vector<PoolEntry> pool;
  const Box b2 = square_box(2.0);
  const Box b15 = square_box(1.5);

  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int k = 0; k < 6; ++k) {
    BivariatePoly p;
    for (int ix = 0; ix <= 4; ++ix)
      for (int iy = 0; ix + iy <= 4; ++iy) {
        const int c = coeff(rng);
        if (c != 0) p.add_term({ix, iy}, c);
      }
    if (p.is_zero()) p = BivariatePoly::x();
    pool.push_back({make_field(p), b2, true});
  }

  pool.push_back({family_field(FamilySpec::cassini(1)), b2, true});
  pool.push_back({family_field(FamilySpec::cassini(Rational(1, 2))), b2, true});
  pool.push_back({family_field(FamilySpec::anti(1)), b2, true});
  pool.push_back({family_field(FamilySpec::anti(2)), b2, true});
  pool.push_back({family_field(product_spec()), b2, true});
  pool.push_back({compose_field(OuterMap::exponential(), family_field(FamilySpec::cassini(1))),
                  b15, false});
  pool.push_back({compose_field(OuterMap::polynomial({1.0, 0.0, 2.0}),
                                family_field(FamilySpec::cassini(1))),
                  b2, true});
  return pool;
}

Point random_point(const Box& box, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> ux(box.xmin, box.xmax);
  std::uniform_real_distribution<double> uy(box.ymin, box.ymax);
  return point2(ux(rng), uy(rng));
}

using CheckBody = std::function<bool(std::string*)>;

CheckResult run_check(const std::string& id, const std::string& description,
                      const CheckBody& body) {
  CheckResult result;
  result.id = id;
  result.description = description;
  const auto start = Clock::now();
  try {
    result.pass = body(&result.detail);
  } catch (const std::exception& e) {
    result.pass = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.elapsed_ms = ms_since(start);
  return result;
}

bool check_trace_identity(std::string* detail) {
  const BivariatePoly f = family_polynomial(product_spec());
  const BivariatePoly s = s_poly();
  const BivariatePoly expected = Rational(64) * s.pow(3) - Rational(32) * s;
  const bool ok = trace_hessian(f) == expected;
  *detail = ok ? "exact match, " + std::to_string(expected.terms().size()) + " terms"
               : "trace differs from 64s^3 - 32s";
  return ok;
}

bool check_det_identity(std::string* detail) {
  const BivariatePoly f = family_polynomial(product_spec());
  const BivariatePoly s = s_poly(), t = t_poly();
  const BivariatePoly expected =
      Rational(64) * (Rational(7) * s.pow(6) - Rational(28) * s.pow(4) +
                      Rational(36) * (s.pow(2) * t.pow(2)) - Rational(12) * t.pow(2));
  const bool ok = det_hessian(f) == expected;
  *detail = ok ? "exact match, " + std::to_string(expected.terms().size()) + " terms"
               : "determinant differs from 64(7s^6 - 28s^4 + 36s^2 t^2 - 12t^2)";
  return ok;
}

bool check_trace_region(std::string* detail) {
  const BivariatePoly tr = trace_hessian(family_polynomial(product_spec()));
  const double threshold = 1.0 / std::sqrt(2.0);
  int mismatches = 0, skipped = 0, checked = 0;
  for (int i = 0; i < 100; ++i) {
    for (int j = 0; j < 100; ++j) {
      const double x = -2.0 + 4.0 * i / 99.0;
      const double y = -2.0 + 4.0 * j / 99.0;
      const double s = x * x + y * y;
      if (std::abs(s - threshold) <= 1e-9) {
        ++skipped;
        continue;
      }
      ++checked;
      if ((tr.eval_double(x, y) > 0.0) != (s > threshold)) ++mismatches;
    }
  }
  *detail = std::to_string(checked) + " points, " + std::to_string(mismatches) + " mismatches, " +
            std::to_string(skipped) + " in the boundary band";
  return mismatches == 0;
}

// Order-insensitive: coordinates within rounding of each other make the
// lexicographic sort order unstable, so match as a set.
bool match_points(const CriticalSet& cs, const std::vector<Point>& expected, double tol) {
  if (cs.points.size() != expected.size()) return false;
  std::vector<bool> used(expected.size(), false);
  for (const auto& p : cs.points) {
    bool found = false;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (!used[i] && dist(p.location, expected[i]) <= tol) {
        used[i] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool check_critical_sets(std::string* detail) {
  const Box box = square_box(3.0);
  const CriticalSet cs1 = find_critical_points(family_field(FamilySpec::cassini(1)), box);
  const bool ok1 = match_points(cs1, {point2(-1, 0), point2(0, 0), point2(1, 0)}, 1e-8);

  const double r = std::pow(2.0, 0.25);
  const CriticalSet cs2 = find_critical_points(family_field(product_spec()), box);
  const bool ok2 = match_points(
      cs2, {point2(-r, 0), point2(0, -r), point2(0, 0), point2(0, r), point2(r, 0)}, 1e-8);
  const bool ok3 = cs2.critical_values.size() == 2 &&
                   std::abs(cs2.critical_values[0] + 4.0) <= 1e-9 * 5.0 &&
                   std::abs(cs2.critical_values[1]) <= 1e-9;
  std::ostringstream os;
  os << "quartic: " << cs1.points.size() << " points, product: " << cs2.points.size()
     << " points, values";
  for (double v : cs2.critical_values) os << " " << fmt(v);
  *detail = os.str();
  return ok1 && ok2 && ok3;
}

bool check_first_convex(std::string* detail) {
  const FirstConvexLevel res = first_convex_level(family_field(product_spec()), 0.5, 100.0, 1e-2,
                                                  default_family_box(1.0), 600);
  *detail = "c_star = " + fmt(res.level) + " after " + std::to_string(res.iterations) +
            " bisection steps";
  return std::abs(res.level - 16.0) <= 0.05;
}

bool check_restricted_determinant(bool negate, std::string* detail) {
  const ScalarField f = family_field(product_spec());
  std::ostringstream os;
  bool ok = true;
  for (const double b : {4.0, 25.0}) {
    const auto pts = parametrize_product_level(1.0, b, 256);
    int pos = 0, neg = 0;
    double max_rel = 0.0;
    for (const auto& p : pts) {
      const double d = d_indicator(f.jet(p), negate);
      const double s = p[0] * p[0] + p[1] * p[1];
      const double formula =
          -256.0 * (3.0 * std::pow(s, 8) + 5.0 * b * std::pow(s, 6) - 12.0 * b * std::pow(s, 4) -
                    3.0 * b * b * s * s + b * b);
      max_rel = std::max(max_rel,
                         std::abs(d - formula) / (1.0 + std::max(std::abs(d), std::abs(formula))));
      (d > 0.0 ? pos : neg)++;
    }
    if (max_rel > 1e-6) ok = false;

    // Sample 64 of 256 sits on the diagonal, the extremal direction.
    const double diag = d_indicator(f.jet(pts[32]), negate);
    const double extremal = 512.0 * b * b * (4.0 - std::sqrt(b));
    if (!rel_close(diag, extremal, 1e-6)) ok = false;

    const bool uniform = pos == 0 || neg == 0;
    if (b > 16.0 ? (!uniform || pos != 0) : uniform) ok = false;
    os << "b=" << b << ": max_rel=" << fmt(max_rel) << " pos=" << pos << " neg=" << neg
       << " diag=" << fmt(diag) << "; ";
  }
  *detail = os.str();
  return ok;
}

bool check_component_counts(std::string* detail) {
  const ScalarField f = family_field(product_spec());
  const Box box = default_family_box(1.0);
  const LevelCurve lo = extract_level(f, -2.0, box, 600);
  const LevelCurve hi = extract_level(f, 20.0, box, 600);
  bool closed = true;
  for (const auto& c : lo.components) closed = closed && c.closed;
  for (const auto& c : hi.components) closed = closed && c.closed;
  *detail = "level -2: " + std::to_string(lo.components.size()) + " components, level 20: " +
            std::to_string(hi.components.size()) + (closed ? ", all closed" : ", open present");
  return lo.components.size() == 4 && hi.components.size() == 1 && closed;
}

bool check_parametrization(std::string* detail) {
  const ScalarField f = family_field(product_spec());
  double worst = 0.0;
  bool ok = true;
  for (const double b : {1.0, 16.0, 100.0}) {
    for (const auto& p : parametrize_product_level(1.0, b, 1024)) {
      const double resid = std::abs(f.value(p) - b);
      worst = std::max(worst, resid / (1.0 + b));
      if (resid > 1e-9 * (1.0 + b)) ok = false;
    }
  }
  *detail = "worst relative residual " + fmt(worst) + " over 3072 samples";
  return ok;
}

bool check_certificates(std::string* detail) {
  std::ostringstream os;
  bool ok = true;
  for (const FamilySpec& spec :
       {FamilySpec::cassini(1), FamilySpec::anti(1), product_spec()}) {
    const BoundednessCertificate cert = certify_complement_bounded(spec);
    if (cert.status != "certified") {
      ok = false;
      os << spec.text() << ": " << cert.status << "; ";
      continue;
    }
    const ScalarField f = family_field(spec);
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    int failures = 0;
    for (int k = 0; k < 100000; ++k) {
      const double r = cert.radius * (1.0 + 9.0 * unit(rng));
      const double th = 2.0 * 3.14159265358979323846 * unit(rng);
      const Point p = point2(r * std::cos(th), r * std::sin(th));
      if (hess_plus_contains(f, p, 0.0).status != Membership::in) ++failures;
    }
    if (failures > 0) ok = false;
    os << spec.text() << ": R=" << fmt(cert.radius) << " failures=" << failures << "; ";
  }
  *detail = os.str();
  return ok;
}

bool suite_fd(std::vector<PoolEntry>& pool, std::mt19937_64& rng, std::ostringstream& os) {
  int bad = 0;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int k = 0; k < 1000; ++k) {
    const PoolEntry& e = pool[pick(rng)];
    const Point p = random_point(e.box, rng);
    const Jet2 ad = e.field.jet(p);
    const Jet2 fd = fd_jet(e.field, p, 1e-3);
    bool ok = rel_close(ad.value, fd.value, 1e-5);
    for (int i = 0; i < 2; ++i) ok = ok && rel_close(ad.gradient[i], fd.gradient[i], 1e-5);
    for (int i = 0; i < 2; ++i)
      for (int j = i; j < 2; ++j) ok = ok && rel_close(ad.hessian.at(i, j), fd.hessian.at(i, j), 1e-5);
    if (!ok) ++bad;
  }
  os << "fd: " << bad << " bad; ";
  return bad == 0;
}

bool suite_combinators(std::mt19937_64& rng, std::ostringstream& os) {
  int bad = 0;
  std::uniform_int_distribution<int> coeff(-3, 3);
  const auto random_poly = [&]() {
    BivariatePoly p;
    for (int ix = 0; ix <= 3; ++ix)
      for (int iy = 0; ix + iy <= 3; ++iy) {
        const int c = coeff(rng);
        if (c != 0) p.add_term({ix, iy}, c);
      }
    if (p.is_zero()) p = BivariatePoly::y();
    return p;
  };
  const auto jets_close = [](const Jet2& a, const Jet2& b) {
    bool ok = rel_close(a.value, b.value, 1e-12);
    for (int i = 0; i < 2; ++i) ok = ok && rel_close(a.gradient[i], b.gradient[i], 1e-12);
    for (int i = 0; i < 2; ++i)
      for (int j = i; j < 2; ++j) ok = ok && rel_close(a.hessian.at(i, j), b.hessian.at(i, j), 1e-12);
    return ok;
  };

  for (int k = 0; k < 1000; ++k) {
    const BivariatePoly p = random_poly(), q = random_poly();
    const Point at = random_point(square_box(2.0), rng);

    const Jet2 combinator = product_field(make_field(p), make_field(q)).jet(at);
    const Jet2 direct = make_field(p * q).jet(at);
    if (!jets_close(combinator, direct)) ++bad;

    const int c0 = coeff(rng), c1 = coeff(rng), c2 = coeff(rng);
    const Jet2 composed = compose_field(OuterMap::polynomial({double(c0), double(c1), double(c2)}),
                                        make_field(p))
                              .jet(at);
    const BivariatePoly expanded = BivariatePoly::constant(c0) + Rational(c1) * p +
                                   Rational(c2) * (p * p);
    if (!jets_close(composed, make_field(expanded).jet(at))) ++bad;
  }
  os << "combinators: " << bad << " bad; ";
  return bad == 0;
}

bool suite_rank2(std::mt19937_64& rng, std::ostringstream& os) {
  int bad = 0;
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_int_distribution<int> dims(2, 4);
  for (int k = 0; k < 1000; ++k) {
    const int n = dims(rng);
    Point a(n), b(n);
    for (int i = 0; i < n; ++i) {
      a[i] = u(rng);
      b[i] = u(rng);
    }
    const auto formula = rank2_sym_eigs(a, b);
    const auto dense = eigenvalues(sym_outer(a, b));
    const double scale = 1.0 + norm(a) * norm(b);
    if (std::abs(dense.front() - formula.first) > 1e-10 * scale ||
        std::abs(dense.back() - formula.second) > 1e-10 * scale)
      ++bad;
  }
  os << "rank2: " << bad << " bad; ";
  return bad == 0;
}

bool suite_product_bound(std::vector<PoolEntry>& pool, std::mt19937_64& rng,
                         std::ostringstream& os) {
  int bad = 0, hits = 0;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int k = 0; k < 1000; ++k) {
    const PoolEntry& ef = pool[pick(rng)];
    const PoolEntry& eg = pool[pick(rng)];
    const Point p = random_point(square_box(2.0), rng);
    if (!ef.wide_safe || !eg.wide_safe) continue;
    if (ef.field.value(p) < 0.0 || eg.field.value(p) < 0.0) continue;
    ++hits;
    const double bound = product_lambda_lower_bound(ef.field, eg.field, p);
    const double actual = lambda_min(product_field(ef.field, eg.field).jet(p).hessian);
    if (actual < bound - 1e-9 * (1.0 + std::abs(actual) + std::abs(bound))) ++bad;
  }
  os << "product-bound: " << bad << " bad of " << hits << "; ";
  return bad == 0 && hits >= 200;
}

bool suite_compose_inclusion(std::vector<PoolEntry>& pool, std::mt19937_64& rng,
                             std::ostringstream& os) {
  int bad = 0, hits = 0;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  const OuterMap expo = OuterMap::exponential();
  const OuterMap cubic = OuterMap::polynomial({0.0, 1.0, 0.0, 1.0});  // t + t^3
  for (int k = 0; k < 1000; ++k) {
    const PoolEntry& e = pool[pick(rng)];
    if (!e.wide_safe) continue;
    const Point p = random_point(square_box(1.5), rng);
    if (hess_plus_contains(e.field, p, 0.0).status != Membership::in) continue;

    ++hits;
    const Jet2 je = compose_field(expo, e.field).jet(p);
    if (lambda_min(je.hessian) <= -1e-9 * (1.0 + je.hessian.max_abs())) ++bad;

    // t + t^3 is nondecreasing convex only for t >= 0; restrict accordingly.
    if (e.field.value(p) >= 0.0) {
      const Jet2 jc = compose_field(cubic, e.field).jet(p);
      if (lambda_min(jc.hessian) <= -1e-9 * (1.0 + jc.hessian.max_abs())) ++bad;
    }
  }
  os << "compose-inclusion: " << bad << " bad of " << hits << "; ";
  return bad == 0 && hits >= 100;
}

bool suite_d_negative(std::vector<PoolEntry>& pool, std::mt19937_64& rng, bool negate,
                      std::ostringstream& os) {
  int bad = 0, hits = 0;
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  for (int k = 0; k < 1000; ++k) {
    const PoolEntry& e = pool[pick(rng)];
    const Point p = random_point(e.box, rng);
    const Jet2 j = e.field.jet(p);
    if (lambda_min(j.hessian) <= 1e-9 * (1.0 + j.hessian.max_abs())) continue;
    if (norm(j.gradient) <= 1e-8 * (1.0 + std::abs(j.value))) continue;
    ++hits;
    if (d_indicator(j, negate) >= 0.0) ++bad;
  }
  os << "d-sign: " << bad << " bad of " << hits << "; ";
  return bad == 0 && hits >= 100;
}

bool suite_critical_outer(std::mt19937_64& rng, std::ostringstream& os) {
  (void)rng;
  int bad = 0, hits = 0;
  const ScalarField partners[] = {family_field(FamilySpec::anti(1)),
                                  make_field(BivariatePoly::parse("1*x^3 + 2*x*y - 1*y^2"))};
  for (const FamilySpec& spec : {FamilySpec::cassini(1), product_spec()}) {
    const ScalarField f = family_field(spec);
    const CriticalSet cs = find_critical_points(f, square_box(3.0));
    for (const auto& cp : cs.points) {
      const Point gf = f.jet(cp.location).gradient;
      for (const ScalarField& g : partners) {
        const Point gg = g.jet(cp.location).gradient;
        ++hits;
        if (std::abs(rank2_sym_eigs(gf, gg).first) > 1e-8 * (1.0 + norm(gg))) ++bad;
      }
    }
  }
  os << "critical-outer: " << bad << " bad of " << hits << "; ";
  return bad == 0 && hits >= 10;
}

bool check_property_suites(bool negate, std::string* detail) {
  std::mt19937_64 rng(7);
  std::vector<PoolEntry> pool = property_pool(rng);
  std::ostringstream os;
  bool ok = true;
  ok = suite_fd(pool, rng, os) && ok;
  ok = suite_combinators(rng, os) && ok;
  ok = suite_rank2(rng, os) && ok;
  ok = suite_product_bound(pool, rng, os) && ok;
  ok = suite_compose_inclusion(pool, rng, os) && ok;
  ok = suite_d_negative(pool, rng, negate, os) && ok;
  ok = suite_critical_outer(rng, os) && ok;
  *detail = os.str();
  return ok;
}

bool check_hmax_ordering(std::string* detail) {
  const ScalarField f = family_field(product_spec());
  const Box box = default_family_box(1.0);
  const auto complement = scan_complement(f, box, 0.02);
  const HMaxEstimate hm = h_max_estimate(f, complement);
  const double mu = mu_max(find_critical_points(f, box));
  *detail = "h_max >= " + fmt(hm.value) + " at (" + fmt(hm.argmax[0]) + ", " + fmt(hm.argmax[1]) +
            "), mu_max = " + fmt(mu);
  return hm.value >= -1e-12 && std::abs(mu) <= 1e-9 && hm.value >= mu - 1e-12;
}

}  // namespace

std::vector<CheckResult> run_ground_truth_suite(const GroundTruthOptions& opts) {
  std::vector<CheckResult> results;
  results.push_back(run_check(
      "symbolic-trace-identity",
      "Hessian trace of the quartic product equals 64(x^2+y^2)^3 - 32(x^2+y^2) exactly",
      check_trace_identity));
  results.push_back(run_check(
      "symbolic-det-identity",
      "Hessian determinant of the quartic product equals 64(7s^6 - 28s^4 + 36s^2t^2 - 12t^2)",
      check_det_identity));
  results.push_back(run_check(
      "trace-positivity-region",
      "trace sign matches the x^2+y^2 > 1/sqrt(2) predicate on a 100x100 grid",
      check_trace_region));
  results.push_back(run_check("critical-sets",
                              "critical points and values of both quartic fields are recovered",
                              check_critical_sets));
  results.push_back(run_check("first-convex-level",
                              "first convex level of the product brackets 16 within 0.05",
                              check_first_convex));
  results.push_back(run_check(
      "restricted-determinant",
      "curvature indicator on product levels matches its closed form; sign uniform only above 16",
      [&](std::string* d) { return check_restricted_determinant(opts.negate_convexity_det, d); }));
  results.push_back(run_check("component-counts",
                              "level -2 of the product has 4 closed components, level 20 has 1",
                              check_component_counts));
  results.push_back(run_check("parametrization-residual",
                              "unit-circle parametrization hits the target level to 1e-9 relative",
                              check_parametrization));
  results.push_back(run_check(
      "boundedness-certificates",
      "complement certificates hold for both quartics and their product; no failures beyond R",
      check_certificates));
  results.push_back(run_check(
      "property-suites",
      "derivative, combinator, eigenvalue, bound, inclusion and sign-test properties",
      [&](std::string* d) { return check_property_suites(opts.negate_convexity_det, d); }));
  results.push_back(run_check("hmax-mumax-ordering",
                              "max of f over the complement dominates the largest critical value",
                              check_hmax_ordering));
  return results;
}

OrderedJson ground_truth_matrix(const std::vector<CheckResult>& results) {
  OrderedJson checks = OrderedJson::array();
  int passed = 0;
  for (const auto& r : results) {
    checks.push_back(OrderedJson{{"id", r.id},
                                 {"description", r.description},
                                 {"pass", r.pass},
                                 {"detail", r.detail}});
    if (r.pass) ++passed;
  }
  OrderedJson j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["checks"] = checks;
  j["passed"] = passed;
  j["failed"] = static_cast<int>(results.size()) - passed;
  return j;
}

}  // namespace hessplus
