#pragma once

// Shared test oracles: finite-difference jets independent of the library's
// own derivative code, and relative comparison helpers.

#include <cmath>
#include <algorithm>

#include "hessplus/field.hpp"
#include "hessplus/jet.hpp"

namespace testsupport {

using hessplus::Jet2;
using hessplus::Point;
using hessplus::ScalarField;

inline bool rel_close(double a, double b, double tol) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

// Central differences with one Richardson step: d(h/2) combined with d(h)
// as (4 d(h/2) - d(h)) / 3 cancels the leading error term.
inline Jet2 fd_jet(const ScalarField& f, const Point& p, double h = 1e-3) {
  auto grad_at = [&](double step) {
    Point g(p.size(), 0.0);
    for (std::size_t i = 0; i < p.size(); ++i) {
      Point a = p, b = p;
      a[i] += step;
      b[i] -= step;
      g[i] = (f.value(a) - f.value(b)) / (2.0 * step);
    }
    return g;
  };
  auto hess_at = [&](double step) {
    hessplus::SymmetricMatrix m(static_cast<int>(p.size()));
    const double f0 = f.value(p);
    for (std::size_t i = 0; i < p.size(); ++i) {
      Point a = p, b = p;
      a[i] += step;
      b[i] -= step;
      m.at(static_cast<int>(i), static_cast<int>(i)) =
          (f.value(a) - 2.0 * f0 + f.value(b)) / (step * step);
      for (std::size_t j = i + 1; j < p.size(); ++j) {
        Point pp = p, pm = p, mp = p, mm = p;
        pp[i] += step; pp[j] += step;
        pm[i] += step; pm[j] -= step;
        mp[i] -= step; mp[j] += step;
        mm[i] -= step; mm[j] -= step;
        m.at(static_cast<int>(i), static_cast<int>(j)) =
            (f.value(pp) - f.value(pm) - f.value(mp) + f.value(mm)) / (4.0 * step * step);
      }
    }
    return m;
  };

  Jet2 jet(static_cast<int>(p.size()));
  jet.value = f.value(p);
  const Point g1 = grad_at(h), g2 = grad_at(h / 2);
  for (std::size_t i = 0; i < p.size(); ++i) jet.gradient[i] = (4.0 * g2[i] - g1[i]) / 3.0;
  const auto h1 = hess_at(h), h2 = hess_at(h / 2);
  const int n = static_cast<int>(p.size());
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) jet.hessian.at(i, j) = (4.0 * h2.at(i, j) - h1.at(i, j)) / 3.0;
  return jet;
}

// Max relative deviation between two jets over value, gradient and Hessian.
inline double jet_deviation(const Jet2& a, const Jet2& b) {
  auto rel = [](double x, double y) {
    return std::abs(x - y) / (1.0 + std::max(std::abs(x), std::abs(y)));
  };
  double worst = rel(a.value, b.value);
  for (int i = 0; i < a.dim(); ++i) worst = std::max(worst, rel(a.gradient[i], b.gradient[i]));
  for (int i = 0; i < a.dim(); ++i)
    for (int j = i; j < a.dim(); ++j)
      worst = std::max(worst, rel(a.hessian.at(i, j), b.hessian.at(i, j)));
  return worst;
}

}  // namespace testsupport
