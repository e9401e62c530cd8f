#include "hessplus/sym_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace hessplus {

double SymmetricMatrix::max_abs() const {
  double m = 0.0;
  for (double v : upper_) m = std::max(m, std::abs(v));
  return m;
}

SymmetricMatrix& SymmetricMatrix::operator+=(const SymmetricMatrix& o) {
  for (std::size_t k = 0; k < upper_.size(); ++k) upper_[k] += o.upper_[k];
  return *this;
}

SymmetricMatrix& SymmetricMatrix::operator*=(double s) {
  for (double& v : upper_) v *= s;
  return *this;
}

SymmetricMatrix sym_outer(const Point& u, const Point& v) {
  const int n = static_cast<int>(u.size());
  SymmetricMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.at(i, j) = u[i] * v[j] + u[j] * v[i];
  return m;
}

SymmetricMatrix self_outer(const Point& u) {
  const int n = static_cast<int>(u.size());
  SymmetricMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.at(i, j) = u[i] * u[j];
  return m;
}

namespace {

// Eigenvalues of [[a, b], [b, d]] via hypot; avoids cancellation in the
// discriminant when b is small relative to a - d.
std::pair<double, double> eig2(double a, double b, double d) {
  const double h = std::hypot(a - d, 2.0 * b);
  const double mean = 0.5 * (a + d);
  return {mean - 0.5 * h, mean + 0.5 * h};
}

std::vector<double> jacobi_eigenvalues(SymmetricMatrix m) {
  const int n = m.dim();
  const double scale = std::max(m.max_abs(), 1e-300);
  const double target = 1e-13 * scale;
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off = std::max(off, std::abs(m.at(i, j)));
    if (off <= target) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = m.at(p, q);
        if (std::abs(apq) <= target * 1e-3) continue;
        const double app = m.at(p, p);
        const double aqq = m.at(q, q);
        const double theta = 0.5 * std::atan2(2.0 * apq, aqq - app);
        const double c = std::cos(theta), s = std::sin(theta);
        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = m.at(k, p), akq = m.at(k, q);
          m.at(k, p) = c * akp - s * akq;
          m.at(k, q) = s * akp + c * akq;
        }
        m.at(p, p) = c * c * app - 2.0 * s * c * apq + s * s * aqq;
        m.at(q, q) = s * s * app + 2.0 * s * c * apq + c * c * aqq;
        m.at(p, q) = 0.0;
      }
    }
  }
  std::vector<double> eigs(n);
  for (int i = 0; i < n; ++i) eigs[i] = m.at(i, i);
  std::sort(eigs.begin(), eigs.end());
  return eigs;
}

}  // namespace

std::vector<double> eigenvalues(const SymmetricMatrix& m) {
  const int n = m.dim();
  if (n == 0) return {};
  if (n == 1) return {m.at(0, 0)};
  if (n == 2) {
    auto [lo, hi] = eig2(m.at(0, 0), m.at(0, 1), m.at(1, 1));
    return {lo, hi};
  }
  return jacobi_eigenvalues(m);
}

double lambda_min(const SymmetricMatrix& m) { return eigenvalues(m).front(); }

double mu_max(const SymmetricMatrix& m) { return eigenvalues(m).back(); }

std::pair<double, double> rank2_sym_eigs(const Point& u, const Point& v) {
  const double d = dot(u, v);
  const double p = norm(u) * norm(v);
  // p >= |d| by Cauchy-Schwarz, so d - p <= 0 <= d + p; the clamps only
  // remove roundoff at the degenerate ends (u || v, or u antiparallel to v).
  return {std::min(d - p, 0.0), std::max(d + p, 0.0)};
}

}  // namespace hessplus
