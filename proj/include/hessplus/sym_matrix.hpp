#pragma once

#include <utility>
#include <vector>

#include "hessplus/geometry.hpp"

namespace hessplus {

// Dense symmetric matrix, upper triangle stored row-major.
class SymmetricMatrix {
 public:
  SymmetricMatrix() : n_(0) {}
  explicit SymmetricMatrix(int dim) : n_(dim), upper_(dim * (dim + 1) / 2, 0.0) {}

  static SymmetricMatrix diag2(double a, double d) {
    SymmetricMatrix m(2);
    m.at(0, 0) = a;
    m.at(1, 1) = d;
    return m;
  }

  int dim() const { return n_; }

  double& at(int i, int j) {
    if (i > j) std::swap(i, j);
    return upper_[idx(i, j)];
  }
  double at(int i, int j) const {
    if (i > j) std::swap(i, j);
    return upper_[idx(i, j)];
  }

  double trace() const {
    double t = 0.0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
  }

  // Determinant of the 2x2 case only.
  double det2() const { return at(0, 0) * at(1, 1) - at(0, 1) * at(0, 1); }

  double max_abs() const;

  SymmetricMatrix& operator+=(const SymmetricMatrix& o);
  SymmetricMatrix& operator*=(double s);
  friend SymmetricMatrix operator+(SymmetricMatrix a, const SymmetricMatrix& b) {
    a += b;
    return a;
  }
  friend SymmetricMatrix operator*(double s, SymmetricMatrix a) {
    a *= s;
    return a;
  }

 private:
  int idx(int i, int j) const { return i * n_ - i * (i - 1) / 2 + (j - i); }
  int n_;
  std::vector<double> upper_;
};

// u v^T + v u^T
SymmetricMatrix sym_outer(const Point& u, const Point& v);
// u u^T
SymmetricMatrix self_outer(const Point& u);

// All eigenvalues, ascending.  n <= 2 uses closed forms; larger matrices use
// cyclic Jacobi sweeps driven to off-diagonal norm <= 1e-13 * max|entry|.
std::vector<double> eigenvalues(const SymmetricMatrix& m);

double lambda_min(const SymmetricMatrix& m);
double mu_max(const SymmetricMatrix& m);

// Extreme eigenvalues of u v^T + v u^T without forming the matrix:
// <u,v> +/- |u||v|.  Returns {min, max}.
std::pair<double, double> rank2_sym_eigs(const Point& u, const Point& v);

}  // namespace hessplus
