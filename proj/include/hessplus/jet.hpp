#pragma once

#include "hessplus/geometry.hpp"
#include "hessplus/sym_matrix.hpp"

namespace hessplus {

// Second-order data of a scalar field at one point.
struct Jet2 {
  double value = 0.0;
  Point gradient;
  SymmetricMatrix hessian;

  Jet2() = default;
  explicit Jet2(int dim) : gradient(dim, 0.0), hessian(dim) {}
  int dim() const { return static_cast<int>(gradient.size()); }
};

}  // namespace hessplus
