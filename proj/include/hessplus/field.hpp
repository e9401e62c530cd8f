#pragma once

#include <array>
#include <functional>
#include <memory>
#include <string>

#include "hessplus/geometry.hpp"
#include "hessplus/jet.hpp"
#include "hessplus/outer_map.hpp"

namespace hessplus {

// Implementation node of a field expression tree.  Nodes are immutable and
// shared; value() must agree with jet().value.
class FieldImpl {
 public:
  virtual ~FieldImpl() = default;
  virtual int dim() const = 0;
  virtual double value(const Point& p) const = 0;
  virtual Jet2 jet(const Point& p) const = 0;
  virtual std::string name() const = 0;
};

// C^2 scalar field on R^n exposing exact value/gradient/Hessian queries.
class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(std::shared_ptr<const FieldImpl> impl) : impl_(std::move(impl)) {}

  bool valid() const { return static_cast<bool>(impl_); }
  int dim() const { return impl_->dim(); }
  std::string name() const { return impl_->name(); }

  double value(const Point& p) const;
  Jet2 jet(const Point& p) const;

 private:
  void check_point(const Point& p) const;
  std::shared_ptr<const FieldImpl> impl_;
};

ScalarField constant_field(int dim, double c);
ScalarField coordinate_field(int dim, int axis);
// (f*g)(p) = f(p) g(p); jets combine by the Leibniz rules
//   grad(fg) = f grad g + g grad f
//   H(fg)    = f H(g) + g H(f) + grad f grad g^T + grad g grad f^T.
ScalarField product_field(const ScalarField& f, const ScalarField& g);
// (phi. f)(p) = phi(f(p)); jets combine by the chain rules
//   grad(phi.f) = phi'(f) grad f
//   H(phi.f)    = phi'(f) H(f) + phi''(f) grad f grad f^T.
ScalarField compose_field(const OuterMap& phi, const ScalarField& f);
// Black-box node supplying its own jets; value() uses jet().value.
ScalarField jet_rule_field(int dim, std::function<Jet2(const Point&)> rule, std::string name);

// 2 x n Jacobian of p -> (f(p), g(p)).
struct Jacobian2xN {
  Point row_f;
  Point row_g;
  int cols() const { return static_cast<int>(row_f.size()); }
  double max_row_norm() const;
  // Singular values (descending) via the 2x2 Gram matrix.
  std::array<double, 2> singular_values() const;
};
Jacobian2xN direct_sum_jacobian(const ScalarField& f, const ScalarField& g, const Point& p);

// f(p) lambda(Hg) + g(p) lambda(Hf) + min-eig(grad f grad g^T + grad g grad f^T).
// Requires f(p) >= 0 and g(p) >= 0.
double product_lambda_lower_bound(const ScalarField& f, const ScalarField& g, const Point& p);
// phi'(f(p)) lambda(Hf).  Requires phi' >= 0 and phi'' >= 0 at f(p).
double compose_lambda_lower_bound(const OuterMap& phi, const ScalarField& f, const Point& p);

}  // namespace hessplus
