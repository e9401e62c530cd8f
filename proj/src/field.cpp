#include "hessplus/field.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "hessplus/errors.hpp"

namespace hessplus {

void ScalarField::check_point(const Point& p) const {
  if (!impl_) throw domain_error("field is empty");
  if (static_cast<int>(p.size()) != impl_->dim()) {
    std::ostringstream os;
    os << "point has dimension " << p.size() << ", field expects " << impl_->dim();
    throw domain_error(os.str());
  }
}

double ScalarField::value(const Point& p) const {
  check_point(p);
  return impl_->value(p);
}

Jet2 ScalarField::jet(const Point& p) const {
  check_point(p);
  return impl_->jet(p);
}

namespace {

class ConstantField final : public FieldImpl {
 public:
  ConstantField(int dim, double c) : dim_(dim), c_(c) {}
  int dim() const override { return dim_; }
  double value(const Point&) const override { return c_; }
  Jet2 jet(const Point&) const override {
    Jet2 j(dim_);
    j.value = c_;
    return j;
  }
  std::string name() const override {
    std::ostringstream os;
    os << "const(" << c_ << ")";
    return os.str();
  }

 private:
  int dim_;
  double c_;
};

class CoordinateField final : public FieldImpl {
 public:
  CoordinateField(int dim, int axis) : dim_(dim), axis_(axis) {
    if (axis < 0 || axis >= dim) throw construction_error("coordinate axis out of range");
  }
  int dim() const override { return dim_; }
  double value(const Point& p) const override { return p[axis_]; }
  Jet2 jet(const Point& p) const override {
    Jet2 j(dim_);
    j.value = p[axis_];
    j.gradient[axis_] = 1.0;
    return j;
  }
  std::string name() const override {
    std::ostringstream os;
    os << "coord(" << axis_ << ")";
    return os.str();
  }

 private:
  int dim_;
  int axis_;
};

class ProductField final : public FieldImpl {
 public:
  ProductField(ScalarField f, ScalarField g) : f_(std::move(f)), g_(std::move(g)) {
    if (f_.dim() != g_.dim()) throw construction_error("product factors have different dimensions");
  }
  int dim() const override { return f_.dim(); }
  double value(const Point& p) const override { return f_.value(p) * g_.value(p); }
  Jet2 jet(const Point& p) const override {
    const Jet2 a = f_.jet(p);
    const Jet2 b = g_.jet(p);
    Jet2 j(dim());
    j.value = a.value * b.value;
    for (int i = 0; i < dim(); ++i)
      j.gradient[i] = a.value * b.gradient[i] + b.value * a.gradient[i];
    j.hessian = a.value * b.hessian + b.value * a.hessian + sym_outer(a.gradient, b.gradient);
    return j;
  }
  std::string name() const override { return "product(" + f_.name() + "," + g_.name() + ")"; }

 private:
  ScalarField f_, g_;
};

class ComposeField final : public FieldImpl {
 public:
  ComposeField(OuterMap phi, ScalarField f) : phi_(std::move(phi)), f_(std::move(f)) {}
  int dim() const override { return f_.dim(); }
  double value(const Point& p) const override { return phi_.eval(f_.value(p)); }
  Jet2 jet(const Point& p) const override {
    const Jet2 a = f_.jet(p);
    const double d1 = phi_.d1(a.value);
    const double d2 = phi_.d2(a.value);
    Jet2 j(dim());
    j.value = phi_.eval(a.value);
    for (int i = 0; i < dim(); ++i) j.gradient[i] = d1 * a.gradient[i];
    j.hessian = d1 * a.hessian + d2 * self_outer(a.gradient);
    return j;
  }
  std::string name() const override { return "compose(" + phi_.describe() + "," + f_.name() + ")"; }

 private:
  OuterMap phi_;
  ScalarField f_;
};

class JetRuleField final : public FieldImpl {
 public:
  JetRuleField(int dim, std::function<Jet2(const Point&)> rule, std::string name)
      : dim_(dim), rule_(std::move(rule)), name_(std::move(name)) {}
  int dim() const override { return dim_; }
  double value(const Point& p) const override { return rule_(p).value; }
  Jet2 jet(const Point& p) const override { return rule_(p); }
  std::string name() const override { return name_; }

 private:
  int dim_;
  std::function<Jet2(const Point&)> rule_;
  std::string name_;
};

}  // namespace

ScalarField constant_field(int dim, double c) {
  return ScalarField(std::make_shared<ConstantField>(dim, c));
}

ScalarField coordinate_field(int dim, int axis) {
  return ScalarField(std::make_shared<CoordinateField>(dim, axis));
}

ScalarField product_field(const ScalarField& f, const ScalarField& g) {
  return ScalarField(std::make_shared<ProductField>(f, g));
}

ScalarField compose_field(const OuterMap& phi, const ScalarField& f) {
  return ScalarField(std::make_shared<ComposeField>(phi, f));
}

ScalarField jet_rule_field(int dim, std::function<Jet2(const Point&)> rule, std::string name) {
  return ScalarField(std::make_shared<JetRuleField>(dim, std::move(rule), std::move(name)));
}

double Jacobian2xN::max_row_norm() const {
  return std::max(norm(row_f), norm(row_g));
}

std::array<double, 2> Jacobian2xN::singular_values() const {
  // Gram matrix of the two rows; its eigenvalues are the squared singular values.
  const double a = dot(row_f, row_f);
  const double b = dot(row_f, row_g);
  const double d = dot(row_g, row_g);
  const double h = std::hypot(a - d, 2.0 * b);
  const double mean = 0.5 * (a + d);
  const double hi = mean + 0.5 * h;
  const double lo = std::max(mean - 0.5 * h, 0.0);
  return {std::sqrt(hi), std::sqrt(lo)};
}

Jacobian2xN direct_sum_jacobian(const ScalarField& f, const ScalarField& g, const Point& p) {
  if (f.dim() != g.dim()) throw domain_error("direct sum factors have different dimensions");
  Jacobian2xN j;
  j.row_f = f.jet(p).gradient;
  j.row_g = g.jet(p).gradient;
  return j;
}

double product_lambda_lower_bound(const ScalarField& f, const ScalarField& g, const Point& p) {
  const Jet2 a = f.jet(p);
  const Jet2 b = g.jet(p);
  if (a.value < 0.0 || b.value < 0.0) {
    std::ostringstream os;
    os << "product eigenvalue bound requires nonnegative factors at the query point; "
       << "got f = " << a.value << ", g = " << b.value;
    throw precondition_error(os.str());
  }
  return a.value * lambda_min(b.hessian) + b.value * lambda_min(a.hessian) +
         rank2_sym_eigs(a.gradient, b.gradient).first;
}

double compose_lambda_lower_bound(const OuterMap& phi, const ScalarField& f, const Point& p) {
  const Jet2 a = f.jet(p);
  if (!phi.nondecreasing_convex_at(a.value)) {
    std::ostringstream os;
    os << "composition eigenvalue bound requires phi' >= 0 and phi'' >= 0 at t = " << a.value;
    throw precondition_error(os.str());
  }
  return phi.d1(a.value) * lambda_min(a.hessian);
}

}  // namespace hessplus
