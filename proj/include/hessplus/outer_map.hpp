#pragma once

#include <string>
#include <vector>

namespace hessplus {

// Smooth map R -> R used as the outer factor of compositions.  Carries exact
// first and second derivatives.  pow is restricted to t > 0 so that every
// integer exponent is smooth on its domain.
class OuterMap {
 public:
  static OuterMap affine(double scale, double shift);
  static OuterMap exponential();
  static OuterMap power(int exponent);
  // coeffs[k] multiplies t^k.
  static OuterMap polynomial(std::vector<double> coeffs);
  static OuterMap identity() { return affine(1.0, 0.0); }

  double eval(double t) const;
  double d1(double t) const;
  double d2(double t) const;

  // True when phi' > 0 and phi'' >= 0 hold on [lo, hi] (intersected with the
  // map's domain).  Closed forms for affine/exp/power; polynomials are
  // checked on a 513-point uniform sample of the interval.
  bool convex_increasing_on(double lo, double hi) const;

  // Pointwise hypothesis of the composition eigenvalue bound.
  bool nondecreasing_convex_at(double t) const { return d1(t) >= 0.0 && d2(t) >= 0.0; }

  std::string describe() const;

 private:
  enum class Kind { affine, exp, power, poly };
  OuterMap(Kind k, double a, double b, int m, std::vector<double> c)
      : kind_(k), a_(a), b_(b), m_(m), coeffs_(std::move(c)) {}
  void check_domain(double t) const;

  Kind kind_;
  double a_ = 0.0, b_ = 0.0;
  int m_ = 0;
  std::vector<double> coeffs_;
};

}  // namespace hessplus
