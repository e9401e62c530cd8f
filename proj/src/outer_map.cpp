#include "hessplus/outer_map.hpp"

#include <cmath>
#include <sstream>

#include "hessplus/errors.hpp"

namespace hessplus {

namespace {

double poly_eval(const std::vector<double>& c, double t) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
  return v;
}

std::vector<double> poly_derivative(const std::vector<double>& c) {
  std::vector<double> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
  return d;
}

}  // namespace

OuterMap OuterMap::affine(double scale, double shift) {
  return OuterMap(Kind::affine, scale, shift, 0, {});
}

OuterMap OuterMap::exponential() { return OuterMap(Kind::exp, 0, 0, 0, {}); }

OuterMap OuterMap::power(int exponent) {
  if (exponent < 1) throw construction_error("pow exponent must be a positive integer");
  return OuterMap(Kind::power, 0, 0, exponent, {});
}

OuterMap OuterMap::polynomial(std::vector<double> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  return OuterMap(Kind::poly, 0, 0, 0, std::move(coeffs));
}

void OuterMap::check_domain(double t) const {
  if (kind_ == Kind::power && t <= 0.0) {
    std::ostringstream os;
    os << "pow(" << m_ << ") is defined for t > 0, got t = " << t;
    throw domain_error(os.str());
  }
}

double OuterMap::eval(double t) const {
  check_domain(t);
  switch (kind_) {
    case Kind::affine: return a_ * t + b_;
    case Kind::exp: return std::exp(t);
    case Kind::power: return std::pow(t, m_);
    case Kind::poly: return poly_eval(coeffs_, t);
  }
  return 0.0;
}

double OuterMap::d1(double t) const {
  check_domain(t);
  switch (kind_) {
    case Kind::affine: return a_;
    case Kind::exp: return std::exp(t);
    case Kind::power: return m_ * std::pow(t, m_ - 1);
    case Kind::poly: return poly_eval(poly_derivative(coeffs_), t);
  }
  return 0.0;
}

double OuterMap::d2(double t) const {
  check_domain(t);
  switch (kind_) {
    case Kind::affine: return 0.0;
    case Kind::exp: return std::exp(t);
    case Kind::power:
      return m_ == 1 ? 0.0 : static_cast<double>(m_) * (m_ - 1) * std::pow(t, m_ - 2);
    case Kind::poly: return poly_eval(poly_derivative(poly_derivative(coeffs_)), t);
  }
  return 0.0;
}

bool OuterMap::convex_increasing_on(double lo, double hi) const {
  switch (kind_) {
    case Kind::affine: return a_ > 0.0;
    case Kind::exp: return true;
    case Kind::power:
      // On t > 0: phi' = m t^{m-1} > 0 and phi'' = m(m-1) t^{m-2} >= 0.
      return true;
    case Kind::poly: {
      const int kSamples = 513;
      if (hi < lo) std::swap(lo, hi);
      for (int i = 0; i < kSamples; ++i) {
        const double t = lo + (hi - lo) * i / (kSamples - 1);
        if (!(d1(t) > 0.0) || !(d2(t) >= 0.0)) return false;
      }
      return true;
    }
  }
  return false;
}

std::string OuterMap::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::affine: os << "affine:" << a_ << "," << b_; break;
    case Kind::exp: os << "exp"; break;
    case Kind::power: os << "pow:" << m_; break;
    case Kind::poly: {
      os << "poly:";
      for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) os << ",";
        os << coeffs_[k];
      }
      break;
    }
  }
  return os.str();
}

}  // namespace hessplus
