#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hessplus/field.hpp"
#include "hessplus/rational.hpp"

namespace hessplus {

struct Monomial {
  int ix = 0;
  int iy = 0;
  int degree() const { return ix + iy; }
  bool operator==(const Monomial&) const = default;
};

// Graded lexicographic, descending: higher total degree first, then higher
// x exponent.  This is the canonical term order for storage and printing.
struct GrlexDesc {
  bool operator()(const Monomial& a, const Monomial& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.ix > b.ix;
  }
};

// Bivariate polynomial with exact rational coefficients.  Zero coefficients
// are never stored, so equal polynomials compare equal term by term.
class BivariatePoly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexDesc>;

  BivariatePoly() = default;

  static BivariatePoly constant(const Rational& c);
  static BivariatePoly monomial(const Rational& c, int ix, int iy);
  static BivariatePoly x() { return monomial(1, 1, 0); }
  static BivariatePoly y() { return monomial(1, 0, 1); }

  bool is_zero() const { return terms_.empty(); }
  // Total degree; -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }
  const TermMap& terms() const { return terms_; }
  Rational coefficient(int ix, int iy) const;

  BivariatePoly operator-() const;
  BivariatePoly& operator+=(const BivariatePoly& o);
  BivariatePoly& operator-=(const BivariatePoly& o);
  friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
  friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
  friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
  friend BivariatePoly operator*(const Rational& s, const BivariatePoly& a);
  BivariatePoly pow(int k) const;
  bool operator==(const BivariatePoly&) const = default;

  BivariatePoly partial_x() const;
  BivariatePoly partial_y() const;

  Rational eval(const Rational& x, const Rational& y) const;
  double eval_double(double x, double y) const;

  // Canonical text: terms in grlex order, explicit coefficients, "^" powers,
  // e.g. "1*x^4 + 2*x^2*y^2 + 1*y^4 - 2*x^2 + 2*y^2".
  std::string to_string() const;
  // Inverse of to_string, also accepting omitted coefficients, reordered
  // factors and repeated variables.  Throws parse_error with the offset of
  // the offending character (plus base_offset, for embedded fragments).
  static BivariatePoly parse(const std::string& text, std::size_t base_offset = 0);

  void add_term(const Monomial& m, const Rational& c);

 private:
  TermMap terms_;
};

struct SymbolicHessian {
  BivariatePoly fxx, fxy, fyy;
};

SymbolicHessian symbolic_hessian(const BivariatePoly& f);
BivariatePoly trace_hessian(const BivariatePoly& f);
BivariatePoly det_hessian(const BivariatePoly& f);
// D(f) = 2 fx fy fxy - fx^2 fyy - fy^2 fxx.  Along a regular level curve this
// is the curvature indicator: D < 0 everywhere on a closed regular connected
// level forces strict convexity of the enclosed region.
BivariatePoly convexity_det(const BivariatePoly& f);

// Highest-degree homogeneous part (zero polynomial for zero input).
BivariatePoly top_homogeneous(const BivariatePoly& f);
// If the top homogeneous part equals c * (x^2+y^2)^(deg/2), returns c.
std::optional<Rational> radial_top_coefficient(const BivariatePoly& f);
// Sum of |coefficients| over the degree-d terms.
Rational degree_coefficient_mass(const BivariatePoly& f, int d);
// Exact radius R >= 1 such that f > 0 on |(x,y)| >= R, valid whenever the top
// homogeneous part is c * (x^2+y^2)^(deg/2) with c > 0:
//   R = 1 + max_{d < deg} (mass_d / c).
std::optional<Rational> positivity_radius(const BivariatePoly& f);

// Basis change to s = x^2 + y^2, t = x^2 - y^2 for even-even polynomials;
// the result reuses x for s and y for t.  nullopt when any monomial has an
// odd exponent.
std::optional<BivariatePoly> to_radial_basis(const BivariatePoly& f);
// Substitutes s = x^2 + y^2, t = x^2 - y^2 into a polynomial written in the
// (s, t) basis.
BivariatePoly from_radial_basis(const BivariatePoly& st);
// In the (s, t) basis, replaces t^2 by the given polynomial in s.  nullopt
// when an odd t power occurs.
std::optional<BivariatePoly> eliminate_t_squared(const BivariatePoly& st,
                                                 const BivariatePoly& t_squared_in_s);

// Scalar-field view backed by compiled double-precision partials up to
// second order.  Values agree with eval_double.
ScalarField make_field(const BivariatePoly& f, std::string name = "poly");

}  // namespace hessplus
