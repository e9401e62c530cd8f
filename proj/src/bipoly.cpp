#include "hessplus/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <sstream>

#include "hessplus/errors.hpp"

namespace hessplus {

Rational parse_rational(const std::string& text, std::size_t base_offset) {
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) -> Rational {
    throw parse_error(msg, base_offset + i);
  };
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  auto digits = [&]() -> std::string {
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start) fail("expected digits");
    return text.substr(start, i - start);
  };
  BigInt num(digits());
  BigInt den(1);
  if (i < text.size() && text[i] == '/') {
    ++i;
    den = BigInt(digits());
    if (den == 0) fail("zero denominator");
  }
  if (i != text.size()) fail("trailing characters in rational");
  Rational r(num, den);
  return neg ? Rational(-r) : r;
}

BivariatePoly BivariatePoly::constant(const Rational& c) {
  BivariatePoly p;
  p.add_term({0, 0}, c);
  return p;
}

BivariatePoly BivariatePoly::monomial(const Rational& c, int ix, int iy) {
  BivariatePoly p;
  p.add_term({ix, iy}, c);
  return p;
}

Rational BivariatePoly::coefficient(int ix, int iy) const {
  auto it = terms_.find({ix, iy});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePoly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BivariatePoly BivariatePoly::operator-() const {
  BivariatePoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
  BivariatePoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add_term({ma.ix + mb.ix, ma.iy + mb.iy}, ca * cb);
  return r;
}

BivariatePoly operator*(const Rational& s, const BivariatePoly& a) {
  BivariatePoly r;
  if (s == 0) return r;
  for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, s * c);
  return r;
}

BivariatePoly BivariatePoly::pow(int k) const {
  if (k < 0) throw domain_error("polynomial power must be nonnegative");
  BivariatePoly r = constant(1);
  BivariatePoly base = *this;
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

BivariatePoly BivariatePoly::partial_x() const {
  BivariatePoly r;
  for (const auto& [m, c] : terms_)
    if (m.ix > 0) r.add_term({m.ix - 1, m.iy}, Rational(m.ix) * c);
  return r;
}

BivariatePoly BivariatePoly::partial_y() const {
  BivariatePoly r;
  for (const auto& [m, c] : terms_)
    if (m.iy > 0) r.add_term({m.ix, m.iy - 1}, Rational(m.iy) * c);
  return r;
}

Rational BivariatePoly::eval(const Rational& x, const Rational& y) const {
  // Powers are shared across terms; exponents stay small in practice.
  int mx = 0, my = 0;
  for (const auto& [m, c] : terms_) {
    mx = std::max(mx, m.ix);
    my = std::max(my, m.iy);
  }
  std::vector<Rational> xs(mx + 1), ys(my + 1);
  xs[0] = 1;
  for (int i = 1; i <= mx; ++i) xs[i] = xs[i - 1] * x;
  ys[0] = 1;
  for (int i = 1; i <= my; ++i) ys[i] = ys[i - 1] * y;
  Rational acc(0);
  for (const auto& [m, c] : terms_) acc += c * xs[m.ix] * ys[m.iy];
  return acc;
}

double BivariatePoly::eval_double(double x, double y) const {
  int mx = 0, my = 0;
  for (const auto& [m, c] : terms_) {
    mx = std::max(mx, m.ix);
    my = std::max(my, m.iy);
  }
  std::vector<double> xs(mx + 1), ys(my + 1);
  xs[0] = 1.0;
  for (int i = 1; i <= mx; ++i) xs[i] = xs[i - 1] * x;
  ys[0] = 1.0;
  for (int i = 1; i <= my; ++i) ys[i] = ys[i - 1] * y;
  double acc = 0.0;
  for (const auto& [m, c] : terms_) acc += to_double(c) * xs[m.ix] * ys[m.iy];
  return acc;
}

std::string BivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool neg = c < 0;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    os << rational_to_string(rational_abs(c));
    if (m.ix > 0) {
      os << "*x";
      if (m.ix > 1) os << "^" << m.ix;
    }
    if (m.iy > 0) {
      os << "*y";
      if (m.iy > 1) os << "^" << m.iy;
    }
  }
  return os.str();
}

namespace {

// Recursive-descent reader for the polynomial term grammar.
struct PolyReader {
  const std::string& s;
  std::size_t i = 0;
  std::size_t base;

  explicit PolyReader(const std::string& text, std::size_t base_offset)
      : s(text), base(base_offset) {}

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw parse_error(msg, base + at);
  }

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }

  bool peek_is(char c) {
    skip_ws();
    return i < s.size() && s[i] == c;
  }

  std::string read_digits(const std::string& what) {
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected " + what, i);
    if (i < s.size() && s[i] == '.')
      fail("expected integer or fraction coefficient (decimals are not accepted)", i);
    return s.substr(start, i - start);
  }

  Rational read_coefficient() {
    BigInt num(read_digits("digits"));
    if (peek_is('/')) {
      ++i;
      skip_ws();
      BigInt den(read_digits("denominator digits"));
      if (den == 0) fail("zero denominator", i - 1);
      return Rational(num, den);
    }
    return Rational(num);
  }

  int read_exponent() {
    skip_ws();
    std::string d = read_digits("exponent");
    if (d.size() > 4) fail("exponent too large", i - d.size());
    return std::stoi(d);
  }

  // factor := coefficient | ('x' | 'y') ['^' exponent]
  // term   := factor {'*' factor}
  BivariatePoly read_term() {
    BivariatePoly acc = BivariatePoly::constant(1);
    bool more = true;
    while (more) {
      skip_ws();
      if (i >= s.size()) fail("expected term", i);
      char c = s[i];
      if (c == 'x' || c == 'y') {
        ++i;
        int e = 1;
        if (peek_is('^')) {
          ++i;
          e = read_exponent();
        }
        acc = acc * (c == 'x' ? BivariatePoly::x() : BivariatePoly::y()).pow(e);
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        acc = read_coefficient() * acc;
      } else {
        fail(std::string("unexpected character '") + c + "' in term", i);
      }
      more = peek_is('*');
      if (more) ++i;
    }
    return acc;
  }

  BivariatePoly read_polynomial() {
    BivariatePoly result;
    skip_ws();
    if (i >= s.size()) fail("empty polynomial", i);
    bool negate = false;
    if (s[i] == '+' || s[i] == '-') {
      negate = s[i] == '-';
      ++i;
    }
    while (true) {
      BivariatePoly term = read_term();
      result += negate ? -term : term;
      skip_ws();
      if (i >= s.size()) break;
      if (s[i] == '+' || s[i] == '-') {
        negate = s[i] == '-';
        ++i;
      } else {
        fail(std::string("expected '+' or '-', got '") + s[i] + "'", i);
      }
    }
    return result;
  }
};

}  // namespace

BivariatePoly BivariatePoly::parse(const std::string& text, std::size_t base_offset) {
  PolyReader reader(text, base_offset);
  return reader.read_polynomial();
}

SymbolicHessian symbolic_hessian(const BivariatePoly& f) {
  const BivariatePoly fx = f.partial_x();
  const BivariatePoly fy = f.partial_y();
  return {fx.partial_x(), fx.partial_y(), fy.partial_y()};
}

BivariatePoly trace_hessian(const BivariatePoly& f) {
  const auto h = symbolic_hessian(f);
  return h.fxx + h.fyy;
}

BivariatePoly det_hessian(const BivariatePoly& f) {
  const auto h = symbolic_hessian(f);
  return h.fxx * h.fyy - h.fxy * h.fxy;
}

BivariatePoly convexity_det(const BivariatePoly& f) {
  const BivariatePoly fx = f.partial_x();
  const BivariatePoly fy = f.partial_y();
  const auto h = symbolic_hessian(f);
  return Rational(2) * (fx * fy * h.fxy) - fx * fx * h.fyy - fy * fy * h.fxx;
}

BivariatePoly top_homogeneous(const BivariatePoly& f) {
  BivariatePoly r;
  const int d = f.degree();
  for (const auto& [m, c] : f.terms())
    if (m.degree() == d) r.add_term(m, c);
  return r;
}

std::optional<Rational> radial_top_coefficient(const BivariatePoly& f) {
  if (f.is_zero()) return std::nullopt;
  const int d = f.degree();
  if (d % 2 != 0) return std::nullopt;
  const BivariatePoly top = top_homogeneous(f);
  const Rational c = top.coefficient(d, 0);
  if (c == 0) return std::nullopt;
  const BivariatePoly s = BivariatePoly::monomial(1, 2, 0) + BivariatePoly::monomial(1, 0, 2);
  if (top == c * s.pow(d / 2)) return c;
  return std::nullopt;
}

Rational degree_coefficient_mass(const BivariatePoly& f, int d) {
  Rational acc(0);
  for (const auto& [m, c] : f.terms())
    if (m.degree() == d) acc += rational_abs(c);
  return acc;
}

std::optional<Rational> positivity_radius(const BivariatePoly& f) {
  const auto leading = radial_top_coefficient(f);
  if (!leading || *leading <= 0) return std::nullopt;
  Rational max_ratio(0);
  for (int d = 0; d < f.degree(); ++d) {
    const Rational mass = degree_coefficient_mass(f, d);
    if (mass == 0) continue;
    max_ratio = std::max(max_ratio, Rational(mass / *leading));
  }
  return Rational(1) + max_ratio;
}

std::optional<BivariatePoly> to_radial_basis(const BivariatePoly& f) {
  // x^2 = (s+t)/2, y^2 = (s-t)/2.
  const BivariatePoly sp = Rational(1, 2) * (BivariatePoly::x() + BivariatePoly::y());
  const BivariatePoly sm = Rational(1, 2) * (BivariatePoly::x() - BivariatePoly::y());
  BivariatePoly r;
  for (const auto& [m, c] : f.terms()) {
    if (m.ix % 2 != 0 || m.iy % 2 != 0) return std::nullopt;
    r += c * (sp.pow(m.ix / 2) * sm.pow(m.iy / 2));
  }
  return r;
}

BivariatePoly from_radial_basis(const BivariatePoly& st) {
  const BivariatePoly s = BivariatePoly::monomial(1, 2, 0) + BivariatePoly::monomial(1, 0, 2);
  const BivariatePoly t = BivariatePoly::monomial(1, 2, 0) - BivariatePoly::monomial(1, 0, 2);
  BivariatePoly r;
  for (const auto& [m, c] : st.terms()) r += c * (s.pow(m.ix) * t.pow(m.iy));
  return r;
}

std::optional<BivariatePoly> eliminate_t_squared(const BivariatePoly& st,
                                                 const BivariatePoly& t_squared_in_s) {
  BivariatePoly r;
  for (const auto& [m, c] : st.terms()) {
    if (m.iy % 2 != 0) return std::nullopt;
    r += c * (BivariatePoly::monomial(1, m.ix, 0) * t_squared_in_s.pow(m.iy / 2));
  }
  return r;
}

namespace {

// Flat double-precision view of a polynomial for hot evaluation loops.
struct CompiledPoly {
  struct Term {
    int ix, iy;
    double c;
  };
  std::vector<Term> terms;
  int max_ix = 0, max_iy = 0;

  static CompiledPoly from(const BivariatePoly& p) {
    CompiledPoly cp;
    for (const auto& [m, c] : p.terms()) {
      cp.terms.push_back({m.ix, m.iy, to_double(c)});
      cp.max_ix = std::max(cp.max_ix, m.ix);
      cp.max_iy = std::max(cp.max_iy, m.iy);
    }
    return cp;
  }

  double eval(double x, double y) const {
    double xs[64], ys[64];
    xs[0] = 1.0;
    for (int i = 1; i <= max_ix; ++i) xs[i] = xs[i - 1] * x;
    ys[0] = 1.0;
    for (int i = 1; i <= max_iy; ++i) ys[i] = ys[i - 1] * y;
    double acc = 0.0;
    for (const auto& t : terms) acc += t.c * xs[t.ix] * ys[t.iy];
    return acc;
  }
};

class Poly2Field final : public FieldImpl {
 public:
  Poly2Field(const BivariatePoly& f, std::string name) : name_(std::move(name)) {
    if (f.degree() >= 64) throw construction_error("polynomial degree too large for field view");
    const BivariatePoly fx = f.partial_x();
    const BivariatePoly fy = f.partial_y();
    f_ = CompiledPoly::from(f);
    fx_ = CompiledPoly::from(fx);
    fy_ = CompiledPoly::from(fy);
    fxx_ = CompiledPoly::from(fx.partial_x());
    fxy_ = CompiledPoly::from(fx.partial_y());
    fyy_ = CompiledPoly::from(fy.partial_y());
  }

  int dim() const override { return 2; }
  double value(const Point& p) const override { return f_.eval(p[0], p[1]); }
  Jet2 jet(const Point& p) const override {
    Jet2 j(2);
    const double x = p[0], y = p[1];
    j.value = f_.eval(x, y);
    j.gradient[0] = fx_.eval(x, y);
    j.gradient[1] = fy_.eval(x, y);
    j.hessian.at(0, 0) = fxx_.eval(x, y);
    j.hessian.at(0, 1) = fxy_.eval(x, y);
    j.hessian.at(1, 1) = fyy_.eval(x, y);
    return j;
  }
  std::string name() const override { return name_; }

 private:
  std::string name_;
  CompiledPoly f_, fx_, fy_, fxx_, fxy_, fyy_;
};

}  // namespace

ScalarField make_field(const BivariatePoly& f, std::string name) {
  return ScalarField(std::make_shared<Poly2Field>(f, std::move(name)));
}

}  // namespace hessplus
