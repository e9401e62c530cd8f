#include "hessplus/family.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hessplus/errors.hpp"

namespace hessplus {

namespace {

BivariatePoly s_poly() {
  return BivariatePoly::monomial(1, 2, 0) + BivariatePoly::monomial(1, 0, 2);
}

BivariatePoly t_poly() {
  return BivariatePoly::monomial(1, 2, 0) - BivariatePoly::monomial(1, 0, 2);
}

BivariatePoly profile_of_s(const std::vector<Rational>& profile) {
  const BivariatePoly s = s_poly();
  BivariatePoly r;
  for (std::size_t k = 0; k < profile.size(); ++k)
    if (profile[k] != 0) r += profile[k] * s.pow(static_cast<int>(k));
  return r;
}

void check_radial_plus(const std::vector<Rational>& profile, const BivariatePoly& remainder) {
  if (profile.size() < 2 || profile.back() == 0)
    throw construction_error("radial profile must have degree >= 1");
  if (profile.back() <= 0)
    throw construction_error("radial profile needs a positive leading coefficient");
  for (const Rational& c : profile)
    if (c < 0) throw construction_error("radial profile coefficients must be nonnegative");
  const int n = static_cast<int>(profile.size()) - 1;
  const int dp = remainder.degree();
  if (!remainder.is_zero() && dp < 2)
    throw construction_error("remainder must have degree >= 2 (or be zero)");
  if (dp >= 2 * n)
    throw construction_error("remainder degree must be below twice the profile degree");
}

}  // namespace

BivariatePoly radial_plus_polynomial(const RadialPlusForm& form) {
  return profile_of_s(form.profile) + form.remainder;
}

std::optional<RadialPlusForm> radial_decompose(const BivariatePoly& f) {
  BivariatePoly rest = f;
  std::vector<Rational> profile;
  int top_power = -1;
  while (!rest.is_zero()) {
    const auto c = radial_top_coefficient(rest);
    if (!c || *c <= 0) break;
    const int k = rest.degree() / 2;
    if (top_power < 0) {
      top_power = k;
      profile.assign(top_power + 1, Rational(0));
    }
    profile[k] = *c;
    rest -= *c * s_poly().pow(k);
  }
  if (top_power < 1) return std::nullopt;
  if (rest.degree() >= 2 * top_power) return std::nullopt;
  return RadialPlusForm{std::move(profile), std::move(rest)};
}

FamilySpec FamilySpec::cassini(const Rational& alpha) {
  if (alpha <= 0) throw construction_error("cassini needs alpha > 0");
  FamilySpec s;
  s.variant = Variant::cassini;
  s.alpha = alpha;
  return s;
}

FamilySpec FamilySpec::anti(const Rational& alpha) {
  if (alpha <= 0) throw construction_error("anti needs alpha > 0");
  FamilySpec s;
  s.variant = Variant::anti;
  s.alpha = alpha;
  return s;
}

FamilySpec FamilySpec::radial_plus(std::vector<Rational> profile, BivariatePoly remainder) {
  check_radial_plus(profile, remainder);
  FamilySpec s;
  s.variant = Variant::radial_plus;
  s.profile = std::move(profile);
  s.remainder = std::move(remainder);
  return s;
}

FamilySpec FamilySpec::product(std::vector<FamilySpec> factors) {
  if (factors.empty()) throw construction_error("product needs at least one factor");
  FamilySpec s;
  s.variant = Variant::product;
  s.factors = std::move(factors);
  return s;
}

std::string FamilySpec::text() const {
  std::ostringstream os;
  switch (variant) {
    case Variant::cassini:
      os << "cassini(" << rational_to_string(alpha) << ")";
      break;
    case Variant::anti:
      os << "anti(" << rational_to_string(alpha) << ")";
      break;
    case Variant::radial_plus: {
      // Profile rendered as a z-polynomial so the text re-parses.
      os << "radial_plus(P=";
      bool first = true;
      for (std::size_t k = profile.size(); k-- > 0;) {
        if (profile[k] == 0) continue;
        if (!first) os << " + ";
        os << rational_to_string(profile[k]);
        if (k == 1)
          os << "*z";
        else if (k > 1)
          os << "*z^" << k;
        first = false;
      }
      if (first) os << "0";
      os << ", p=" << remainder.to_string() << ")";
      break;
    }
    case Variant::product: {
      os << "prod(";
      for (std::size_t k = 0; k < factors.size(); ++k) {
        if (k) os << ",";
        os << factors[k].text();
      }
      os << ")";
      break;
    }
  }
  return os.str();
}

double FamilySpec::max_axis_parameter() const {
  switch (variant) {
    case Variant::cassini:
    case Variant::anti:
      return std::sqrt(to_double(alpha));
    case Variant::radial_plus:
      return 1.0;
    case Variant::product: {
      double a = 1.0;
      for (const auto& f : factors) a = std::max(a, f.max_axis_parameter());
      return a;
    }
  }
  return 1.0;
}

BivariatePoly family_polynomial(const FamilySpec& spec) {
  switch (spec.variant) {
    case FamilySpec::Variant::cassini:
      return s_poly().pow(2) - Rational(2) * spec.alpha * t_poly();
    case FamilySpec::Variant::anti:
      return s_poly().pow(2) + Rational(2) * spec.alpha * t_poly();
    case FamilySpec::Variant::radial_plus:
      return radial_plus_polynomial(RadialPlusForm{spec.profile, spec.remainder});
    case FamilySpec::Variant::product: {
      BivariatePoly r = BivariatePoly::constant(1);
      for (const auto& f : spec.factors) r = r * family_polynomial(f);
      return r;
    }
  }
  return {};
}

ScalarField family_field(const FamilySpec& spec) {
  return make_field(family_polynomial(spec), spec.text());
}

RadialPlusForm family_radial_form(const FamilySpec& spec) {
  switch (spec.variant) {
    case FamilySpec::Variant::cassini:
      return {{0, 0, 1}, Rational(-2) * spec.alpha * t_poly()};
    case FamilySpec::Variant::anti:
      return {{0, 0, 1}, Rational(2) * spec.alpha * t_poly()};
    case FamilySpec::Variant::radial_plus:
      return {spec.profile, spec.remainder};
    case FamilySpec::Variant::product: {
      RadialPlusForm acc = family_radial_form(spec.factors.front());
      for (std::size_t k = 1; k < spec.factors.size(); ++k) {
        const RadialPlusForm next = family_radial_form(spec.factors[k]);
        std::vector<Rational> prof(acc.profile.size() + next.profile.size() - 1, Rational(0));
        for (std::size_t i = 0; i < acc.profile.size(); ++i)
          for (std::size_t j = 0; j < next.profile.size(); ++j)
            prof[i + j] += acc.profile[i] * next.profile[j];
        BivariatePoly rem = profile_of_s(acc.profile) * next.remainder +
                            profile_of_s(next.profile) * acc.remainder +
                            acc.remainder * next.remainder;
        acc = RadialPlusForm{std::move(prof), std::move(rem)};
      }
      return acc;
    }
  }
  return {};
}

Box default_family_box(double axis_parameter) {
  return square_box(2.0 + 2.0 * axis_parameter);
}

}  // namespace hessplus
