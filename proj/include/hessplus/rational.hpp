#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "hessplus/errors.hpp"

namespace hessplus {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return static_cast<double>(r); }

inline Rational rational_abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

// "p" or "p/q", q positive after normalisation.
inline std::string rational_to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

// Accepts optionally signed "p" or "p/q".  Used by the CLI field grammar;
// reports the offset of the offending character.
Rational parse_rational(const std::string& text, std::size_t base_offset = 0);

}  // namespace hessplus
