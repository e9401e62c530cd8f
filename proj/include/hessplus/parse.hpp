#pragma once

#include <optional>
#include <string>

#include "hessplus/bipoly.hpp"
#include "hessplus/errors.hpp"
#include "hessplus/family.hpp"
#include "hessplus/field.hpp"

namespace hessplus {

// One parsed field expression.  `poly` is present whenever the expression
// stays inside exact rational polynomials (raw polynomials, families,
// products of those, affine/poly outer compositions); `family` is present
// when the whole expression is family shorthand usable by the certifier.
struct ParsedField {
  ScalarField field;
  std::optional<BivariatePoly> poly;
  std::optional<FamilySpec> family;
  std::string echo;             // canonical rendering, re-parses to the same field
  double axis_parameter = 1.0;  // max a over family leaves
};

// Grammar:
//   expr   := "cassini" "(" ["alpha="] RATIONAL ")"
//           | "anti" "(" ["alpha="] RATIONAL ")"
//           | "radial_plus" "(" "P=" ZPOLY "," "p=" POLY ")"
//           | "prod" "(" expr { "," expr } ")"
//           | "compose" "(" OUTER "," expr ")"
//           | POLY
//   OUTER  := "exp" | "pow:" INT | "affine:" RATIONAL "," RATIONAL
//           | "poly:" RATIONAL { "," RATIONAL }
// POLY is the textual polynomial format; ZPOLY the same in the variable z.
ParsedField parse_field_spec(const std::string& text);

// "error: <message>" plus the input echoed with a caret column marker.
std::string caret_diagnostic(const std::string& text, const parse_error& err);

}  // namespace hessplus
