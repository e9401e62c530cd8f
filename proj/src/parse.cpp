#include "hessplus/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <vector>

namespace hessplus {

namespace {

// A slice of the original input; `offset` makes error positions absolute.
struct Piece {
  std::string text;
  std::size_t offset = 0;
};

Piece trim(const Piece& p) {
  std::size_t b = 0, e = p.text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(p.text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(p.text[e - 1]))) --e;
  return {p.text.substr(b, e - b), p.offset + b};
}

// Split at commas outside parentheses.
std::vector<Piece> split_top_level(const Piece& p) {
  std::vector<Piece> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < p.text.size(); ++i) {
    const char c = p.text[i];
    if (c == '(') ++depth;
    if (c == ')') {
      if (depth == 0) throw parse_error("unmatched ')'", p.offset + i);
      --depth;
    }
    if (c == ',' && depth == 0) {
      parts.push_back({p.text.substr(start, i - start), p.offset + start});
      start = i + 1;
    }
  }
  if (depth != 0) throw parse_error("unmatched '('", p.offset + p.text.size());
  parts.push_back({p.text.substr(start), p.offset + start});
  return parts;
}

// "name(" prefix with the ')' as the last character, or nothing.
bool match_call(const Piece& p, const std::string& name, Piece* inside) {
  if (p.text.size() < name.size() + 2) return false;
  if (p.text.compare(0, name.size(), name) != 0) return false;
  std::size_t i = name.size();
  while (i < p.text.size() && std::isspace(static_cast<unsigned char>(p.text[i]))) ++i;
  if (i >= p.text.size() || p.text[i] != '(') return false;
  if (p.text.back() != ')') throw parse_error("expected ')'", p.offset + p.text.size());
  *inside = {p.text.substr(i + 1, p.text.size() - i - 2), p.offset + i + 1};
  return true;
}

Piece strip_key(const Piece& p, const std::string& key, bool required) {
  const Piece t = trim(p);
  const std::size_t eq = t.text.find('=');
  if (eq == std::string::npos) {
    if (required) throw parse_error("expected '" + key + "='", t.offset);
    return t;
  }
  Piece name = trim({t.text.substr(0, eq), t.offset});
  if (name.text != key)
    throw parse_error("expected '" + key + "='", name.offset);
  return trim({t.text.substr(eq + 1), t.offset + eq + 1});
}

Rational parse_alpha(const Piece& arg) {
  const Piece v = strip_key(arg, "alpha", false);
  return parse_rational(v.text, v.offset);
}

// Univariate profile in z, parsed by renaming z -> x and reusing the
// bivariate reader (same offsets, same character count).
std::vector<Rational> parse_zpoly(const Piece& p) {
  std::string renamed = p.text;
  for (char& c : renamed) {
    if (c == 'y') throw parse_error("profile must use the variable z only",
                                    p.offset + (&c - renamed.data()));
    if (c == 'z') c = 'x';
  }
  const BivariatePoly q = BivariatePoly::parse(renamed, p.offset);
  std::vector<Rational> coeffs(static_cast<std::size_t>(std::max(q.degree(), 0)) + 1, Rational(0));
  for (const auto& [m, c] : q.terms()) coeffs[m.ix] = c;
  return coeffs;
}

std::string join_outer_spec(const std::vector<Piece>& parts, std::size_t count,
                            std::size_t* offset) {
  std::string spec;
  for (std::size_t i = 0; i < count; ++i) {
    if (i) spec += ",";
    spec += parts[i].text;
  }
  *offset = parts.front().offset;
  return spec;
}

struct OuterSpec {
  OuterMap map = OuterMap::identity();
  std::string echo;
  // Exact coefficients when the kind composes polynomials exactly.
  bool exact_poly = false;
  std::vector<Rational> coeffs;  // ascending; affine stored as {shift, scale}
};

int parse_int(const Piece& p) {
  const Piece t = trim(p);
  if (t.text.empty()) throw parse_error("expected integer", t.offset);
  std::size_t i = 0;
  if (t.text[i] == '+' || t.text[i] == '-') ++i;
  if (i == t.text.size()) throw parse_error("expected integer", t.offset + i);
  for (; i < t.text.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(t.text[i])))
      throw parse_error("expected integer", t.offset + i);
  return std::stoi(t.text);
}

OuterSpec parse_outer(const Piece& raw) {
  const Piece p = trim(raw);
  OuterSpec out;
  if (p.text == "exp") {
    out.map = OuterMap::exponential();
    out.echo = "exp";
    return out;
  }
  const std::size_t colon = p.text.find(':');
  const std::string kind = colon == std::string::npos ? p.text : p.text.substr(0, colon);
  if (colon == std::string::npos)
    throw parse_error("expected outer map: exp, pow:m, affine:scale,shift or poly:c0,c1,...",
                      p.offset);
  const Piece rest = {p.text.substr(colon + 1), p.offset + colon + 1};
  if (kind == "pow") {
    const int m = parse_int(rest);
    out.map = OuterMap::power(m);
    out.echo = "pow:" + std::to_string(m);
    return out;
  }
  if (kind == "affine") {
    const auto parts = split_top_level(rest);
    if (parts.size() != 2)
      throw parse_error("affine takes two arguments: scale,shift", rest.offset);
    const Piece a = trim(parts[0]), b = trim(parts[1]);
    const Rational scale = parse_rational(a.text, a.offset);
    const Rational shift = parse_rational(b.text, b.offset);
    out.map = OuterMap::affine(to_double(scale), to_double(shift));
    out.echo = "affine:" + rational_to_string(scale) + "," + rational_to_string(shift);
    out.exact_poly = true;
    out.coeffs = {shift, scale};
    return out;
  }
  if (kind == "poly") {
    const auto parts = split_top_level(rest);
    out.echo = "poly:";
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const Piece c = trim(parts[i]);
      out.coeffs.push_back(parse_rational(c.text, c.offset));
      if (i) out.echo += ",";
      out.echo += rational_to_string(out.coeffs.back());
    }
    std::vector<double> dc;
    for (const auto& c : out.coeffs) dc.push_back(to_double(c));
    out.map = OuterMap::polynomial(std::move(dc));
    out.exact_poly = true;
    return out;
  }
  throw parse_error("unknown outer map '" + kind + "'", p.offset);
}

BivariatePoly compose_exact(const std::vector<Rational>& coeffs, const BivariatePoly& inner) {
  BivariatePoly acc;  // Horner in the inner polynomial
  for (std::size_t k = coeffs.size(); k-- > 0;)
    acc = acc * inner + BivariatePoly::constant(coeffs[k]);
  return acc;
}

ParsedField from_family(FamilySpec spec) {
  ParsedField out;
  out.field = family_field(spec);
  out.poly = family_polynomial(spec);
  out.echo = spec.text();
  out.axis_parameter = spec.max_axis_parameter();
  out.family = std::move(spec);
  return out;
}

ParsedField parse_expr(const Piece& raw) {
  const Piece p = trim(raw);
  if (p.text.empty()) throw parse_error("empty field expression", p.offset);

  Piece inside;
  if (match_call(p, "cassini", &inside))
    return from_family(FamilySpec::cassini(parse_alpha(inside)));
  if (match_call(p, "anti", &inside))
    return from_family(FamilySpec::anti(parse_alpha(inside)));

  if (match_call(p, "radial_plus", &inside)) {
    const auto parts = split_top_level(inside);
    if (parts.size() != 2)
      throw parse_error("radial_plus takes two arguments: P=..., p=...", inside.offset);
    const Piece prof = strip_key(parts[0], "P", true);
    const Piece rem = strip_key(parts[1], "p", true);
    return from_family(FamilySpec::radial_plus(parse_zpoly(prof),
                                               BivariatePoly::parse(rem.text, rem.offset)));
  }

  if (match_call(p, "prod", &inside)) {
    const auto parts = split_top_level(inside);
    std::vector<ParsedField> children;
    for (const auto& part : parts) children.push_back(parse_expr(part));

    ParsedField out;
    out.field = children.front().field;
    out.poly = children.front().poly;
    out.echo = "prod(";
    bool all_family = true, all_poly = children.front().poly.has_value();
    out.axis_parameter = children.front().axis_parameter;
    for (std::size_t i = 0; i < children.size(); ++i) {
      if (i) {
        out.field = product_field(out.field, children[i].field);
        if (all_poly && children[i].poly)
          out.poly = *out.poly * *children[i].poly;
        out.axis_parameter = std::max(out.axis_parameter, children[i].axis_parameter);
        out.echo += ",";
      }
      if (!children[i].poly) all_poly = false;
      if (!children[i].family) all_family = false;
      out.echo += children[i].echo;
    }
    out.echo += ")";
    if (!all_poly) out.poly.reset();
    if (all_family && children.size() > 1) {
      std::vector<FamilySpec> specs;
      for (auto& c : children) specs.push_back(std::move(*c.family));
      out.family = FamilySpec::product(std::move(specs));
    } else if (all_family && children.size() == 1) {
      out.family = std::move(children.front().family);
    }
    return out;
  }

  if (match_call(p, "compose", &inside)) {
    const auto parts = split_top_level(inside);
    if (parts.size() < 2)
      throw parse_error("compose takes an outer map and an inner expression", inside.offset);
    std::size_t spec_offset = 0;
    const std::string spec = join_outer_spec(parts, parts.size() - 1, &spec_offset);
    const OuterSpec outer = parse_outer({spec, spec_offset});
    ParsedField inner = parse_expr(parts.back());

    ParsedField out;
    out.echo = "compose(" + outer.echo + ", " + inner.echo + ")";
    out.axis_parameter = inner.axis_parameter;
    if (outer.exact_poly && inner.poly) {
      out.poly = compose_exact(outer.coeffs, *inner.poly);
      out.field = make_field(*out.poly, out.echo);
    } else {
      out.field = compose_field(outer.map, inner.field);
    }
    return out;
  }

  // No constructor syntax: a plain polynomial.  A '(' here is a syntax
  // error the polynomial reader reports with its own position.
  ParsedField out;
  out.poly = BivariatePoly::parse(p.text, p.offset);
  out.echo = out.poly->to_string();
  out.field = make_field(*out.poly, out.echo);
  return out;
}

}  // namespace

ParsedField parse_field_spec(const std::string& text) {
  ParsedField out = parse_expr({text, 0});
  if (!out.field.valid()) throw parse_error("field expression produced no field", 0);
  return out;
}

std::string caret_diagnostic(const std::string& text, const parse_error& err) {
  std::ostringstream os;
  os << "error: " << err.what() << "\n  " << text << "\n  ";
  const std::size_t col = std::min(err.position, text.size());
  for (std::size_t i = 0; i < col; ++i) os << ' ';
  os << '^';
  return os.str();
}

}  // namespace hessplus
