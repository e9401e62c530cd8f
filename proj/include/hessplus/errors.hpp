#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hessplus {

// Input lies outside the mathematical domain of an operation
// (e.g. pow applied to a nonpositive argument).
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// A documented hypothesis of an operation does not hold at the query
// (e.g. a lower bound formula asked for at a point where its sign
// assumptions fail).
struct precondition_error : std::runtime_error {
  explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

// An object was built with parameters violating its structural constraints
// (e.g. a radial profile with a negative coefficient).
struct construction_error : std::runtime_error {
  explicit construction_error(const std::string& what) : std::runtime_error(what) {}
};

// Text input could not be parsed; `position` is a 0-based byte offset into
// the input at which the problem was detected.
struct parse_error : std::runtime_error {
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what), position(position) {}
  std::size_t position;
};

}  // namespace hessplus
