#pragma once

// Polynomial input grammar:
//   list   := '[' int (',' int)* ']'            ascending coefficients
//   sparse := ['+'|'-'] term (('+'|'-') term)*
//   term   := digits | digits ['*'] mono | mono
//   mono   := 'x' ['^' digits]
// Whitespace is ignored between tokens; repeated exponents are summed.

#include <evenmono/poly.hpp>

#include <string>
#include <string_view>

namespace evenmono {

struct PolyExpr {
  std::string text;
  IntPoly poly;
};

/// Throws ParseError carrying the byte offset and the expected token set.
PolyExpr parse_poly(std::string_view text);

}  // namespace evenmono
