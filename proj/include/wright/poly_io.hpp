#pragma once

#include <string>
#include <string_view>

#include "wright/laurent_poly.hpp"

namespace wright {

/// Display names for the two variable slots.
struct VariableNames {
  std::string first = "x";
  std::string second = "y";
};

inline const VariableNames kXY{"x", "y"};
inline const VariableNames kVW{"v", "w"};
inline const VariableNames kZ{"z", "y"};

/// Parses the polynomial text grammar
///
///   poly  := ['+'|'-'] term (('+' | '-') term)*
///   term  := coeff? ('*'? atom)*
///   atom  := ('x' | 'y' | 'v' | 'w' | 'z') ('^' int)?
///   coeff := int ('/' posint)?
///
/// x, v and z occupy the first slot; y and w the second. Only x may carry a
/// negative exponent. Mixing x with v (or y with w, etc.) in one string is
/// rejected. Throws ParseError.
LaurentPoly parse_poly(std::string_view text);

/// Canonical text form, terms in ascending (e_x, e_y) order, e.g.
/// "1/2*x + x^3*y". The zero polynomial prints as "0".
std::string format_poly(const LaurentPoly& p, const VariableNames& names = kXY);

}  // namespace wright
