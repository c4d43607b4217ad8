#pragma once

// Shared recursive-descent reader for the sum-of-terms text grammar used by
// both LaurentPoly and SymbolicPoly.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wright/rational.hpp"

namespace wright::detail {

struct ParsedAtom {
  std::size_t slot;
  std::int64_t exponent;
};

struct ParsedTerm {
  Rational coeff;
  std::vector<ParsedAtom> atoms;
};

/// Tries to read an atom name at text[pos...]; on success advances pos and
/// returns the slot index.
using AtomReader = std::function<std::optional<std::size_t>(std::string_view, std::size_t&)>;

/// Parses a whitespace-insensitive sum of terms. Exponents may be negative
/// only when allow_negative(slot) says so. Throws ParseError.
std::vector<ParsedTerm> parse_terms(std::string_view text, const AtomReader& read_atom,
                                    const std::function<bool(std::size_t)>& allow_negative);

}  // namespace wright::detail
