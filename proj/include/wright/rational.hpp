#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace wright {

/// Exact rational scalar. GMP keeps every arithmetic result in lowest terms
/// with a positive denominator.
using Rational = mpq_class;

/// Parses "int" or "int/posint" (optional leading sign). Throws ParseError.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

/// Max of |numerator| and denominator.
mpz_class height(const Rational& r);

}  // namespace wright
