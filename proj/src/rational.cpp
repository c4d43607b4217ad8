#include "wright/rational.hpp"

#include <cctype>

#include "wright/errors.hpp"

namespace wright {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw ParseError("invalid rational: '" + std::string(text) + "'");
  }
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }

mpz_class height(const Rational& r) {
  mpz_class n = abs(r.get_num());
  return n > r.get_den() ? n : mpz_class(r.get_den());
}

}  // namespace wright
