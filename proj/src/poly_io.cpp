#include "wright/poly_io.hpp"

#include <array>

#include "term_parser.hpp"
#include "wright/errors.hpp"

namespace wright {

namespace {

// Atom codes: x, y, v, w, z.
constexpr std::array<char, 5> kAtoms{'x', 'y', 'v', 'w', 'z'};
constexpr std::array<int, 5> kFamily{0, 0, 1, 1, 2};
constexpr std::array<int, 5> kSlot{0, 1, 0, 1, 0};

}  // namespace

LaurentPoly parse_poly(std::string_view text) {
  const detail::AtomReader reader = [](std::string_view s,
                                       std::size_t& pos) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < kAtoms.size(); ++i) {
      if (s[pos] == kAtoms[i]) {
        ++pos;
        return i;
      }
    }
    return std::nullopt;
  };
  const auto terms = detail::parse_terms(text, reader, [](std::size_t a) { return a == 0; });

  int family = -1;
  LaurentPoly out;
  for (const auto& t : terms) {
    Exponent e;
    for (const auto& atom : t.atoms) {
      if (family >= 0 && kFamily[atom.slot] != family) {
        throw ParseError("mixed variable families in '" + std::string(text) + "'");
      }
      family = kFamily[atom.slot];
      (kSlot[atom.slot] == 0 ? e.x : e.y) += atom.exponent;
    }
    out.add_term(e, t.coeff);
  }
  return out;
}

std::string format_poly(const LaurentPoly& p, const VariableNames& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string mono;
    auto append = [&mono](const std::string& name, std::int64_t k) {
      if (k == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (k != 1) mono += "^" + std::to_string(k);
    };
    append(names.first, e.x);
    append(names.second, e.y);

    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

}  // namespace wright
