#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wright/laurent_poly.hpp"
#include "wright/rational.hpp"

namespace wright {

using SymbolExponents = std::vector<std::uint32_t>;

/// Polynomial with rational coefficients in a fixed number of abstract
/// symbols (T0..Tm for generator expressions, P and Q for integrality
/// certificates).
class SymbolicPoly {
 public:
  using TermMap = std::map<SymbolExponents, Rational>;

  explicit SymbolicPoly(std::size_t arity = 0) : arity_(arity) {}

  static SymbolicPoly monomial(std::size_t arity, SymbolExponents exps, const Rational& c);

  std::size_t arity() const noexcept { return arity_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Max total degree over terms; -1 for the zero polynomial.
  int total_degree() const noexcept;
  Rational coefficient(const SymbolExponents& e) const;

  void add_term(const SymbolExponents& e, const Rational& c);

  friend bool operator==(const SymbolicPoly&, const SymbolicPoly&) = default;

 private:
  std::size_t arity_;
  TermMap terms_;
};

using GeneratorExpression = SymbolicPoly;

/// Total degree of an exponent tuple.
unsigned degree_of(const SymbolExponents& e);

/// The graded-lex listing used everywhere a deterministic order on symbol
/// monomials matters: total degree ascending, and within one degree the
/// lexicographically largest tuple first (T0^d, T0^(d-1)*T1, ..., Tm^d).
bool graded_lex_before(const SymbolExponents& a, const SymbolExponents& b);

/// All monomials with min_degree <= degree <= max_degree, in graded-lex
/// listing order.
std::vector<SymbolExponents> graded_monomials(std::size_t arity, unsigned max_degree,
                                              unsigned min_degree = 0);

/// Values of each monomial at `values`, reusing lower-degree products.
std::vector<LaurentPoly> evaluate_monomials(std::span<const SymbolExponents> monomials,
                                            std::span<const LaurentPoly> values);

/// Substitutes values[i] for symbol i.
LaurentPoly evaluate(const SymbolicPoly& expr, std::span<const LaurentPoly> values);

/// {"T0", ..., "T<count-1>"}.
std::vector<std::string> t_symbol_names(std::size_t count);

/// Text form in graded-lex listing order, e.g. "T0^2 + 1/2*T1*T3".
std::string format_symbolic(const SymbolicPoly& expr, const std::vector<std::string>& names);

/// Parses the polynomial grammar with atoms drawn from `names`.
/// Throws ParseError.
SymbolicPoly parse_symbolic(std::string_view text, const std::vector<std::string>& names);

}  // namespace wright
