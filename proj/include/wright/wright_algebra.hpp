#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wright/laurent_poly.hpp"
#include "wright/linear_map.hpp"
#include "wright/rational.hpp"
#include "wright/symbolic_poly.hpp"

namespace wright {

/// Coordinate ring C[t0, ..., tm] of an affine A^1-bundle over P^1, given by
/// m >= 2 and alphas (a1, ..., a_{m-1}) not all zero:
///
///   t0 = y,  tk = x^k*y + a1*x^(k-1) + ... + a_{k-1}*x   (1 <= k <= m).
///
/// On the second chart x' = 1/x and y' = tm.
class WrightAlgebra {
 public:
  /// Throws InvalidAlgebra when m < 2, alphas.size() != m-1, or all alphas
  /// vanish.
  WrightAlgebra(int m, std::vector<Rational> alphas);

  int m() const noexcept { return m_; }
  const std::vector<Rational>& alphas() const noexcept { return alphas_; }
  std::size_t generator_count() const noexcept { return static_cast<std::size_t>(m_) + 1; }

  /// True for m = 3 with a1 = 0 (the family C[y, xy, x^2y, x^3y + a*x]).
  bool is_canonical_index3() const noexcept;

  friend bool operator==(const WrightAlgebra&, const WrightAlgebra&) = default;

 private:
  int m_;
  std::vector<Rational> alphas_;
};

/// C[y, xy, x^2y, x^3y + alpha*x] with alpha != 0, i.e. WrightAlgebra(3, (0, alpha)).
class CanonicalIndex3Algebra {
 public:
  /// Throws InvalidAlgebra for alpha == 0.
  explicit CanonicalIndex3Algebra(Rational alpha);

  const Rational& alpha() const noexcept { return alpha_; }
  WrightAlgebra as_wright() const { return WrightAlgebra(3, {Rational(0), alpha_}); }

 private:
  Rational alpha_;
};

/// [t0, ..., tm].
std::vector<LaurentPoly> generators(const WrightAlgebra& w);

/// The element x^m*y + a1*x^(m-1) + ... + a_{m-1}*x (= y').
LaurentPoly top_generator(const WrightAlgebra& w);

/// Rewrites p in the chart coordinates via x = 1/x',
/// y = x'^m*y' - a1*x' - ... - a_{m-1}*x'^(m-1). The result lives in the
/// (x', y') slots and may have negative x'-exponents.
LaurentPoly chart_transform(const WrightAlgebra& w, const LaurentPoly& p);

/// Inverse of chart_transform: x' = 1/x, y' = tm.
LaurentPoly chart_inverse(const WrightAlgebra& w, const LaurentPoly& chart_poly);

/// Membership in C[t0..tm] = C[x,y] ∩ C[x',y']: p is an ordinary
/// polynomial and its chart image has no negative x'-exponent.
bool is_member(const WrightAlgebra& w, const LaurentPoly& p);

/// Terms of the chart image with negative x'-exponent (empty for members).
LaurentPoly chart_obstruction(const WrightAlgebra& w, const LaurentPoly& p);

/// y-degree of p plus the total degree of p.
unsigned default_expression_bound(const LaurentPoly& p);

/// Writes p as a polynomial in T0..Tm of total degree <= bound, solving one
/// exact linear system. Among all representations, the one supported on the
/// earliest independent T-monomials in graded-lex listing order is
/// returned. nullopt means "not within this bound", which does not by
/// itself prove non-membership.
std::optional<GeneratorExpression> express_in_generators(const WrightAlgebra& w,
                                                         const LaurentPoly& p,
                                                         unsigned t_degree_bound);

/// f = (x^3y + alpha*x)^m * g(x^2y).
struct NegativeDegreeFactorization {
  unsigned m = 0;
  /// Univariate polynomial in z, stored in the first variable slot.
  LaurentPoly g;
};

/// Factors a weighted-homogeneous f of degree -m < 0 (weights (-1, 2)).
/// Throws NotHomogeneousNegative when f is zero, not homogeneous, or of
/// degree >= 0; throws NotInAlgebra when (x^3y + alpha*x)^m does not divide f
/// or the quotient is not a polynomial in x^2y.
NegativeDegreeFactorization negative_degree_factor(const CanonicalIndex3Algebra& c,
                                                   const LaurentPoly& f);

/// Inverse of negative_degree_factor.
LaurentPoly expand_negative_degree(const CanonicalIndex3Algebra& c, unsigned m,
                                   const LaurentPoly& g);

struct DegreeCheck {
  /// Total degree n of the tested elements.
  unsigned degree = 0;
  /// Some element of degree exactly n in the span has an x^n term.
  bool has_pure_x = false;
  /// Some element of degree exactly n in the span has a y^n term.
  bool has_pure_y = false;
  bool regular_element_exists() const noexcept { return has_pure_x && has_pure_y; }
};

struct LemmaLevel {
  /// Products of generators of total degree <= bound span this level.
  unsigned bound = 0;
  std::size_t products = 0;
  std::size_t dimension = 0;
  std::vector<DegreeCheck> checks;  // degrees 1..bound
  bool regular_element_found() const noexcept;
};

struct LemmaReport {
  Rational alpha;
  unsigned max_degree = 0;
  std::vector<LemmaLevel> levels;  // bounds 1..max_degree
  /// An element regular in both variables, when one was found.
  std::optional<LaurentPoly> witness;
  bool none_found() const noexcept { return !witness.has_value(); }
};

/// For every bound n <= max_degree, takes the span of all products of the
/// generators of total degree <= n and decides by exact linear algebra
/// whether it contains an element of some degree 1 <= d <= n that is
/// regular in both x and y. Throws InvalidArgument for max_degree < 1.
LemmaReport verify_no_regular_elements(const CanonicalIndex3Algebra& c, unsigned max_degree);

/// First integer LinearMap (identity first, then by increasing max |entry|
/// and lexicographically on (a, b, c, d)) after which p is regular in both
/// variables. Throws ZeroOrConstantInput for constant p.
LinearMap regularizing_transform(const LaurentPoly& p);

}  // namespace wright
