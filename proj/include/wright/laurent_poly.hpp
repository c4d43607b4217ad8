#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>

#include "wright/rational.hpp"

namespace wright {

/// Exponent pair of a bivariate monomial x^x * y^y. The x-exponent may be
/// negative (Laurent in x); the y-exponent never is.
struct Exponent {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

enum class Var { x, y };

/// Sparse bivariate polynomial over the rationals, Laurent in the first
/// variable. Terms are kept in ascending lexicographic order on (e_x, e_y)
/// and never carry a zero coefficient; the zero polynomial has no terms.
///
/// The two variable slots are positional. Display names (x/y, v/w, x'/y')
/// are chosen by the formatter.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  LaurentPoly() = default;
  LaurentPoly(const Rational& constant);  // NOLINT: implicit by design of ring literals
  LaurentPoly(long constant) : LaurentPoly(Rational(constant)) {}  // NOLINT
  LaurentPoly(int constant) : LaurentPoly(Rational(constant)) {}   // NOLINT

  /// c * x^ex * y^ey. Throws InvalidArgument when ey < 0.
  static LaurentPoly monomial(const Rational& c, std::int64_t ex, std::int64_t ey);
  static LaurentPoly x() { return monomial(1, 1, 0); }
  static LaurentPoly y() { return monomial(1, 0, 1); }

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }
  /// No negative x-exponents.
  bool is_polynomial() const noexcept;
  Rational coefficient(Exponent e) const;
  /// Smallest x-exponent; 0 for the zero polynomial.
  std::int64_t min_x_exponent() const noexcept;
  std::int64_t max_x_exponent() const noexcept;
  std::int64_t max_y_exponent() const noexcept;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  /// Adds c * x^e.x * y^e.y in place.
  void add_term(Exponent e, const Rational& c);

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly scaled(const Rational& c) const;

 private:
  TermMap terms_;
};

/// p^k by repeated squaring, k >= 0.
LaurentPoly pow(const LaurentPoly& p, unsigned k);

/// Formal partial derivative; x^e with e < 0 differentiates to e * x^(e-1).
LaurentPoly partial_derivative(const LaurentPoly& p, Var var);

/// p_x * q_y - p_y * q_x.
LaurentPoly jacobian_determinant(const LaurentPoly& p, const LaurentPoly& q);

/// Ring homomorphism x -> x_image, y -> y_image applied to p. Negative
/// powers of x require x_image to be a single term; otherwise throws
/// NonInvertibleImage.
LaurentPoly substitute(const LaurentPoly& p, const LaurentPoly& x_image,
                       const LaurentPoly& y_image);

/// Exact quotient f / g of ordinary polynomials, or nullopt when g does not
/// divide f. Throws ZeroPolynomial on g == 0.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g);

}  // namespace wright
