#pragma once

#include "wright/laurent_poly.hpp"
#include "wright/rational.hpp"

namespace wright {

/// Invertible linear change of variables x -> a*v + b*w, y -> c*v + d*w.
/// The result of a substitution lives in the (v, w) slots.
class LinearMap {
 public:
  /// Throws SingularMap when a*d - b*c == 0.
  LinearMap(Rational a, Rational b, Rational c, Rational d);

  static LinearMap identity() { return LinearMap(1, 0, 0, 1); }

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  const Rational& c() const noexcept { return c_; }
  const Rational& d() const noexcept { return d_; }
  Rational determinant() const { return a_ * d_ - b_ * c_; }
  LinearMap inverse() const;

  friend bool operator==(const LinearMap&, const LinearMap&) = default;

 private:
  Rational a_, b_, c_, d_;
};

/// p(a*v + b*w, c*v + d*w). p must be an ordinary polynomial.
LaurentPoly linear_substitute(const LaurentPoly& p, const LinearMap& map);

}  // namespace wright
