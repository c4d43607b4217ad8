#include "wright/linear_map.hpp"

#include "wright/errors.hpp"

namespace wright {

LinearMap::LinearMap(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (determinant() == 0) throw SingularMap("linear map has zero determinant");
}

LinearMap LinearMap::inverse() const {
  const Rational det = determinant();
  return LinearMap(d_ / det, -b_ / det, -c_ / det, a_ / det);
}

LaurentPoly linear_substitute(const LaurentPoly& p, const LinearMap& map) {
  if (!p.is_polynomial()) {
    throw NonInvertibleImage("linear substitution needs an ordinary polynomial");
  }
  LaurentPoly x_image = LaurentPoly::monomial(map.a(), 1, 0);
  x_image.add_term({0, 1}, map.b());
  LaurentPoly y_image = LaurentPoly::monomial(map.c(), 1, 0);
  y_image.add_term({0, 1}, map.d());
  return substitute(p, x_image, y_image);
}

}  // namespace wright
