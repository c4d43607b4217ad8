#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "wright/laurent_poly.hpp"

namespace wright {

/// Order on monomials used for pivots: total degree first, then the
/// x-exponent, then the y-exponent. Leading term = largest.
struct DegreeOrderGreater {
  bool operator()(const Exponent& a, const Exponent& b) const noexcept {
    const auto da = a.x + a.y;
    const auto db = b.x + b.y;
    if (da != db) return da > db;
    if (a.x != b.x) return a.x > b.x;
    return a.y > b.y;
  }
};

/// Incrementally built echelon basis of the span of a sequence of
/// polynomials, viewed as coefficient vectors over the rationals. Basis
/// vectors have pairwise distinct leading monomials, so the elements of the
/// span whose terms all have total degree <= d are exactly the combinations
/// of the basis vectors whose leading degree is <= d.
class ExactSpan {
 public:
  using Vector = std::map<Exponent, Rational, DegreeOrderGreater>;
  using Combination = std::map<std::size_t, Rational>;

  struct BasisVector {
    Vector vec;
    /// The basis vector as a combination of the originally added vectors.
    Combination combo;
    Exponent lead() const { return vec.begin()->first; }
  };

  /// Appends vector number added(). Returns true when it is independent of
  /// everything added before.
  bool add(const LaurentPoly& v);

  std::size_t added() const noexcept { return added_; }
  std::size_t dimension() const noexcept { return basis_.size(); }
  const std::vector<BasisVector>& basis() const noexcept { return basis_; }

  /// Writes target as a combination of the added vectors. The combination
  /// only uses vectors that were independent when added, which makes it
  /// unique. nullopt when target is outside the span.
  std::optional<Combination> express(const LaurentPoly& target) const;

  static LaurentPoly to_poly(const Vector& v);

 private:
  // Reduces v in place; returns false when it reaches zero.
  bool reduce(Vector& v, Combination& combo) const;

  std::vector<BasisVector> basis_;
  std::map<Exponent, std::size_t> pivot_of_;
  std::size_t added_ = 0;
};

}  // namespace wright
