#pragma once

#include <cstdint>
#include <map>

#include "wright/laurent_poly.hpp"

namespace wright {

/// Integer weights (deg x, deg y). Not both zero.
class WeightVector {
 public:
  /// Throws InvalidArgument for (0, 0).
  WeightVector(std::int64_t wx, std::int64_t wy);

  std::int64_t wx() const noexcept { return wx_; }
  std::int64_t wy() const noexcept { return wy_; }
  std::int64_t degree_of(Exponent e) const noexcept { return wx_ * e.x + wy_ * e.y; }

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::int64_t wx_;
  std::int64_t wy_;
};

/// The grading deg x = -1, deg y = 2 under which the index-3 algebra is
/// graded.
inline WeightVector dg_weights() { return WeightVector(-1, 2); }

/// Splits p into weighted-homogeneous pieces keyed by degree. Zero pieces
/// are not stored; the pieces sum to p.
std::map<std::int64_t, LaurentPoly> weighted_components(const LaurentPoly& p,
                                                        const WeightVector& w);

/// Total degree with a distinct -infinity for the zero polynomial, so that
/// deg(p*q) = deg(p) + deg(q) holds without special cases.
class Degree {
 public:
  static Degree neg_infinity() { return Degree(); }
  static Degree of(std::int64_t d) { return Degree(d); }

  bool is_neg_infinity() const noexcept { return neg_inf_; }
  /// Throws std::logic_error on -infinity.
  std::int64_t value() const;

  friend Degree operator+(Degree a, Degree b) {
    if (a.neg_inf_ || b.neg_inf_) return neg_infinity();
    return Degree(a.d_ + b.d_);
  }
  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.neg_inf_ || b.neg_inf_) return b.neg_inf_ <=> a.neg_inf_;
    return a.d_ <=> b.d_;
  }

 private:
  Degree() = default;
  explicit Degree(std::int64_t d) : neg_inf_(false), d_(d) {}
  bool neg_inf_ = true;
  std::int64_t d_ = 0;
};

/// max(e_x + e_y) over the terms of p.
Degree total_degree(const LaurentPoly& p);

/// True iff p contains var^n where n is the total degree of p.
/// Throws ZeroPolynomial for p == 0.
bool is_regular_in(const LaurentPoly& p, Var var);

/// Regular in x and in y simultaneously, with total degree at least 1.
/// Constants are never counted as regular in both variables.
bool is_regular_in_both(const LaurentPoly& p);

}  // namespace wright
