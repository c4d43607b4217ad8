#include "wright/grading.hpp"

#include <stdexcept>

#include "wright/errors.hpp"

namespace wright {

WeightVector::WeightVector(std::int64_t wx, std::int64_t wy) : wx_(wx), wy_(wy) {
  if (wx == 0 && wy == 0) throw InvalidArgument("weight vector (0, 0) is not a grading");
}

std::map<std::int64_t, LaurentPoly> weighted_components(const LaurentPoly& p,
                                                        const WeightVector& w) {
  std::map<std::int64_t, LaurentPoly> out;
  for (const auto& [e, c] : p.terms()) out[w.degree_of(e)].add_term(e, c);
  return out;
}

std::int64_t Degree::value() const {
  if (neg_inf_) throw std::logic_error("degree of the zero polynomial is -infinity");
  return d_;
}

Degree total_degree(const LaurentPoly& p) {
  if (p.is_zero()) return Degree::neg_infinity();
  std::int64_t best = p.terms().begin()->first.x + p.terms().begin()->first.y;
  for (const auto& [e, c] : p.terms()) best = std::max(best, e.x + e.y);
  return Degree::of(best);
}

bool is_regular_in(const LaurentPoly& p, Var var) {
  if (p.is_zero()) throw ZeroPolynomial("regularity is undefined for the zero polynomial");
  const std::int64_t n = total_degree(p).value();
  if (n < 0) return false;
  const Exponent pure = var == Var::x ? Exponent{n, 0} : Exponent{0, n};
  return p.terms().contains(pure);
}

bool is_regular_in_both(const LaurentPoly& p) {
  if (p.is_zero() || total_degree(p).value() < 1) return false;
  return is_regular_in(p, Var::x) && is_regular_in(p, Var::y);
}

}  // namespace wright
