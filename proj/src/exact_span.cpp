#include "wright/exact_span.hpp"

namespace wright {

namespace {

void axpy(ExactSpan::Vector& y, const Rational& a, const ExactSpan::Vector& x) {
  Rational t;
  for (const auto& [e, c] : x) {
    t = a * c;
    auto [it, inserted] = y.try_emplace(e, t);
    if (!inserted) {
      it->second += t;
      if (it->second == 0) y.erase(it);
    }
  }
}

void axpy(ExactSpan::Combination& y, const Rational& a, const ExactSpan::Combination& x) {
  Rational t;
  for (const auto& [i, c] : x) {
    t = a * c;
    auto [it, inserted] = y.try_emplace(i, t);
    if (!inserted) {
      it->second += t;
      if (it->second == 0) y.erase(it);
    }
  }
}

}  // namespace

bool ExactSpan::reduce(Vector& v, Combination& combo) const {
  while (!v.empty()) {
    const auto& [lead, coeff] = *v.begin();
    auto it = pivot_of_.find(lead);
    if (it == pivot_of_.end()) return true;
    const BasisVector& b = basis_[it->second];
    const Rational factor = -coeff / b.vec.begin()->second;
    axpy(v, factor, b.vec);
    axpy(combo, factor, b.combo);
  }
  return false;
}

bool ExactSpan::add(const LaurentPoly& v) {
  const std::size_t index = added_++;
  Vector vec(v.terms().begin(), v.terms().end());
  Combination combo{{index, Rational(1)}};
  if (!reduce(vec, combo)) return false;
  pivot_of_.emplace(vec.begin()->first, basis_.size());
  basis_.push_back({std::move(vec), std::move(combo)});
  return true;
}

std::optional<ExactSpan::Combination> ExactSpan::express(const LaurentPoly& target) const {
  Vector vec(target.terms().begin(), target.terms().end());
  Combination combo;
  if (reduce(vec, combo)) return std::nullopt;
  // reduce() accumulated -target in terms of the added vectors.
  for (auto& [i, c] : combo) c = -c;
  return combo;
}

LaurentPoly ExactSpan::to_poly(const Vector& v) {
  LaurentPoly p;
  for (const auto& [e, c] : v) p.add_term(e, c);
  return p;
}

}  // namespace wright
