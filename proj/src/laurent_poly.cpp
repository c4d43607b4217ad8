#include "wright/laurent_poly.hpp"

#include <algorithm>
#include <vector>

#include "wright/errors.hpp"

namespace wright {

LaurentPoly::LaurentPoly(const Rational& constant) {
  if (constant != 0) terms_.emplace(Exponent{0, 0}, constant);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, std::int64_t ex, std::int64_t ey) {
  if (ey < 0) throw InvalidArgument("negative y-exponent is not allowed");
  LaurentPoly p;
  p.add_term({ex, ey}, c);
  return p;
}

bool LaurentPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

bool LaurentPoly::is_polynomial() const noexcept {
  return terms_.empty() || terms_.begin()->first.x >= 0;
}

Rational LaurentPoly::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::int64_t LaurentPoly::min_x_exponent() const noexcept {
  return terms_.empty() ? 0 : terms_.begin()->first.x;
}

std::int64_t LaurentPoly::max_x_exponent() const noexcept {
  return terms_.empty() ? 0 : terms_.rbegin()->first.x;
}

std::int64_t LaurentPoly::max_y_exponent() const noexcept {
  std::int64_t m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, e.y);
  return m;
}

void LaurentPoly::add_term(Exponent e, const Rational& c) {
  if (c == 0) return;
  if (e.y < 0) throw InvalidArgument("negative y-exponent is not allowed");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  Rational prod;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      prod = ca * cb;
      r.add_term({ea.x + eb.x, ea.y + eb.y}, prod);
    }
  }
  return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  LaurentPoly r = *this;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

LaurentPoly pow(const LaurentPoly& p, unsigned k) {
  LaurentPoly result(1);
  LaurentPoly base = p;
  while (k > 0) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k > 0) base *= base;
  }
  return result;
}

LaurentPoly partial_derivative(const LaurentPoly& p, Var var) {
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) {
    if (var == Var::x) {
      if (e.x != 0) r.add_term({e.x - 1, e.y}, c * Rational(e.x));
    } else {
      if (e.y != 0) r.add_term({e.x, e.y - 1}, c * Rational(e.y));
    }
  }
  return r;
}

LaurentPoly jacobian_determinant(const LaurentPoly& p, const LaurentPoly& q) {
  return partial_derivative(p, Var::x) * partial_derivative(q, Var::y) -
         partial_derivative(p, Var::y) * partial_derivative(q, Var::x);
}

namespace {

// Caches successive powers of one image polynomial.
class PowerCache {
 public:
  explicit PowerCache(const LaurentPoly& base) : powers_{LaurentPoly(1), base} {}

  const LaurentPoly& get(std::size_t k) {
    while (powers_.size() <= k) powers_.push_back(powers_.back() * powers_[1]);
    return powers_[k];
  }

 private:
  std::vector<LaurentPoly> powers_;
};

}  // namespace

LaurentPoly substitute(const LaurentPoly& p, const LaurentPoly& x_image,
                       const LaurentPoly& y_image) {
  if (p.min_x_exponent() < 0) {
    if (!x_image.is_monomial()) {
      throw NonInvertibleImage("negative power of x requires a monomial x-image");
    }
  }
  PowerCache xs(x_image);
  PowerCache ys(y_image);
  LaurentPoly inv_x;
  if (p.min_x_exponent() < 0) {
    const auto& [e, c] = *x_image.terms().begin();
    if (e.y != 0) {
      throw NonInvertibleImage("x-image involves y and cannot be inverted");
    }
    inv_x = LaurentPoly::monomial(1 / c, -e.x, 0);
  }
  PowerCache inv_xs(inv_x);

  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) {
    const LaurentPoly& xpart =
        e.x >= 0 ? xs.get(static_cast<std::size_t>(e.x))
                 : inv_xs.get(static_cast<std::size_t>(-e.x));
    r += (xpart * ys.get(static_cast<std::size_t>(e.y))).scaled(c);
  }
  return r;
}

namespace {

// Leading term under lex order with y most significant.
std::pair<Exponent, Rational> leading_y_lex(const LaurentPoly& p) {
  auto best = p.terms().begin();
  for (auto it = p.terms().begin(); it != p.terms().end(); ++it) {
    if (it->first.y > best->first.y ||
        (it->first.y == best->first.y && it->first.x > best->first.x)) {
      best = it;
    }
  }
  return *best;
}

}  // namespace

std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  if (!f.is_polynomial() || !g.is_polynomial()) {
    throw InvalidArgument("divide_exact expects ordinary polynomials");
  }
  const auto [lead_e, lead_c] = leading_y_lex(g);
  LaurentPoly quotient;
  LaurentPoly rest = f;
  while (!rest.is_zero()) {
    const auto [re, rc] = leading_y_lex(rest);
    if (re.x < lead_e.x || re.y < lead_e.y) return std::nullopt;
    LaurentPoly t = LaurentPoly::monomial(rc / lead_c, re.x - lead_e.x, re.y - lead_e.y);
    quotient += t;
    rest -= t * g;
  }
  return quotient;
}

}  // namespace wright
