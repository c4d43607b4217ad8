#include "wright/wright_algebra.hpp"

#include <algorithm>
#include <array>

#include "wright/errors.hpp"
#include "wright/exact_span.hpp"
#include "wright/grading.hpp"

namespace wright {

WrightAlgebra::WrightAlgebra(int m, std::vector<Rational> alphas)
    : m_(m), alphas_(std::move(alphas)) {
  if (m_ < 2) throw InvalidAlgebra("Wright algebra needs m >= 2");
  if (alphas_.size() != static_cast<std::size_t>(m_ - 1)) {
    throw InvalidAlgebra("Wright algebra with m = " + std::to_string(m_) + " needs " +
                         std::to_string(m_ - 1) + " alphas");
  }
  if (std::all_of(alphas_.begin(), alphas_.end(), [](const Rational& a) { return a == 0; })) {
    throw InvalidAlgebra("alphas must not all be zero");
  }
}

bool WrightAlgebra::is_canonical_index3() const noexcept {
  return m_ == 3 && alphas_[0] == 0;
}

CanonicalIndex3Algebra::CanonicalIndex3Algebra(Rational alpha) : alpha_(std::move(alpha)) {
  if (alpha_ == 0) throw InvalidAlgebra("the index-3 algebra needs alpha != 0");
}

namespace {

LaurentPoly generator_k(const WrightAlgebra& w, int k) {
  LaurentPoly t = LaurentPoly::monomial(1, k, 1);
  for (int i = 1; i <= k - 1; ++i) t.add_term({k - i, 0}, w.alphas()[i - 1]);
  return t;
}

}  // namespace

std::vector<LaurentPoly> generators(const WrightAlgebra& w) {
  std::vector<LaurentPoly> out;
  out.reserve(w.generator_count());
  for (int k = 0; k <= w.m(); ++k) out.push_back(generator_k(w, k));
  return out;
}

LaurentPoly top_generator(const WrightAlgebra& w) { return generator_k(w, w.m()); }

LaurentPoly chart_transform(const WrightAlgebra& w, const LaurentPoly& p) {
  LaurentPoly y_image = LaurentPoly::monomial(1, w.m(), 1);
  for (int i = 1; i <= w.m() - 1; ++i) y_image.add_term({i, 0}, -w.alphas()[i - 1]);
  return substitute(p, LaurentPoly::monomial(1, -1, 0), y_image);
}

LaurentPoly chart_inverse(const WrightAlgebra& w, const LaurentPoly& chart_poly) {
  return substitute(chart_poly, LaurentPoly::monomial(1, -1, 0), top_generator(w));
}

LaurentPoly chart_obstruction(const WrightAlgebra& w, const LaurentPoly& p) {
  LaurentPoly out;
  const LaurentPoly image = chart_transform(w, p);
  for (const auto& [e, c] : image.terms()) {
    if (e.x < 0) out.add_term(e, c);
  }
  return out;
}

bool is_member(const WrightAlgebra& w, const LaurentPoly& p) {
  return p.is_polynomial() && chart_transform(w, p).min_x_exponent() >= 0;
}

unsigned default_expression_bound(const LaurentPoly& p) {
  const Degree d = total_degree(p);
  const auto total = d.is_neg_infinity() ? 0 : std::max<std::int64_t>(d.value(), 0);
  return static_cast<unsigned>(p.max_y_exponent() + total);
}

std::optional<GeneratorExpression> express_in_generators(const WrightAlgebra& w,
                                                         const LaurentPoly& p,
                                                         unsigned t_degree_bound) {
  const std::size_t arity = w.generator_count();
  if (!p.is_polynomial()) return std::nullopt;
  const auto monos = graded_monomials(arity, t_degree_bound);
  const auto gens = generators(w);
  const auto values = evaluate_monomials(monos, gens);

  ExactSpan span;
  for (const auto& v : values) span.add(v);
  const auto combo = span.express(p);
  if (!combo) return std::nullopt;

  GeneratorExpression expr(arity);
  for (const auto& [i, c] : *combo) expr.add_term(monos[i], c);
  return expr;
}

namespace {

LaurentPoly index3_top(const CanonicalIndex3Algebra& c) {
  LaurentPoly t = LaurentPoly::monomial(1, 3, 1);
  t.add_term({1, 0}, c.alpha());
  return t;
}

}  // namespace

NegativeDegreeFactorization negative_degree_factor(const CanonicalIndex3Algebra& c,
                                                   const LaurentPoly& f) {
  if (f.is_zero()) throw NotHomogeneousNegative("zero has no weighted degree");
  const auto parts = weighted_components(f, dg_weights());
  if (parts.size() != 1) {
    throw NotHomogeneousNegative("input is not homogeneous for weights (-1, 2)");
  }
  const std::int64_t degree = parts.begin()->first;
  if (degree >= 0) {
    throw NotHomogeneousNegative("weighted degree " + std::to_string(degree) +
                                 " is not negative");
  }
  if (!f.is_polynomial()) throw NotInAlgebra("input has negative powers of x");

  const auto m = static_cast<unsigned>(-degree);
  const auto quotient = divide_exact(f, pow(index3_top(c), m));
  if (!quotient) {
    throw NotInAlgebra("(x^3*y + alpha*x)^" + std::to_string(m) + " does not divide input");
  }
  NegativeDegreeFactorization out{m, {}};
  for (const auto& [e, coeff] : quotient->terms()) {
    if (e.x != 2 * e.y) throw NotInAlgebra("quotient is not a polynomial in x^2*y");
    out.g.add_term({e.y, 0}, coeff);
  }
  return out;
}

LaurentPoly expand_negative_degree(const CanonicalIndex3Algebra& c, unsigned m,
                                   const LaurentPoly& g) {
  const LaurentPoly g_of_z = substitute(g, LaurentPoly::monomial(1, 2, 1), LaurentPoly::y());
  return pow(index3_top(c), m) * g_of_z;
}

bool LemmaLevel::regular_element_found() const noexcept {
  return std::any_of(checks.begin(), checks.end(),
                     [](const DegreeCheck& d) { return d.regular_element_exists(); });
}

namespace {

// Builds an element of the given basis vectors' span having both pure
// terms, given one vector with an x^d term and one with a y^d term.
LaurentPoly combine_witness(const ExactSpan::Vector& with_x, const ExactSpan::Vector& with_y,
                            std::int64_t d) {
  const LaurentPoly a = ExactSpan::to_poly(with_x);
  const LaurentPoly b = ExactSpan::to_poly(with_y);
  for (int t = 0;; ++t) {
    LaurentPoly v = a + b.scaled(t);
    if (v.coefficient({d, 0}) != 0 && v.coefficient({0, d}) != 0) return v;
  }
}

}  // namespace

LemmaReport verify_no_regular_elements(const CanonicalIndex3Algebra& c, unsigned max_degree) {
  if (max_degree < 1) throw InvalidArgument("max degree must be at least 1");
  const WrightAlgebra w = c.as_wright();
  const auto gens = generators(w);

  // Each generator t_k has total degree k + 1, so products of total degree
  // <= max_degree have at most max_degree factors.
  auto monos = graded_monomials(gens.size(), max_degree);
  const auto values = evaluate_monomials(monos, gens);
  std::vector<std::pair<std::int64_t, std::size_t>> by_degree;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::int64_t d = total_degree(values[i]).value();
    if (d <= static_cast<std::int64_t>(max_degree)) by_degree.emplace_back(d, i);
  }
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  LemmaReport report;
  report.alpha = c.alpha();
  report.max_degree = max_degree;
  ExactSpan span;
  std::size_t next = 0;
  for (unsigned n = 1; n <= max_degree; ++n) {
    while (next < by_degree.size() && by_degree[next].first <= static_cast<std::int64_t>(n)) {
      span.add(values[by_degree[next].second]);
      ++next;
    }
    LemmaLevel level;
    level.bound = n;
    level.products = next;
    level.dimension = span.dimension();
    for (unsigned d = 1; d <= n; ++d) {
      const auto dd = static_cast<std::int64_t>(d);
      DegreeCheck check{d, false, false};
      const ExactSpan::Vector* with_x = nullptr;
      const ExactSpan::Vector* with_y = nullptr;
      for (const auto& b : span.basis()) {
        if (b.lead().x + b.lead().y > dd) continue;
        if (b.vec.contains({dd, 0})) {
          check.has_pure_x = true;
          with_x = &b.vec;
        }
        if (b.vec.contains({0, dd})) {
          check.has_pure_y = true;
          with_y = &b.vec;
        }
      }
      if (check.regular_element_exists() && !report.witness) {
        report.witness = combine_witness(*with_x, *with_y, dd);
      }
      level.checks.push_back(check);
    }
    report.levels.push_back(std::move(level));
  }
  return report;
}

LinearMap regularizing_transform(const LaurentPoly& p) {
  if (p.is_constant()) throw ZeroOrConstantInput("regularization needs a non-constant input");
  if (!p.is_polynomial()) throw InvalidArgument("regularization needs an ordinary polynomial");
  const auto works = [&p](const LinearMap& map) {
    return is_regular_in_both(linear_substitute(p, map));
  };
  if (works(LinearMap::identity())) return LinearMap::identity();
  for (int k = 1;; ++k) {
    for (int a = -k; a <= k; ++a) {
      for (int b = -k; b <= k; ++b) {
        for (int c = -k; c <= k; ++c) {
          for (int d = -k; d <= k; ++d) {
            if (std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)}) != k) continue;
            if (a * d - b * c == 0) continue;
            LinearMap map(a, b, c, d);
            if (works(map)) return map;
          }
        }
      }
    }
  }
}

}  // namespace wright
