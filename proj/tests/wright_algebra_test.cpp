#include <gtest/gtest.h>

#include "support.hpp"
#include "wright/errors.hpp"
#include "wright/grading.hpp"
#include "wright/poly_io.hpp"
#include "wright/wright_algebra.hpp"

namespace wright {
namespace {

using testing::Naive;
using testing::Rng;

LaurentPoly P(const char* s) { return parse_poly(s); }

const WrightAlgebra kW301(3, {Rational(0), Rational(1)});

// Chart image computed from the defining substitution, term by term.
Naive naive_chart(const WrightAlgebra& w, const LaurentPoly& p) {
  Naive y_image{{{w.m(), 1}, Rational(1)}};
  for (int i = 1; i < w.m(); ++i) {
    const Rational& a = w.alphas()[static_cast<std::size_t>(i - 1)];
    if (a != 0) y_image[{i, 0}] -= a;
  }
  return testing::naive_substitute(testing::naive(p), {{{-1, 0}, Rational(1)}}, y_image,
                                   {{{1, 0}, Rational(1)}});
}

bool naive_member(const WrightAlgebra& w, const LaurentPoly& p) {
  if (!p.is_polynomial()) return false;
  for (const auto& [e, c] : naive_chart(w, p)) {
    if (e.first < 0) return false;
  }
  return true;
}

TEST(WrightAlgebra, Validation) {
  EXPECT_THROW(WrightAlgebra(1, {}), InvalidAlgebra);
  EXPECT_THROW(WrightAlgebra(3, {Rational(1)}), InvalidAlgebra);
  EXPECT_THROW(WrightAlgebra(3, {Rational(0), Rational(0)}), InvalidAlgebra);
  EXPECT_THROW(CanonicalIndex3Algebra(0), InvalidAlgebra);
  EXPECT_TRUE(kW301.is_canonical_index3());
  EXPECT_FALSE(WrightAlgebra(3, {Rational(1), Rational(1)}).is_canonical_index3());
  EXPECT_FALSE(WrightAlgebra(2, {Rational(1)}).is_canonical_index3());
  EXPECT_EQ(CanonicalIndex3Algebra(1).as_wright(), kW301);
  EXPECT_EQ(kW301.generator_count(), 4U);
}

TEST(WrightAlgebra, Generators) {
  EXPECT_EQ(generators(kW301),
            (std::vector<LaurentPoly>{P("y"), P("x*y"), P("x^2*y"), P("x^3*y + x")}));
  EXPECT_EQ(generators(WrightAlgebra(2, {Rational(1)})),
            (std::vector<LaurentPoly>{P("y"), P("x*y"), P("x^2*y + x")}));
  EXPECT_EQ(top_generator(kW301), P("x^3*y + x"));
}

TEST(WrightAlgebra, GeneratorsMatchDefinition) {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const WrightAlgebra w = testing::random_algebra(rng, 7);
    const auto gens = generators(w);
    const auto expect = testing::naive_generators(w);
    ASSERT_EQ(gens.size(), expect.size());
    for (std::size_t k = 0; k < gens.size(); ++k) EXPECT_EQ(testing::naive(gens[k]), expect[k]);
  }
}

TEST(WrightAlgebra, GeneratorWeightedDegrees) {
  const auto gens = generators(CanonicalIndex3Algebra(1).as_wright());
  const std::int64_t expected[] = {2, 1, 0, -1};
  for (std::size_t k = 0; k < 4; ++k) {
    const auto parts = weighted_components(gens[k], dg_weights());
    ASSERT_EQ(parts.size(), 1U);
    EXPECT_EQ(parts.begin()->first, expected[k]);
  }
}

TEST(WrightAlgebra, ChartTransform) {
  EXPECT_EQ(chart_transform(kW301, P("y")), P("x^3*y - x^2"));
  EXPECT_EQ(chart_transform(kW301, P("x^3*y + x")), P("y"));
  EXPECT_EQ(chart_transform(kW301, P("x")), P("x^-1"));
  EXPECT_EQ(chart_transform(WrightAlgebra(4, {Rational(2), Rational(0), Rational(-1)}), P("x")),
            P("x^-1"));
  EXPECT_EQ(chart_inverse(kW301, P("x^3*y - x^2")), P("y"));
}

TEST(WrightAlgebra, ChartMatchesNaiveSubstitution) {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const WrightAlgebra w = testing::random_algebra(rng);
    const LaurentPoly p = testing::random_poly(rng, 5, 4, 3);
    EXPECT_EQ(testing::naive(chart_transform(w, p)), naive_chart(w, p));
    EXPECT_EQ(chart_inverse(w, chart_transform(w, p)), p);
  }
}

TEST(WrightAlgebra, Membership) {
  EXPECT_TRUE(is_member(kW301, P("x^3*y + x")));
  EXPECT_FALSE(is_member(kW301, P("x")));
  EXPECT_TRUE(is_member(kW301, LaurentPoly(5)));
  EXPECT_TRUE(is_member(WrightAlgebra(2, {Rational(7)}), LaurentPoly(5)));
  EXPECT_FALSE(is_member(kW301, P("x^-1*y")));
  EXPECT_EQ(chart_obstruction(kW301, P("x")), P("x^-1"));
  EXPECT_TRUE(chart_obstruction(kW301, P("x^2*y")).is_zero());
}

TEST(WrightAlgebra, MembershipAgreesWithOracle) {
  Rng rng(13);
  int members = 0;
  for (int i = 0; i < 150; ++i) {
    const WrightAlgebra w = testing::random_algebra(rng, 4, 3);
    LaurentPoly p;
    if (i % 2 == 0) {
      const auto e = testing::random_expression(rng, w.generator_count(), 3, 3);
      p = evaluate(e, generators(w));
      if (i % 4 == 0) p += testing::random_poly(rng, 1, 3, 1);
    } else {
      p = testing::random_poly(rng, 4, 5, 2);
    }
    const bool member = is_member(w, p);
    EXPECT_EQ(member, naive_member(w, p)) << format_poly(p);
    members += member ? 1 : 0;
  }
  EXPECT_GT(members, 30);
}

TEST(WrightAlgebra, ExpressInGenerators) {
  const auto names = t_symbol_names(4);
  auto e = express_in_generators(kW301, P("y^2"), 2);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(format_symbolic(*e, names), "T0^2");
  e = express_in_generators(kW301, P("x^4*y^2 + x^2*y"), 2);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(format_symbolic(*e, names), "T1*T3");
  for (unsigned bound = 0; bound <= 5; ++bound) {
    EXPECT_FALSE(express_in_generators(kW301, P("x"), bound).has_value());
  }
  e = express_in_generators(kW301, LaurentPoly(Rational(-3, 2)), 0);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(format_symbolic(*e, names), "-3/2");
  // member, but needs T-degree 2
  EXPECT_FALSE(express_in_generators(kW301, P("x^4*y^2 + x^2*y"), 1).has_value());
  EXPECT_EQ(default_expression_bound(P("x^4*y^2 + x^2*y")), 8U);
  EXPECT_EQ(default_expression_bound(LaurentPoly(3)), 0U);
}

TEST(WrightAlgebra, ExpressionRoundTrip) {
  Rng rng(14);
  for (int i = 0; i < 60; ++i) {
    const WrightAlgebra w = testing::random_algebra(rng, 4, 4);
    const auto e = testing::random_expression(rng, w.generator_count(), 3, 4);
    const LaurentPoly p = testing::from_naive(testing::naive_evaluate(e, testing::naive_generators(w)));
    const auto back = express_in_generators(w, p, 3);
    ASSERT_TRUE(back.has_value()) << format_poly(p);
    EXPECT_EQ(evaluate(*back, generators(w)), p);
    EXPECT_LE(back->total_degree(), 3);
  }
}

TEST(NegativeDegree, Examples) {
  const CanonicalIndex3Algebra c(1);
  auto f = negative_degree_factor(c, P("x^3*y + x"));
  EXPECT_EQ(f.m, 1U);
  EXPECT_EQ(f.g, LaurentPoly(1));
  f = negative_degree_factor(c, pow(P("x^3*y + x"), 2) * P("x^2*y + 2"));
  EXPECT_EQ(f.m, 2U);
  EXPECT_EQ(format_poly(f.g, kZ), "2 + z");
  EXPECT_THROW(negative_degree_factor(c, P("x")), NotInAlgebra);
  EXPECT_THROW(negative_degree_factor(c, P("y")), NotHomogeneousNegative);
  EXPECT_THROW(negative_degree_factor(c, P("x + y")), NotHomogeneousNegative);
  EXPECT_THROW(negative_degree_factor(c, LaurentPoly()), NotHomogeneousNegative);
  EXPECT_THROW(negative_degree_factor(c, P("x^2*y")), NotHomogeneousNegative);
  // homogeneous of degree -2, but (x^3y + x)^2 does not divide it
  EXPECT_THROW(negative_degree_factor(c, P("x^4*y + x^2")), NotInAlgebra);
}

TEST(NegativeDegree, ReconstructionProperty) {
  Rng rng(15);
  for (int i = 0; i < 60; ++i) {
    const CanonicalIndex3Algebra c(testing::random_nonzero_rational(rng, 10));
    const unsigned m = static_cast<unsigned>(testing::uniform(rng, 1, 4));
    LaurentPoly g = testing::random_poly(rng, 3, 3, 0, 10);
    if (g.is_zero()) g = LaurentPoly(1);
    const Naive t{{{3, 1}, Rational(1)}, {{1, 0}, c.alpha()}};
    const Naive f = testing::naive_mul(testing::naive_pow(t, m),
                                       testing::naive_substitute(testing::naive(g),
                                                                 {{{2, 1}, Rational(1)}}, {}));
    const auto got = negative_degree_factor(c, testing::from_naive(f));
    EXPECT_EQ(got.m, m);
    EXPECT_EQ(got.g, g);
    EXPECT_EQ(testing::naive(expand_negative_degree(c, m, g)), f);
  }
}

TEST(Lemma, NoneFound) {
  const auto r = verify_no_regular_elements(CanonicalIndex3Algebra(1), 4);
  EXPECT_TRUE(r.none_found());
  ASSERT_EQ(r.levels.size(), 4U);
  for (unsigned n = 1; n <= 4; ++n) {
    const auto& level = r.levels[n - 1];
    EXPECT_EQ(level.bound, n);
    EXPECT_FALSE(level.regular_element_found());
    ASSERT_EQ(level.checks.size(), n);
    EXPECT_LE(level.dimension, level.products);
  }
  // products of total degree <= 1: 1 and y
  EXPECT_EQ(r.levels[0].products, 2U);
  EXPECT_EQ(r.levels[0].dimension, 2U);
}

TEST(Lemma, DegreeOneAndAlphaIndependence) {
  EXPECT_TRUE(verify_no_regular_elements(CanonicalIndex3Algebra(1), 1).none_found());
  const auto a = verify_no_regular_elements(CanonicalIndex3Algebra(1), 3);
  const auto b = verify_no_regular_elements(CanonicalIndex3Algebra(5), 3);
  EXPECT_EQ(a.none_found(), b.none_found());
  for (std::size_t i = 0; i < a.levels.size(); ++i) {
    EXPECT_EQ(a.levels[i].dimension, b.levels[i].dimension);
  }
  EXPECT_THROW(verify_no_regular_elements(CanonicalIndex3Algebra(1), 0), InvalidArgument);
}

TEST(Lemma, PureTermsAppearOnlySeparately) {
  // Pure powers of y are members (y^n = t0^n), pure powers of x never are.
  const auto r = verify_no_regular_elements(CanonicalIndex3Algebra(Rational(-2, 3)), 4);
  for (const auto& level : r.levels) {
    for (const auto& check : level.checks) {
      EXPECT_FALSE(check.has_pure_x);
      EXPECT_TRUE(check.has_pure_y);
    }
  }
}

// The enumeration order promised for regularizing_transform.
std::vector<LinearMap> candidate_maps(long k) {
  std::vector<LinearMap> out{LinearMap::identity()};
  for (long r = 1; r <= k; ++r) {
    for (long a = -r; a <= r; ++a)
      for (long b = -r; b <= r; ++b)
        for (long c = -r; c <= r; ++c)
          for (long d = -r; d <= r; ++d) {
            if (std::max({std::abs(a), std::abs(b), std::abs(c), std::abs(d)}) != r) continue;
            if (a * d - b * c == 0) continue;
            out.emplace_back(a, b, c, d);
          }
  }
  return out;
}

TEST(Regularize, Examples) {
  EXPECT_EQ(regularizing_transform(P("x^2 + y^2")), LinearMap::identity());
  for (const char* s : {"x*y", "x^3*y + x", "y", "x^2*y^3 - x"}) {
    const LaurentPoly p = P(s);
    const LinearMap L = regularizing_transform(p);
    EXPECT_TRUE(is_regular_in_both(linear_substitute(p, L))) << s;
    // first in the documented order
    for (const auto& earlier : candidate_maps(2)) {
      if (earlier == L) break;
      EXPECT_FALSE(is_regular_in_both(linear_substitute(p, earlier))) << s;
    }
  }
  EXPECT_THROW(regularizing_transform(LaurentPoly(4)), ZeroOrConstantInput);
  EXPECT_THROW(regularizing_transform(LaurentPoly()), ZeroOrConstantInput);
}

TEST(Regularize, PostConditionOnRandomInputs) {
  Rng rng(16);
  for (int i = 0; i < 50; ++i) {
    const LaurentPoly p = testing::random_poly(rng, 4, 4, 4);
    if (p.is_constant()) continue;
    const LinearMap L = regularizing_transform(p);
    EXPECT_TRUE(is_regular_in_both(linear_substitute(p, L))) << format_poly(p);
  }
}

}  // namespace
}  // namespace wright
