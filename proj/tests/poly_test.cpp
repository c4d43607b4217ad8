#include <gtest/gtest.h>

#include "support.hpp"
#include "wright/errors.hpp"
#include "wright/grading.hpp"
#include "wright/linear_map.hpp"
#include "wright/poly_io.hpp"

namespace wright {
namespace {

using testing::Naive;
using testing::Rng;

LaurentPoly P(const char* s) { return parse_poly(s); }

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("-4/6"), Rational(-2, 3));
  EXPECT_EQ(parse_rational(" 7 "), Rational(7));
  EXPECT_EQ(to_string(Rational(-2, 3)), "-2/3");
  EXPECT_EQ(height(Rational(-7, 3)), 7);
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1/-2"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
}

TEST(LaurentPoly, Arithmetic) {
  EXPECT_EQ((P("x + y") + P("-x")), P("y"));
  EXPECT_EQ(pow(P("x^3*y + x"), 2), P("x^6*y^2 + 2*x^4*y + x^2"));
  EXPECT_TRUE((P("x^2 - 3*y") * LaurentPoly(0)).is_zero());
  EXPECT_EQ(P("x^-1") * P("x"), LaurentPoly(1));
  EXPECT_EQ(pow(P("x + 1"), 0), LaurentPoly(1));
  EXPECT_EQ(-P("x - y"), P("y - x"));
  EXPECT_EQ(P("x").scaled(Rational(1, 2)), P("1/2*x"));
}

TEST(LaurentPoly, Queries) {
  const LaurentPoly p = P("3*x^-2*y + x^4 - 5");
  EXPECT_FALSE(p.is_polynomial());
  EXPECT_EQ(p.min_x_exponent(), -2);
  EXPECT_EQ(p.max_x_exponent(), 4);
  EXPECT_EQ(p.max_y_exponent(), 1);
  EXPECT_EQ(p.coefficient({-2, 1}), 3);
  EXPECT_EQ(p.coefficient({1, 1}), 0);
  EXPECT_TRUE(LaurentPoly(5).is_constant());
  EXPECT_TRUE(LaurentPoly().is_constant());
  EXPECT_TRUE(P("2*x*y").is_monomial());
  EXPECT_THROW(LaurentPoly::monomial(1, 0, -1), InvalidArgument);
}

TEST(LaurentPoly, Derivatives) {
  EXPECT_EQ(partial_derivative(P("x^2*y"), Var::x), P("2*x*y"));
  EXPECT_EQ(partial_derivative(P("x^3*y + x"), Var::y), P("x^3"));
  EXPECT_TRUE(partial_derivative(LaurentPoly(7), Var::x).is_zero());
  EXPECT_EQ(partial_derivative(P("x^-2*y"), Var::x), P("-2*x^-3*y"));
}

TEST(LaurentPoly, Jacobian) {
  EXPECT_EQ(jacobian_determinant(P("x"), P("y")), LaurentPoly(1));
  EXPECT_EQ(jacobian_determinant(P("y"), P("x*y")), P("-y"));
  const LaurentPoly p = P("x^2*y + 3*x - y^3");
  EXPECT_TRUE(jacobian_determinant(p, p).is_zero());
  EXPECT_EQ(jacobian_determinant(P("x + y^2"), P("y")), LaurentPoly(1));
}

TEST(LaurentPoly, Substitute) {
  EXPECT_EQ(substitute(P("x^2*y"), P("x^-1"), P("y")), P("x^-2*y"));
  // chart change for the index-3 algebra with alpha = 1, written in the x/y slots
  EXPECT_EQ(substitute(P("y"), P("x^-1"), P("x^3*y - x^2")), P("x^3*y - x^2"));
  const LaurentPoly p = P("x^3*y - 2*x + 1/3");
  EXPECT_EQ(substitute(p, P("x"), P("y")), p);
  EXPECT_EQ(substitute(P("x^-1 + y"), P("2*x^2"), P("y")), P("1/2*x^-2 + y"));
  EXPECT_THROW(substitute(P("x^-1"), P("2*x*y"), P("y")), NonInvertibleImage);
  EXPECT_THROW(substitute(P("x^-1"), P("x + 1"), P("y")), NonInvertibleImage);
}

TEST(LaurentPoly, DivideExact) {
  EXPECT_EQ(*divide_exact(P("x^2 - y^2"), P("x - y")), P("x + y"));
  EXPECT_FALSE(divide_exact(P("x^2 + y"), P("x")).has_value());
  EXPECT_EQ(*divide_exact(LaurentPoly(), P("x")), LaurentPoly());
  EXPECT_THROW(divide_exact(P("x"), LaurentPoly()), ZeroPolynomial);
}

TEST(Grading, WeightedComponents) {
  const WeightVector w = dg_weights();
  auto parts = weighted_components(P("x + y"), w);
  ASSERT_EQ(parts.size(), 2U);
  EXPECT_EQ(parts[-1], P("x"));
  EXPECT_EQ(parts[2], P("y"));
  parts = weighted_components(P("x^2*y"), w);
  ASSERT_EQ(parts.size(), 1U);
  EXPECT_EQ(parts[0], P("x^2*y"));
  parts = weighted_components(P("x^3*y + x"), w);
  ASSERT_EQ(parts.size(), 1U);
  EXPECT_EQ(parts[-1], P("x^3*y + x"));
  EXPECT_TRUE(weighted_components(LaurentPoly(), w).empty());
  EXPECT_THROW(WeightVector(0, 0), InvalidArgument);
}

TEST(Grading, TotalDegree) {
  EXPECT_EQ(total_degree(P("x^3*y + x")), Degree::of(4));
  EXPECT_EQ(total_degree(LaurentPoly(5)), Degree::of(0));
  EXPECT_TRUE(total_degree(LaurentPoly()).is_neg_infinity());
  EXPECT_LT(Degree::neg_infinity(), Degree::of(-100));
  EXPECT_TRUE((Degree::neg_infinity() + Degree::of(3)).is_neg_infinity());
  EXPECT_THROW(Degree::neg_infinity().value(), std::logic_error);
}

TEST(Grading, Regularity) {
  EXPECT_TRUE(is_regular_in(P("x^2 + y^2"), Var::x));
  EXPECT_FALSE(is_regular_in(P("x*y"), Var::x));
  EXPECT_FALSE(is_regular_in(P("x^3*y + x"), Var::x));
  EXPECT_TRUE(is_regular_in(P("x^3*y + y^4"), Var::y));
  EXPECT_THROW(is_regular_in(LaurentPoly(), Var::x), ZeroPolynomial);
  EXPECT_TRUE(is_regular_in_both(P("x^2 + y^2")));
  EXPECT_FALSE(is_regular_in_both(LaurentPoly(3)));
  EXPECT_FALSE(is_regular_in_both(P("y")));
}

TEST(LinearMap, Basics) {
  EXPECT_EQ(linear_substitute(P("x"), LinearMap(0, 1, 1, 0)), P("y"));  // w lives in slot 2
  EXPECT_EQ(format_poly(linear_substitute(P("x"), LinearMap(0, 1, 1, 0)), kVW), "w");
  EXPECT_EQ(linear_substitute(P("x*y"), LinearMap(1, 1, 1, -1)), P("x^2 - y^2"));
  const LaurentPoly p = P("x^3 - 2*x*y + 7");
  EXPECT_EQ(linear_substitute(p, LinearMap::identity()), p);
  EXPECT_THROW(LinearMap(1, 2, 2, 4), SingularMap);
  EXPECT_EQ(LinearMap(2, 1, 1, 1).inverse(), LinearMap(1, -1, -1, 2));
  EXPECT_EQ(LinearMap(2, 1, 1, 1).determinant(), 1);
}

TEST(PolyIo, ParseForms) {
  EXPECT_EQ(P("x^3*y + x"), LaurentPoly::monomial(1, 3, 1) + LaurentPoly::x());
  EXPECT_EQ(P("-1/2 x y^2"), LaurentPoly::monomial(Rational(-1, 2), 1, 2));
  EXPECT_EQ(P("x*x"), P("x^2"));
  EXPECT_EQ(P("2*v + w"), P("2*x + y"));
  EXPECT_EQ(P("z^2 + 1"), P("x^2 + 1"));
  EXPECT_EQ(P("0"), LaurentPoly());
  EXPECT_EQ(P("x^-3"), LaurentPoly::monomial(1, -3, 0));
}

TEST(PolyIo, ParseErrors) {
  for (const char* bad : {"", "x +", "y^-1", "x*v", "y + w", "3/0*x", "x^", "q", "x^1.5",
                          "((x))", "w^-1"}) {
    EXPECT_THROW(parse_poly(bad), ParseError) << bad;
  }
}

TEST(PolyIo, Format) {
  EXPECT_EQ(format_poly(P("x + 1/2*x^3*y")), "x + 1/2*x^3*y");
  EXPECT_EQ(format_poly(P("-y")), "-y");
  EXPECT_EQ(format_poly(LaurentPoly()), "0");
  EXPECT_EQ(format_poly(P("1 - x^-1")), "-x^-1 + 1");
  EXPECT_EQ(format_poly(P("v^2 - w^2"), kVW), "-w^2 + v^2");
}

// ---- properties --------------------------------------------------------------

class PolyProperty : public ::testing::Test {
 protected:
  Rng rng{20240917};
  LaurentPoly random(int terms = 5, long min_x = 0) {
    return testing::random_poly(rng, terms, 4, 3, 6, min_x);
  }
};

TEST_F(PolyProperty, RingOpsMatchNaiveArithmetic) {
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly a = random(5, -2), b = random(5, -2);
    EXPECT_EQ(testing::naive(a * b), testing::naive_mul(testing::naive(a), testing::naive(b)));
    EXPECT_EQ(testing::naive(a + b), testing::naive_add(testing::naive(a), testing::naive(b)));
    EXPECT_EQ(testing::naive(pow(a, 3)), testing::naive_pow(testing::naive(a), 3));
  }
}

TEST_F(PolyProperty, RingAxioms) {
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly a = random(), b = random(), c = random(3, -1);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * LaurentPoly(1), a);
  }
}

TEST_F(PolyProperty, DerivativesMatchNaive) {
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly p = random(6, -3), q = random(6);
    EXPECT_EQ(testing::naive(partial_derivative(p, Var::x)), testing::naive_d(testing::naive(p), true));
    EXPECT_EQ(testing::naive(partial_derivative(p, Var::y)), testing::naive_d(testing::naive(p), false));
    EXPECT_EQ(testing::naive(jacobian_determinant(p, q)),
              testing::naive_jacobian(testing::naive(p), testing::naive(q)));
    EXPECT_EQ(jacobian_determinant(p, q), -jacobian_determinant(q, p));
  }
}

TEST_F(PolyProperty, MixedPartialsCommute) {
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly p = random(6, -3);
    EXPECT_EQ(partial_derivative(partial_derivative(p, Var::x), Var::y),
              partial_derivative(partial_derivative(p, Var::y), Var::x));
  }
}

TEST_F(PolyProperty, LeibnizRule) {
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly p = random(4, -2), q = random(4, -2);
    for (Var v : {Var::x, Var::y}) {
      EXPECT_EQ(partial_derivative(p * q, v),
                partial_derivative(p, v) * q + p * partial_derivative(q, v));
    }
  }
}

TEST_F(PolyProperty, SubstitutionIsRingHomomorphism) {
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly a = random(4), b = random(4);
    const LaurentPoly xi = random(3), yi = random(3);
    EXPECT_EQ(substitute(a * b, xi, yi), substitute(a, xi, yi) * substitute(b, xi, yi));
    EXPECT_EQ(substitute(a + b, xi, yi), substitute(a, xi, yi) + substitute(b, xi, yi));
    EXPECT_EQ(testing::naive(substitute(a, xi, yi)),
              testing::naive_substitute(testing::naive(a), testing::naive(xi), testing::naive(yi)));
  }
}

TEST_F(PolyProperty, JacobianChainRule) {
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly p = random(4), q = random(4);
    const LinearMap L = testing::random_linear_map(rng);
    EXPECT_EQ(jacobian_determinant(linear_substitute(p, L), linear_substitute(q, L)),
              linear_substitute(jacobian_determinant(p, q), L).scaled(L.determinant()));
  }
}

TEST_F(PolyProperty, LinearMapInverseRoundTrip) {
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly p = random(5);
    const LinearMap L = testing::random_linear_map(rng);
    EXPECT_EQ(linear_substitute(linear_substitute(p, L), L.inverse()), p);
  }
}

TEST_F(PolyProperty, LinearSubstituteMatchesNaive) {
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly p = random(5);
    const LinearMap L = testing::random_linear_map(rng);
    const Naive xi{{{1, 0}, L.a()}, {{0, 1}, L.b()}};
    const Naive yi{{{1, 0}, L.c()}, {{0, 1}, L.d()}};
    Naive xi_clean, yi_clean;
    for (const auto& [e, c] : xi) if (c != 0) xi_clean[e] = c;
    for (const auto& [e, c] : yi) if (c != 0) yi_clean[e] = c;
    EXPECT_EQ(testing::naive(linear_substitute(p, L)),
              testing::naive_substitute(testing::naive(p), xi_clean, yi_clean));
  }
}

TEST_F(PolyProperty, FormatParseRoundTrip) {
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly p = random(6, -4);
    EXPECT_EQ(parse_poly(format_poly(p)), p);
    EXPECT_EQ(parse_poly(format_poly(p.is_polynomial() ? p : LaurentPoly(), kVW)),
              p.is_polynomial() ? p : LaurentPoly());
  }
}

TEST_F(PolyProperty, WeightedComponentsPartitionP) {
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly p = random(8, -3);
    const WeightVector w(testing::uniform(rng, -3, 3), testing::uniform(rng, 1, 3));
    LaurentPoly sum;
    for (const auto& [d, part] : weighted_components(p, w)) {
      EXPECT_FALSE(part.is_zero());
      for (const auto& [e, c] : part.terms()) EXPECT_EQ(w.degree_of(e), d);
      sum += part;
    }
    EXPECT_EQ(sum, p);
  }
}

TEST_F(PolyProperty, DegreeIsAdditive) {
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly a = random(4), b = i % 10 == 0 ? LaurentPoly() : random(4);
    EXPECT_EQ(total_degree(a * b), total_degree(a) + total_degree(b));
  }
}

TEST_F(PolyProperty, DivideExactRecoversFactor) {
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly a = random(4), b = random(3);
    if (b.is_zero()) continue;
    const auto q = divide_exact(a * b, b);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, a);
  }
}

}  // namespace
}  // namespace wright
