#pragma once

// Random instance generators and naive reference implementations used as
// oracles by the tests. The oracles deliberately avoid the library's own
// arithmetic: they work on plain maps and expand everything term by term.

#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "wright/laurent_poly.hpp"
#include "wright/linear_map.hpp"
#include "wright/rational.hpp"
#include "wright/symbolic_poly.hpp"
#include "wright/wright_algebra.hpp"

namespace wright::testing {

using Rng = std::mt19937;

inline long uniform(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// Rational of height <= h (numerator and denominator bounded by h).
inline Rational random_rational(Rng& rng, long h) {
  Rational r(uniform(rng, -h, h), uniform(rng, 1, h));
  r.canonicalize();
  return r;
}

inline Rational random_nonzero_rational(Rng& rng, long h) {
  for (;;) {
    Rational r = random_rational(rng, h);
    if (r != 0) return r;
  }
}

/// Sparse polynomial with up to `terms` terms, exponents in [min_x, max_x] x [0, max_y].
inline LaurentPoly random_poly(Rng& rng, int terms, long max_x, long max_y, long h = 5,
                               long min_x = 0) {
  LaurentPoly p;
  for (int i = 0; i < terms; ++i) {
    p.add_term({uniform(rng, min_x, max_x), uniform(rng, 0, max_y)}, random_rational(rng, h));
  }
  return p;
}

inline LinearMap random_linear_map(Rng& rng, long h = 4) {
  for (;;) {
    const Rational a = random_rational(rng, h), b = random_rational(rng, h);
    const Rational c = random_rational(rng, h), d = random_rational(rng, h);
    if (a * d - b * c != 0) return LinearMap(a, b, c, d);
  }
}

inline WrightAlgebra random_algebra(Rng& rng, int max_m = 5, long h = 5) {
  const int m = static_cast<int>(uniform(rng, 2, max_m));
  std::vector<Rational> alphas(static_cast<std::size_t>(m - 1));
  for (;;) {
    bool any = false;
    for (auto& a : alphas) {
      a = uniform(rng, 0, 2) == 0 ? Rational(0) : random_rational(rng, h);
      any = any || a != 0;
    }
    if (any) return WrightAlgebra(m, alphas);
  }
}

/// Random expression in `arity` symbols with up to `terms` terms of degree <= max_degree.
inline SymbolicPoly random_expression(Rng& rng, std::size_t arity, unsigned max_degree,
                                      int terms, long h = 5) {
  const auto monos = graded_monomials(arity, max_degree);
  SymbolicPoly e(arity);
  for (int i = 0; i < terms; ++i) {
    const auto& mono = monos[static_cast<std::size_t>(uniform(rng, 0, long(monos.size()) - 1))];
    e.add_term(mono, random_rational(rng, h));
  }
  return e;
}

// ---- naive oracle arithmetic -------------------------------------------------

using Naive = std::map<std::pair<long, long>, Rational>;

inline Naive naive(const LaurentPoly& p) {
  Naive out;
  for (const auto& [e, c] : p.terms()) out[{e.x, e.y}] = c;
  return out;
}

inline Naive naive_add(const Naive& a, const Naive& b, const Rational& scale = 1) {
  Naive out = a;
  for (const auto& [e, c] : b) {
    out[e] += scale * c;
    if (out[e] == 0) out.erase(e);
  }
  return out;
}

inline Naive naive_mul(const Naive& a, const Naive& b) {
  Naive out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      auto& slot = out[{ea.first + eb.first, ea.second + eb.second}];
      slot += ca * cb;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline Naive naive_pow(const Naive& a, long k) {
  Naive out{{{0, 0}, Rational(1)}};
  for (long i = 0; i < k; ++i) out = naive_mul(out, a);
  return out;
}

/// p(x_image, y_image) for a polynomial p with non-negative exponents and,
/// when p has negative x-exponents, x_inverse standing for 1/x_image.
inline Naive naive_substitute(const Naive& p, const Naive& x_image, const Naive& y_image,
                              const Naive& x_inverse = {}) {
  Naive out;
  for (const auto& [e, c] : p) {
    Naive term{{{0, 0}, c}};
    term = naive_mul(term, e.first >= 0 ? naive_pow(x_image, e.first)
                                        : naive_pow(x_inverse, -e.first));
    term = naive_mul(term, naive_pow(y_image, e.second));
    out = naive_add(out, term);
  }
  return out;
}

inline Naive naive_d(const Naive& p, bool wrt_x) {
  Naive out;
  for (const auto& [e, c] : p) {
    const long k = wrt_x ? e.first : e.second;
    if (k == 0) continue;
    const std::pair<long, long> ne = wrt_x ? std::pair{e.first - 1, e.second}
                                           : std::pair{e.first, e.second - 1};
    out[ne] += c * k;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline Naive naive_jacobian(const Naive& p, const Naive& q) {
  return naive_add(naive_mul(naive_d(p, true), naive_d(q, false)),
                   naive_mul(naive_d(p, false), naive_d(q, true)), -1);
}

inline Rational naive_eval(const Naive& p, const Rational& x, const Rational& y) {
  Rational out = 0;
  for (const auto& [e, c] : p) {
    Rational t = c;
    for (long i = 0; i < std::abs(e.first); ++i) t = e.first > 0 ? Rational(t * x) : Rational(t / x);
    for (long i = 0; i < e.second; ++i) t *= y;
    out += t;
  }
  return out;
}

inline LaurentPoly from_naive(const Naive& n) {
  LaurentPoly p;
  for (const auto& [e, c] : n) p.add_term({e.first, e.second}, c);
  return p;
}

/// Generators written out directly from their defining formula.
inline std::vector<Naive> naive_generators(const WrightAlgebra& w) {
  std::vector<Naive> gens;
  gens.push_back({{{0, 1}, Rational(1)}});
  for (int k = 1; k <= w.m(); ++k) {
    Naive t{{{k, 1}, Rational(1)}};
    for (int i = 1; i < k; ++i) {
      const Rational& a = w.alphas()[static_cast<std::size_t>(i - 1)];
      if (a != 0) t[{k - i, 0}] += a;
    }
    gens.push_back(t);
  }
  return gens;
}

/// Naive evaluation of a symbolic expression at naive values.
inline Naive naive_evaluate(const SymbolicPoly& e, const std::vector<Naive>& values) {
  Naive out;
  for (const auto& [exps, c] : e.terms()) {
    Naive t{{{0, 0}, c}};
    for (std::size_t i = 0; i < exps.size(); ++i) t = naive_mul(t, naive_pow(values[i], exps[i]));
    out = naive_add(out, t);
  }
  return out;
}

}  // namespace wright::testing
