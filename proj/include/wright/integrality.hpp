#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wright/laurent_poly.hpp"
#include "wright/symbolic_poly.hpp"

namespace wright {

/// Monic relation h^d + a1(p,q)*h^(d-1) + ... + ad(p,q) = 0 witnessing that
/// h is integral over C[p, q]. The a_i are polynomials in the symbols P, Q.
struct IntegralityCertificate {
  LaurentPoly h;
  LaurentPoly p;
  LaurentPoly q;
  unsigned d = 0;
  std::vector<SymbolicPoly> coefficients;  // a_1 .. a_d
};

/// {"P", "Q"}.
const std::vector<std::string>& pq_symbol_names();

/// h^d + sum a_i(p, q) h^(d-i); zero for a valid certificate.
LaurentPoly certificate_residual(const IntegralityCertificate& cert);

/// Re-expands the relation exactly.
bool verify_certificate(const IntegralityCertificate& cert);

/// Searches d = 1..d_max for a monic relation whose coefficients have total
/// degree <= coeff_degree_max in P, Q. Returns the smallest d; within it,
/// the solution supported on the earliest independent unknowns (a1 before
/// a2, ..., each in graded-lex order). nullopt is inconclusive.
/// Throws InvalidArgument for d_max < 1.
std::optional<IntegralityCertificate> integrality_certificate(const LaurentPoly& h,
                                                              const LaurentPoly& p,
                                                              const LaurentPoly& q,
                                                              unsigned d_max,
                                                              unsigned coeff_degree_max);

}  // namespace wright
