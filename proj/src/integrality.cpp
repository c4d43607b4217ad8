#include "wright/integrality.hpp"

#include <stdexcept>

#include "wright/errors.hpp"
#include "wright/exact_span.hpp"

namespace wright {

const std::vector<std::string>& pq_symbol_names() {
  static const std::vector<std::string> names{"P", "Q"};
  return names;
}

LaurentPoly certificate_residual(const IntegralityCertificate& cert) {
  const std::vector<LaurentPoly> pq{cert.p, cert.q};
  LaurentPoly sum = pow(cert.h, cert.d);
  for (unsigned i = 1; i <= cert.d; ++i) {
    sum += evaluate(cert.coefficients.at(i - 1), pq) * pow(cert.h, cert.d - i);
  }
  return sum;
}

bool verify_certificate(const IntegralityCertificate& cert) {
  return cert.coefficients.size() == cert.d && certificate_residual(cert).is_zero();
}

std::optional<IntegralityCertificate> integrality_certificate(const LaurentPoly& h,
                                                              const LaurentPoly& p,
                                                              const LaurentPoly& q,
                                                              unsigned d_max,
                                                              unsigned coeff_degree_max) {
  if (d_max < 1) throw InvalidArgument("d_max must be at least 1");
  const std::vector<LaurentPoly> pq{p, q};
  const auto monos = graded_monomials(2, coeff_degree_max);
  const auto mono_values = evaluate_monomials(monos, pq);

  std::vector<LaurentPoly> h_powers{LaurentPoly(1)};
  for (unsigned d = 1; d <= d_max; ++d) {
    h_powers.push_back(h_powers.back() * h);
    // Unknown (i, k): coefficient of monomial k in a_i, column m_k(p,q) * h^(d-i).
    ExactSpan span;
    for (unsigned i = 1; i <= d; ++i) {
      for (const auto& mv : mono_values) span.add(mv * h_powers[d - i]);
    }
    const auto combo = span.express(-h_powers[d]);
    if (!combo) continue;

    IntegralityCertificate cert{h, p, q, d, std::vector<SymbolicPoly>(d, SymbolicPoly(2))};
    for (const auto& [col, c] : *combo) {
      cert.coefficients[col / monos.size()].add_term(monos[col % monos.size()], c);
    }
    if (!verify_certificate(cert)) {
      throw std::logic_error("integrality certificate failed re-verification");
    }
    return cert;
  }
  return std::nullopt;
}

}  // namespace wright
