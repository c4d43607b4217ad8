#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "wright/laurent_poly.hpp"
#include "wright/symbolic_poly.hpp"
#include "wright/wright_algebra.hpp"

namespace wright {

/// Bounded space of generator expressions: every polynomial in T0..Tm of
/// total degree <= t_degree_bound whose coefficients come from
/// coefficient_set.
class SearchSpace {
 public:
  /// Throws InvalidArgument when the bound is 0 or coefficient_set is empty,
  /// lacks 0, or repeats a value.
  SearchSpace(WrightAlgebra algebra, unsigned t_degree_bound,
              std::vector<Rational> coefficient_set);

  const WrightAlgebra& algebra() const noexcept { return algebra_; }
  unsigned t_degree_bound() const noexcept { return bound_; }
  const std::vector<Rational>& coefficient_set() const noexcept { return coeffs_; }

  nlohmann::json describe() const;

 private:
  WrightAlgebra algebra_;
  unsigned bound_;
  std::vector<Rational> coeffs_;
};

struct EtaleCandidate {
  GeneratorExpression p_expr;
  GeneratorExpression q_expr;
  LaurentPoly jacobian;
};

struct EtaleCheck {
  LaurentPoly jacobian;
  bool constant_nonzero = false;
};

/// Jacobian determinant of (p, q) and whether it is a nonzero constant.
EtaleCheck etale_pair_check(const LaurentPoly& p, const LaurentPoly& q);

/// True iff p is not regular in both variables, which every member of the
/// index-3 algebra must satisfy. Throws NotAMember when p is not in the
/// algebra.
bool necessary_condition_filter(const CanonicalIndex3Algebra& c, const LaurentPoly& p);

struct SearchOptions {
  unsigned threads = 1;
  /// Work unit: number of consecutive non-constant parts per task.
  std::uint64_t chunk_size = 1U << 14;
  /// Progress file. Resumed from when it exists and describes the same
  /// space; rewritten after every batch of chunks.
  std::optional<std::filesystem::path> checkpoint;
  /// Stop after this many chunks in this run (the report is then partial).
  std::optional<std::uint64_t> max_chunks;
  /// Called in enumeration order as candidates are confirmed.
  std::function<void(const EtaleCandidate&)> on_candidate;
};

struct SearchReport {
  /// Every pair with constant nonzero Jacobian, in enumeration order.
  std::vector<EtaleCandidate> candidates;
  /// Size of the expression space.
  std::uint64_t expression_count = 0;
  /// Expressions enumerated so far (each appears as the first member).
  std::uint64_t members_enumerated = 0;
  /// Whether the regularity screen ran (index-3 algebras only).
  bool filter_applied = false;
  /// Enumerated members that are regular in both variables.
  std::vector<GeneratorExpression> filter_violations;
  bool complete = false;
  bool resumed = false;
  /// True for a nonempty result over an index-3 algebra.
  bool counterexample = false;
};

/// Enumerates ordered pairs (p, q) from the space and returns those whose
/// Jacobian is a nonzero constant. Expressions are indexed in mixed radix
/// over the graded-lex list of T-monomials (the constant monomial is the
/// least significant digit, digits follow coefficient_set order); pairs are
/// ordered by (index of p, index of q). The result does not depend on the
/// thread count.
SearchReport search_etale_pairs(const SearchSpace& space, const SearchOptions& options = {});

/// The same search over arbitrary generator polynomials.
SearchReport search_constant_jacobian_pairs(std::span<const LaurentPoly> generators,
                                            unsigned t_degree_bound,
                                            std::span<const Rational> coefficient_set,
                                            bool screen_regularity,
                                            const SearchOptions& options = {},
                                            const nlohmann::json& description = {});

/// Expression with the given index (see search_etale_pairs).
GeneratorExpression expression_at(std::size_t arity, unsigned t_degree_bound,
                                  std::span<const Rational> coefficient_set,
                                  std::uint64_t index);

nlohmann::json candidate_to_json(const EtaleCandidate& c, std::size_t arity);

}  // namespace wright
