#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include <json.hpp>

namespace wright {

/// Divisor class a*C0 + b*F on the Hirzebruch surface F_n, where
/// C0^2 = -n, F^2 = 0 and C0.F = 1.
struct HirzebruchClass {
  std::int64_t n = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;

  static HirzebruchClass c0(std::int64_t n) { return {n, 1, 0}; }
  static HirzebruchClass fiber(std::int64_t n) { return {n, 0, 1}; }

  friend bool operator==(const HirzebruchClass&, const HirzebruchClass&) = default;
};

/// Throw MismatchedSurface unless both classes live on the same F_n.
HirzebruchClass operator+(const HirzebruchClass& x, const HirzebruchClass& y);
HirzebruchClass operator-(const HirzebruchClass& x, const HirzebruchClass& y);
HirzebruchClass operator*(std::int64_t k, const HirzebruchClass& x);

/// Ample section S of F_n with S^2 = s2; requires s2 >= n + 2 and s2 + n even.
class SectionData {
 public:
  /// Throws InvalidSection.
  SectionData(std::int64_t n, std::int64_t s2);

  static bool is_valid(std::int64_t n, std::int64_t s2) noexcept;

  std::int64_t n() const noexcept { return n_; }
  std::int64_t s2() const noexcept { return s2_; }
  /// (s2 + n) / 2, the F-coefficient of S.
  std::int64_t fiber_coefficient() const noexcept { return (s2_ + n_) / 2; }

  friend bool operator==(const SectionData&, const SectionData&) = default;

 private:
  std::int64_t n_;
  std::int64_t s2_;
};

/// -n*a1*a2 + a1*b2 + a2*b1. Throws MismatchedSurface.
std::int64_t intersect(const HirzebruchClass& c1, const HirzebruchClass& c2);

/// K = -2*C0 - (n+2)*F. Throws InvalidArgument for n < 0.
HirzebruchClass canonical_class(std::int64_t n);

/// S = C0 + (s2 + n)/2 * F.
HirzebruchClass section_class(const SectionData& sd);

/// Image of D in Pic(F_n \ S) = Z^2 / <S>, as a multiple of [F|].
/// Throws MismatchedSurface.
std::int64_t restrict_to_complement(const SectionData& sd, const HirzebruchClass& d);

/// Outcome of solving "K restricted to F_n \ S generates the Picard group".
struct DgIndexReport {
  /// s2 solving s2 - 2 = +1.
  std::int64_t index = 0;
  /// Surfaces F_n (n <= n_max) carrying an ample section with that S^2.
  std::vector<std::int64_t> admissible_n;
  /// s2 solving the sign-flipped s2 - 2 = -1.
  std::int64_t excluded_s2 = 0;
  /// True when excluded_s2 fails ampleness for every n in [0, n_max].
  bool exclusion_holds = false;
  std::int64_t n_max = 0;
  /// Number of Wright generators t0..tm, with m = S^2.
  std::int64_t generator_count = 0;
};

DgIndexReport dg_index_report(std::int64_t n_max = 10);

/// S^2 forced by the generator condition: 3.
std::int64_t dg_index_from_generator_condition();

/// Marker for the pullback of the (trivial) canonical class of A^2.
struct ZeroClass {
  friend bool operator==(const ZeroClass&, const ZeroClass&) = default;
};
using PullbackClass = std::variant<ZeroClass, HirzebruchClass>;

/// K = h^*(K) + R. With the zero pullback the result is R itself.
HirzebruchClass ramification_canonical(const PullbackClass& pullback_k,
                                       const HirzebruchClass& ramification);

void to_json(nlohmann::json& j, const HirzebruchClass& c);
void from_json(const nlohmann::json& j, HirzebruchClass& c);
void to_json(nlohmann::json& j, const SectionData& s);
SectionData section_from_json(const nlohmann::json& j);

}  // namespace wright
