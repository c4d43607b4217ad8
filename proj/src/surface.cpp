#include "wright/surface.hpp"

#include <string>

#include "wright/errors.hpp"

namespace wright {

namespace {

void require_same_surface(const HirzebruchClass& x, const HirzebruchClass& y) {
  if (x.n != y.n) {
    throw MismatchedSurface("classes live on F_" + std::to_string(x.n) + " and F_" +
                            std::to_string(y.n));
  }
}

}  // namespace

HirzebruchClass operator+(const HirzebruchClass& x, const HirzebruchClass& y) {
  require_same_surface(x, y);
  return {x.n, x.a + y.a, x.b + y.b};
}

HirzebruchClass operator-(const HirzebruchClass& x, const HirzebruchClass& y) {
  require_same_surface(x, y);
  return {x.n, x.a - y.a, x.b - y.b};
}

HirzebruchClass operator*(std::int64_t k, const HirzebruchClass& x) {
  return {x.n, k * x.a, k * x.b};
}

bool SectionData::is_valid(std::int64_t n, std::int64_t s2) noexcept {
  return n >= 0 && s2 >= n + 2 && (s2 + n) % 2 == 0;
}

SectionData::SectionData(std::int64_t n, std::int64_t s2) : n_(n), s2_(s2) {
  if (n < 0) throw InvalidSection("n must be nonnegative");
  if (s2 < n + 2) {
    throw InvalidSection("S^2 = " + std::to_string(s2) + " violates ampleness S^2 >= n + 2");
  }
  if ((s2 + n) % 2 != 0) throw InvalidSection("S^2 + n must be even");
}

std::int64_t intersect(const HirzebruchClass& c1, const HirzebruchClass& c2) {
  require_same_surface(c1, c2);
  return -c1.n * c1.a * c2.a + c1.a * c2.b + c2.a * c1.b;
}

HirzebruchClass canonical_class(std::int64_t n) {
  if (n < 0) throw InvalidArgument("n must be nonnegative");
  return {n, -2, -(n + 2)};
}

HirzebruchClass section_class(const SectionData& sd) {
  return {sd.n(), 1, sd.fiber_coefficient()};
}

std::int64_t restrict_to_complement(const SectionData& sd, const HirzebruchClass& d) {
  if (d.n != sd.n()) {
    throw MismatchedSurface("class lives on F_" + std::to_string(d.n) + ", section on F_" +
                            std::to_string(sd.n()));
  }
  // C0 = S - ((s2+n)/2) F, so a*C0 + b*F restricts to (b - a*(s2+n)/2) F|.
  return d.b - d.a * sd.fiber_coefficient();
}

DgIndexReport dg_index_report(std::int64_t n_max) {
  DgIndexReport r;
  r.n_max = n_max;
  // K restricts to (S^2 - 2) F|, and it must be the generator F| itself.
  r.index = 1 + 2;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    if (SectionData::is_valid(n, r.index)) r.admissible_n.push_back(n);
  }
  if (r.admissible_n.empty()) r.index = 0;
  r.excluded_s2 = -1 + 2;
  r.exclusion_holds = true;
  for (std::int64_t n = 0; n <= n_max; ++n) {
    if (r.excluded_s2 >= n + 2) r.exclusion_holds = false;
  }
  r.generator_count = r.index + 1;
  return r;
}

std::int64_t dg_index_from_generator_condition() { return dg_index_report().index; }

HirzebruchClass ramification_canonical(const PullbackClass& pullback_k,
                                       const HirzebruchClass& ramification) {
  if (std::holds_alternative<ZeroClass>(pullback_k)) return ramification;
  return std::get<HirzebruchClass>(pullback_k) + ramification;
}

void to_json(nlohmann::json& j, const HirzebruchClass& c) {
  j = nlohmann::json{{"n", c.n}, {"a", c.a}, {"b", c.b}};
}

void from_json(const nlohmann::json& j, HirzebruchClass& c) {
  c.n = j.at("n").get<std::int64_t>();
  c.a = j.at("a").get<std::int64_t>();
  c.b = j.at("b").get<std::int64_t>();
}

void to_json(nlohmann::json& j, const SectionData& s) {
  j = nlohmann::json{{"n", s.n()}, {"s2", s.s2()}};
}

SectionData section_from_json(const nlohmann::json& j) {
  return SectionData(j.at("n").get<std::int64_t>(), j.at("s2").get<std::int64_t>());
}

}  // namespace wright
