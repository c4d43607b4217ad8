#include "wright/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <utility>

#include "wright/errors.hpp"
#include "wright/grading.hpp"
#include "wright/poly_io.hpp"

namespace wright {

SearchSpace::SearchSpace(WrightAlgebra algebra, unsigned t_degree_bound,
                         std::vector<Rational> coefficient_set)
    : algebra_(std::move(algebra)), bound_(t_degree_bound), coeffs_(std::move(coefficient_set)) {
  if (bound_ < 1) throw InvalidArgument("t-degree bound must be at least 1");
  if (coeffs_.empty()) throw InvalidArgument("coefficient set must not be empty");
  if (std::find(coeffs_.begin(), coeffs_.end(), Rational(0)) == coeffs_.end()) {
    throw InvalidArgument("coefficient set must contain 0");
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = i + 1; j < coeffs_.size(); ++j) {
      if (coeffs_[i] == coeffs_[j]) throw InvalidArgument("coefficient set repeats a value");
    }
  }
}

namespace {

nlohmann::json rationals_to_json(std::span<const Rational> values) {
  auto out = nlohmann::json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

}  // namespace

nlohmann::json SearchSpace::describe() const {
  return {{"m", algebra_.m()},
          {"alphas", rationals_to_json(algebra_.alphas())},
          {"t_degree_bound", bound_},
          {"coefficient_set", rationals_to_json(coeffs_)}};
}

EtaleCheck etale_pair_check(const LaurentPoly& p, const LaurentPoly& q) {
  EtaleCheck out;
  out.jacobian = jacobian_determinant(p, q);
  out.constant_nonzero = out.jacobian.is_constant() && !out.jacobian.is_zero();
  return out;
}

bool necessary_condition_filter(const CanonicalIndex3Algebra& c, const LaurentPoly& p) {
  if (!is_member(c.as_wright(), p)) throw NotAMember("input is not in the index-3 algebra");
  return !is_regular_in_both(p);
}

GeneratorExpression expression_at(std::size_t arity, unsigned t_degree_bound,
                                  std::span<const Rational> coefficient_set,
                                  std::uint64_t index) {
  const auto monos = graded_monomials(arity, t_degree_bound);
  const std::uint64_t s = coefficient_set.size();
  GeneratorExpression expr(arity);
  for (const auto& m : monos) {
    expr.add_term(m, coefficient_set[index % s]);
    index /= s;
  }
  return expr;
}

nlohmann::json candidate_to_json(const EtaleCandidate& c, std::size_t arity) {
  const auto names = t_symbol_names(arity);
  return {{"p", format_symbolic(c.p_expr, names)},
          {"q", format_symbolic(c.q_expr, names)},
          {"jacobian", format_poly(c.jacobian)}};
}

namespace {

using i128 = __int128;

constexpr std::uint64_t kPrime = 2147483647ULL;  // 2^31 - 1
constexpr i128 kIntLimit = static_cast<i128>(1) << 100;

// x mod (2^31 - 1) for x < 2^62.
inline std::uint64_t reduce(std::uint64_t x) {
  x = (x & kPrime) + (x >> 31);
  x = (x & kPrime) + (x >> 31);
  return x >= kPrime ? x - kPrime : x;
}

std::uint64_t invmod(std::uint64_t a) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(kPrime), new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(kPrime) : t);
}

std::uint64_t mpz_mod(const mpz_class& z) {
  mpz_class r = z % static_cast<unsigned long>(kPrime);
  if (r < 0) r += static_cast<unsigned long>(kPrime);
  return r.get_ui();
}

std::uint64_t to_mod(const Rational& q) {
  const std::uint64_t den = mpz_mod(q.get_den());
  if (den == 0) throw InvalidArgument("coefficient denominator divisible by the search modulus");
  return mpz_mod(q.get_num()) * invmod(den) % kPrime;
}

mpz_class common_denominator(const std::vector<Rational>& values) {
  mpz_class l = 1;
  for (const auto& v : values) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  return l;
}

i128 to_i128(const Rational& scaled_integer) {
  const mpz_class& z = scaled_integer.get_num();
  if (scaled_integer.get_den() != 1 || mpz_sizeinbase(z.get_mpz_t(), 2) > 100) {
    throw InvalidArgument("coefficient heights too large for the search engine");
  }
  static_assert(sizeof(mp_limb_t) == 8);
  const mpz_srcptr raw = z.get_mpz_t();
  unsigned __int128 mag = 0;
  for (std::size_t i = mpz_size(raw); i-- > 0;) mag = (mag << 64) | mpz_getlimbn(raw, i);
  const auto r = static_cast<i128>(mag);
  return z < 0 ? -r : r;
}

i128 abs128(i128 v) { return v < 0 ? -v : v; }

std::uint64_t i128_mod(i128 v) {
  const auto p = static_cast<i128>(kPrime);
  i128 r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

struct PairIndex {
  std::uint64_t p;
  std::uint64_t q;
  friend auto operator<=>(const PairIndex&, const PairIndex&) = default;
};

struct ChunkResult {
  std::vector<PairIndex> found;  // non-constant part indices
  std::vector<std::uint64_t> violations;
};

// Enumerates p over the non-constant monomials. For each p the map
// q -> J(p, q) is linear; its non-constant coefficients must vanish. That
// linear system is solved modulo a prime after a fixed random compression of
// its rows, which can only enlarge the solution set, and every surviving q
// is then checked exactly.
class PairEngine {
 public:
  PairEngine(std::span<const LaurentPoly> generators, unsigned bound,
             std::span<const Rational> coeffs, bool screen)
      : gens_(generators.begin(), generators.end()),
        coeffs_(coeffs.begin(), coeffs.end()),
        screen_(screen) {
    monos_ = graded_monomials(gens_.size(), bound, 1);
    values_ = evaluate_monomials(monos_, gens_);
    k_ = monos_.size();
    s_ = coeffs_.size();
    total_ = 1;
    for (std::size_t i = 0; i < k_; ++i) {
      if (total_ > std::numeric_limits<std::uint64_t>::max() / s_ / s_) {
        throw InvalidArgument("search space too large to index");
      }
      total_ *= s_;
    }
    setup_coefficients();
    setup_jacobians();
    setup_polys();
  }

  std::uint64_t nonconstant_count() const noexcept { return total_; }
  std::size_t arity() const noexcept { return gens_.size(); }

  ChunkResult run_chunk(std::uint64_t begin, std::uint64_t end) const;

  GeneratorExpression expression(std::uint64_t u, std::size_t constant_digit) const {
    GeneratorExpression expr(gens_.size());
    expr.add_term(SymbolExponents(gens_.size(), 0), coeffs_[constant_digit]);
    for (std::size_t k = 0; k < k_; ++k) {
      expr.add_term(monos_[k], coeffs_[u % s_]);
      u /= s_;
    }
    return expr;
  }

  LaurentPoly value_of(std::uint64_t u) const {
    LaurentPoly p;
    for (std::size_t k = 0; k < k_; ++k) {
      p += values_[k].scaled(coeffs_[u % s_]);
      u /= s_;
    }
    return p;
  }

 private:
  void setup_coefficients() {
    s_mod_.resize(s_);
    const mpz_class den = common_denominator(coeffs_);
    for (std::size_t j = 0; j < s_; ++j) {
      s_mod_[j] = to_mod(coeffs_[j]);
      s_int_.push_back(to_i128(coeffs_[j] * den));
      residue_digits_[s_mod_[j]].push_back(static_cast<std::uint32_t>(j));
      max_s_ = std::max(max_s_, abs128(s_int_.back()));
    }
  }

  void setup_jacobians() {
    std::map<Exponent, std::size_t> rows;
    std::vector<LaurentPoly> jac(k_ * k_);
    std::vector<Rational> consts;
    for (std::size_t a = 0; a < k_; ++a) {
      for (std::size_t b = a + 1; b < k_; ++b) {
        jac[a * k_ + b] = jacobian_determinant(values_[a], values_[b]);
        jac[b * k_ + a] = -jac[a * k_ + b];
        for (const auto& [e, c] : jac[a * k_ + b].terms()) {
          if (e != Exponent{0, 0}) rows.try_emplace(e, rows.size());
        }
      }
    }
    for (const auto& j : jac) consts.push_back(j.coefficient({0, 0}));
    const mpz_class den = common_denominator(consts);
    const_int_.resize(k_ * k_);
    i128 max_c = 0;
    for (std::size_t i = 0; i < k_ * k_; ++i) {
      const_int_[i] = to_i128(consts[i] * den);
      max_c = std::max(max_c, abs128(const_int_[i]));
    }
    if (max_c > 0 && max_s_ > 0 &&
        (max_s_ * max_s_ > kIntLimit / max_c / static_cast<i128>(k_ * k_ + 1))) {
      throw InvalidArgument("coefficient heights too large for the search engine");
    }
    reject_by_constant_row_ =
        max_c == 0 || max_s_ * max_s_ * max_c * static_cast<i128>(k_ * k_) < static_cast<i128>(kPrime);

    // Compress the rows with a fixed random projection.
    const std::size_t full_rows = rows.size();
    r_ = std::min(full_rows, k_ + 1);
    std::vector<std::uint64_t> proj(r_ * full_rows, 0);
    if (r_ == full_rows) {
      for (std::size_t i = 0; i < r_; ++i) proj[i * full_rows + i] = 1;
    } else {
      std::mt19937_64 rng(0x5eedULL);
      for (auto& v : proj) v = rng() % kPrime;
    }
    slab_.assign(k_ * r_ * k_, 0);
    for (std::size_t a = 0; a < k_; ++a) {
      for (std::size_t b = 0; b < k_; ++b) {
        for (const auto& [e, c] : jac[a * k_ + b].terms()) {
          if (e == Exponent{0, 0}) continue;
          const std::uint64_t cm = to_mod(c);
          const std::size_t col = rows.at(e);
          for (std::size_t i = 0; i < r_; ++i) {
            auto& cell = slab_[a * r_ * k_ + i * k_ + b];
            cell = (cell + proj[i * full_rows + col] * cm) % kPrime;
          }
        }
      }
    }
  }

  void setup_polys() {
    std::map<Exponent, std::size_t> index;
    std::vector<Rational> all;
    for (const auto& v : values_) {
      for (const auto& [e, c] : v.terms()) {
        index.try_emplace(e, 0);
        all.push_back(c);
      }
    }
    std::size_t i = 0;
    for (auto& [e, idx] : index) {
      idx = i++;
      poly_exps_.push_back(e);
    }
    const mpz_class den = common_denominator(all);
    i128 max_v = 0;
    poly_terms_.resize(k_);
    for (std::size_t k = 0; k < k_; ++k) {
      for (const auto& [e, c] : values_[k].terms()) {
        poly_terms_[k].emplace_back(index.at(e), to_i128(c * den));
        max_v = std::max(max_v, abs128(poly_terms_[k].back().second));
      }
    }
    if (max_v > 0 && max_s_ > 0 &&
        max_s_ > kIntLimit / max_v / static_cast<i128>(k_ + 1)) {
      throw InvalidArgument("coefficient heights too large for the search engine");
    }
    // Monomials by total degree, highest first, for the regularity screen.
    by_degree_.resize(poly_exps_.size());
    for (std::size_t j = 0; j < by_degree_.size(); ++j) by_degree_[j] = j;
    std::stable_sort(by_degree_.begin(), by_degree_.end(), [&](std::size_t a, std::size_t b) {
      return poly_exps_[a].x + poly_exps_[a].y > poly_exps_[b].x + poly_exps_[b].y;
    });
    for (std::size_t j = 0; j < poly_exps_.size(); ++j) exp_index_[poly_exps_[j]] = j;
  }

  struct State {
    std::vector<std::uint32_t> digits;
    std::vector<std::uint64_t> m;      // r x k, row-major
    std::vector<i128> const_row;       // sum_k s[a_k] * const(k, l)
    std::vector<i128> poly;            // scaled coefficients of p
  };

  void apply_digit(State& st, std::size_t k, std::uint32_t from, std::uint32_t to) const {
    const std::uint64_t dm = (s_mod_[to] + kPrime - s_mod_[from]) % kPrime;
    const std::uint64_t* slab = &slab_[k * r_ * k_];
    for (std::size_t i = 0; i < r_ * k_; ++i) st.m[i] = reduce(st.m[i] + dm * slab[i]);
    const i128 di = s_int_[to] - s_int_[from];
    for (std::size_t l = 0; l < k_; ++l) st.const_row[l] += di * const_int_[k * k_ + l];
    for (const auto& [idx, v] : poly_terms_[k]) st.poly[idx] += di * v;
  }

  // True iff p (scaled) is regular in both variables with degree >= 1.
  bool regular_in_both(const State& st) const {
    for (std::size_t j : by_degree_) {
      if (st.poly[j] == 0) continue;
      const std::int64_t n = poly_exps_[j].x + poly_exps_[j].y;
      if (n < 1) return false;
      const auto ix = exp_index_.find({n, 0});
      const auto iy = exp_index_.find({0, n});
      return ix != exp_index_.end() && iy != exp_index_.end() && st.poly[ix->second] != 0 &&
             st.poly[iy->second] != 0;
    }
    return false;
  }

  bool is_constant(const State& st) const {
    for (std::size_t j = 0; j < poly_exps_.size(); ++j) {
      if (st.poly[j] != 0 && poly_exps_[j] != Exponent{0, 0}) return false;
    }
    return true;
  }

  bool exact_pair(std::uint64_t up, const std::vector<std::uint32_t>& q_digits) const {
    LaurentPoly q;
    for (std::size_t k = 0; k < k_; ++k) q += values_[k].scaled(coeffs_[q_digits[k]]);
    return etale_pair_check(value_of(up), q).constant_nonzero;
  }

  void process(std::uint64_t u, const State& st, ChunkResult& out,
               std::vector<std::uint64_t>& work) const;

  std::vector<LaurentPoly> gens_;
  std::vector<Rational> coeffs_;
  bool screen_;
  bool reject_by_constant_row_ = false;
  std::vector<SymbolExponents> monos_;
  std::vector<LaurentPoly> values_;
  std::size_t k_ = 0;
  std::size_t s_ = 0;
  std::size_t r_ = 0;
  std::uint64_t total_ = 0;
  std::vector<std::uint64_t> s_mod_;
  std::vector<i128> s_int_;
  i128 max_s_ = 0;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> residue_digits_;
  std::vector<std::uint64_t> slab_;
  std::vector<i128> const_int_;
  std::vector<Exponent> poly_exps_;
  std::vector<std::vector<std::pair<std::size_t, i128>>> poly_terms_;
  std::vector<std::size_t> by_degree_;
  std::map<Exponent, std::size_t> exp_index_;
};

void PairEngine::process(std::uint64_t u, const State& st, ChunkResult& out,
                         std::vector<std::uint64_t>& w) const {
  if (screen_ && regular_in_both(st)) out.violations.push_back(u);
  if (is_constant(st)) return;

  // Row-reduce the r x k system modulo the prime.
  w = st.m;
  std::vector<std::size_t> pivot_cols;
  std::vector<bool> is_pivot(k_, false);
  std::size_t row = 0;
  for (std::size_t col = 0; col < k_ && row < r_; ++col) {
    std::size_t sel = row;
    while (sel < r_ && w[sel * k_ + col] == 0) ++sel;
    if (sel == r_) continue;
    if (sel != row) {
      for (std::size_t j = 0; j < k_; ++j) std::swap(w[sel * k_ + j], w[row * k_ + j]);
    }
    const std::uint64_t inv = invmod(w[row * k_ + col]);
    for (std::size_t j = 0; j < k_; ++j) w[row * k_ + j] = reduce(w[row * k_ + j] * inv);
    for (std::size_t i = 0; i < r_; ++i) {
      if (i == row || w[i * k_ + col] == 0) continue;
      const std::uint64_t f = kPrime - w[i * k_ + col];
      for (std::size_t j = col; j < k_; ++j) {
        w[i * k_ + j] = reduce(w[i * k_ + j] + f * w[row * k_ + j]);
      }
    }
    pivot_cols.push_back(col);
    is_pivot[col] = true;
    ++row;
  }
  if (reject_by_constant_row_) {
    // With every reachable constant term below the modulus in absolute
    // value, a q with J(p, q) constant nonzero would satisfy the reduced
    // system while pairing nonzero with the constant row. That is impossible
    // once the constant row lies in the row space.
    std::vector<std::uint64_t> c(k_);
    for (std::size_t l = 0; l < k_; ++l) c[l] = i128_mod(st.const_row[l]);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      const std::uint64_t f = c[pivot_cols[i]];
      if (f == 0) continue;
      const std::uint64_t nf = kPrime - f;
      for (std::size_t j = 0; j < k_; ++j) c[j] = reduce(c[j] + nf * w[i * k_ + j]);
    }
    if (std::all_of(c.begin(), c.end(), [](std::uint64_t v) { return v == 0; })) return;
  }

  std::vector<std::size_t> free_cols;
  for (std::size_t col = 0; col < k_; ++col) {
    if (!is_pivot[col]) free_cols.push_back(col);
  }

  std::vector<std::uint32_t> q(k_, 0);
  // Pivot variables are determined by the free ones; a residue may match
  // several coefficient values, so branch over them.
  auto assign_pivots = [&](auto&& self, std::size_t pi) -> void {
    if (pi == pivot_cols.size()) {
      i128 c = 0;
      for (std::size_t l = 0; l < k_; ++l) c += s_int_[q[l]] * st.const_row[l];
      if (c == 0) return;
      if (exact_pair(u, q)) {
        std::uint64_t uq = 0;
        for (std::size_t k = k_; k-- > 0;) uq = uq * s_ + q[k];
        out.found.push_back({u, uq});
      }
      return;
    }
    std::uint64_t acc = 0;
    for (std::size_t fc : free_cols) acc = (acc + w[pi * k_ + fc] * s_mod_[q[fc]]) % kPrime;
    const std::uint64_t need = (kPrime - acc) % kPrime;
    auto it = residue_digits_.find(need);
    if (it == residue_digits_.end()) return;
    for (std::uint32_t d : it->second) {
      q[pivot_cols[pi]] = d;
      self(self, pi + 1);
    }
    q[pivot_cols[pi]] = 0;
  };

  // Odometer over the free variables.
  while (true) {
    assign_pivots(assign_pivots, 0);
    std::size_t i = 0;
    for (; i < free_cols.size(); ++i) {
      auto& d = q[free_cols[i]];
      d = static_cast<std::uint32_t>((d + 1) % s_);
      if (d != 0) break;
    }
    if (i == free_cols.size()) break;
  }
}

ChunkResult PairEngine::run_chunk(std::uint64_t begin, std::uint64_t end) const {
  ChunkResult out;
  State st;
  st.digits.assign(k_, 0);
  st.m.assign(r_ * k_, 0);
  st.const_row.assign(k_, 0);
  st.poly.assign(poly_exps_.size(), 0);
  std::uint64_t rest = begin;
  for (std::size_t k = 0; k < k_; ++k) {
    const auto d = static_cast<std::uint32_t>(rest % s_);
    rest /= s_;
    st.digits[k] = d;
    const std::uint64_t dm = s_mod_[d];
    const std::uint64_t* slab = &slab_[k * r_ * k_];
    for (std::size_t i = 0; i < r_ * k_; ++i) st.m[i] = (st.m[i] + dm * slab[i]) % kPrime;
    for (std::size_t l = 0; l < k_; ++l) st.const_row[l] += s_int_[d] * const_int_[k * k_ + l];
    for (const auto& [idx, v] : poly_terms_[k]) st.poly[idx] += s_int_[d] * v;
  }
  std::vector<std::uint64_t> work;
  for (std::uint64_t u = begin; u < end; ++u) {
    process(u, st, out, work);
    for (std::size_t k = 0; k < k_; ++k) {
      const std::uint32_t from = st.digits[k];
      const auto to = static_cast<std::uint32_t>((from + 1) % s_);
      st.digits[k] = to;
      apply_digit(st, k, from, to);
      if (to != 0) break;
    }
  }
  return out;
}

constexpr const char* kCheckpointFormat = "wright-search-checkpoint/1";

struct Progress {
  std::uint64_t cursor = 0;
  std::vector<PairIndex> found;
  std::vector<std::uint64_t> violations;
};

void write_checkpoint(const std::filesystem::path& path, const nlohmann::json& space,
                      std::uint64_t total, const Progress& pr) {
  nlohmann::json j;
  j["format"] = kCheckpointFormat;
  j["space"] = space;
  j["total"] = total;
  j["cursor"] = pr.cursor;
  j["found"] = nlohmann::json::array();
  for (const auto& f : pr.found) j["found"].push_back({f.p, f.q});
  j["filter_violations"] = pr.violations;
  const auto tmp = std::filesystem::path(path.string() + ".tmp");
  {
    std::ofstream out(tmp);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
    out << j.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

std::optional<Progress> read_checkpoint(const std::filesystem::path& path,
                                        const nlohmann::json& space, std::uint64_t total) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed checkpoint " + path.string() + ": " + e.what());
  }
  if (j.value("format", "") != kCheckpointFormat) {
    throw ParseError("unrecognized checkpoint format in " + path.string());
  }
  if (j.at("space") != space || j.at("total").get<std::uint64_t>() != total) {
    throw InvalidArgument("checkpoint " + path.string() + " describes a different search");
  }
  Progress pr;
  pr.cursor = j.at("cursor").get<std::uint64_t>();
  for (const auto& f : j.at("found")) {
    pr.found.push_back({f.at(0).get<std::uint64_t>(), f.at(1).get<std::uint64_t>()});
  }
  pr.violations = j.at("filter_violations").get<std::vector<std::uint64_t>>();
  return pr;
}

}  // namespace

SearchReport search_constant_jacobian_pairs(std::span<const LaurentPoly> generators,
                                            unsigned t_degree_bound,
                                            std::span<const Rational> coefficient_set,
                                            bool screen_regularity,
                                            const SearchOptions& options,
                                            const nlohmann::json& description) {
  if (t_degree_bound < 1) throw InvalidArgument("t-degree bound must be at least 1");
  if (coefficient_set.empty()) throw InvalidArgument("coefficient set must not be empty");
  if (options.chunk_size == 0) throw InvalidArgument("chunk size must be positive");
  const PairEngine engine(generators, t_degree_bound, coefficient_set, screen_regularity);
  const std::uint64_t s = coefficient_set.size();
  const std::uint64_t total = engine.nonconstant_count();

  nlohmann::json space = description;
  space["generators"] = nlohmann::json::array();
  for (const auto& g : generators) space["generators"].push_back(format_poly(g));
  space["t_degree_bound"] = t_degree_bound;
  space["coefficient_set"] = rationals_to_json(coefficient_set);

  SearchReport report;
  report.expression_count = total * s;
  report.filter_applied = screen_regularity;

  Progress progress;
  if (options.checkpoint) {
    if (auto pr = read_checkpoint(*options.checkpoint, space, total)) {
      progress = std::move(*pr);
      report.resumed = true;
    }
  }

  // Expands one found (p, q) pair of non-constant parts over all constant
  // terms, in global order.
  auto emit_for_p = [&](std::uint64_t up, std::span<const PairIndex> pairs) {
    for (std::size_t cp = 0; cp < s; ++cp) {
      for (const auto& pi : pairs) {
        for (std::size_t cq = 0; cq < s; ++cq) {
          EtaleCandidate c{engine.expression(up, cp), engine.expression(pi.q, cq), {}};
          c.jacobian = etale_pair_check(evaluate(c.p_expr, generators),
                                        evaluate(c.q_expr, generators))
                           .jacobian;
          if (options.on_candidate) options.on_candidate(c);
          report.candidates.push_back(std::move(c));
        }
      }
    }
  };
  auto emit_all = [&](std::span<const PairIndex> found) {
    std::size_t i = 0;
    while (i < found.size()) {
      std::size_t j = i;
      while (j < found.size() && found[j].p == found[i].p) ++j;
      emit_for_p(found[i].p, found.subspan(i, j - i));
      i = j;
    }
  };
  emit_all(progress.found);

  const unsigned threads = std::max(1U, options.threads);
  const std::uint64_t chunk = options.chunk_size;
  std::uint64_t chunks_left = options.max_chunks.value_or(std::numeric_limits<std::uint64_t>::max());
  while (progress.cursor < total && chunks_left > 0) {
    const std::uint64_t batch = std::min<std::uint64_t>(threads * 4ULL, chunks_left);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    for (std::uint64_t b = 0; b < batch; ++b) {
      const std::uint64_t lo = progress.cursor + b * chunk;
      if (lo >= total) break;
      ranges.emplace_back(lo, std::min(total, lo + chunk));
    }
    std::vector<ChunkResult> results(ranges.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < ranges.size(); i = next++) {
        results[i] = engine.run_chunk(ranges[i].first, ranges[i].second);
      }
    };
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < ranges.size(); ++i) {
      auto& r = results[i];
      std::sort(r.found.begin(), r.found.end());
      emit_all(r.found);
      progress.found.insert(progress.found.end(), r.found.begin(), r.found.end());
      progress.violations.insert(progress.violations.end(), r.violations.begin(),
                                 r.violations.end());
      progress.cursor = ranges[i].second;
    }
    chunks_left -= ranges.size();
    if (options.checkpoint) write_checkpoint(*options.checkpoint, space, total, progress);
  }

  report.members_enumerated = progress.cursor * s;
  for (std::uint64_t u : progress.violations) {
    report.filter_violations.push_back(engine.expression(u, 0));
  }
  report.complete = progress.cursor >= total;
  return report;
}

SearchReport search_etale_pairs(const SearchSpace& space, const SearchOptions& options) {
  const auto gens = generators(space.algebra());
  const bool canonical = space.algebra().is_canonical_index3();
  SearchReport report = search_constant_jacobian_pairs(
      gens, space.t_degree_bound(), space.coefficient_set(), canonical, options,
      {{"m", space.algebra().m()}, {"alphas", rationals_to_json(space.algebra().alphas())}});
  report.counterexample = canonical && !report.candidates.empty();
  return report;
}

}  // namespace wright
