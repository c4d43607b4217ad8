#include "wright/symbolic_poly.hpp"

#include <algorithm>
#include <numeric>

#include "term_parser.hpp"
#include "wright/errors.hpp"

namespace wright {

SymbolicPoly SymbolicPoly::monomial(std::size_t arity, SymbolExponents exps,
                                    const Rational& c) {
  SymbolicPoly p(arity);
  p.add_term(exps, c);
  return p;
}

int SymbolicPoly::total_degree() const noexcept {
  int best = -1;
  for (const auto& [e, c] : terms_) best = std::max(best, static_cast<int>(degree_of(e)));
  return best;
}

Rational SymbolicPoly::coefficient(const SymbolExponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SymbolicPoly::add_term(const SymbolExponents& e, const Rational& c) {
  if (e.size() != arity_) throw InvalidArgument("exponent tuple has the wrong arity");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

unsigned degree_of(const SymbolExponents& e) {
  return std::accumulate(e.begin(), e.end(), 0U);
}

bool graded_lex_before(const SymbolExponents& a, const SymbolExponents& b) {
  const unsigned da = degree_of(a);
  const unsigned db = degree_of(b);
  if (da != db) return da < db;
  return a > b;
}

namespace {

void fill_degree(std::size_t index, unsigned remaining, SymbolExponents& cur,
                 std::vector<SymbolExponents>& out) {
  if (index + 1 == cur.size()) {
    cur[index] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned k = remaining + 1; k-- > 0;) {
    cur[index] = k;
    fill_degree(index + 1, remaining - k, cur, out);
  }
  cur[index] = 0;
}

}  // namespace

std::vector<SymbolExponents> graded_monomials(std::size_t arity, unsigned max_degree,
                                              unsigned min_degree) {
  std::vector<SymbolExponents> out;
  if (arity == 0) {
    if (min_degree == 0) out.emplace_back();
    return out;
  }
  SymbolExponents cur(arity, 0);
  for (unsigned d = min_degree; d <= max_degree; ++d) fill_degree(0, d, cur, out);
  return out;
}

std::vector<LaurentPoly> evaluate_monomials(std::span<const SymbolExponents> monomials,
                                            std::span<const LaurentPoly> values) {
  std::map<SymbolExponents, LaurentPoly> cache;
  auto value_of = [&](auto&& self, const SymbolExponents& e) -> const LaurentPoly& {
    if (auto it = cache.find(e); it != cache.end()) return it->second;
    if (e.size() != values.size()) throw InvalidArgument("monomial arity mismatch");
    const auto nz = std::find_if(e.begin(), e.end(), [](unsigned k) { return k != 0; });
    LaurentPoly v(1);
    if (nz != e.end()) {
      SymbolExponents lower = e;
      const auto i = static_cast<std::size_t>(nz - e.begin());
      --lower[i];
      v = self(self, lower) * values[i];
    }
    return cache.emplace(e, std::move(v)).first->second;
  };
  std::vector<LaurentPoly> out;
  out.reserve(monomials.size());
  for (const auto& m : monomials) out.push_back(value_of(value_of, m));
  return out;
}

LaurentPoly evaluate(const SymbolicPoly& expr, std::span<const LaurentPoly> values) {
  if (expr.arity() != values.size()) throw InvalidArgument("expression arity mismatch");
  std::vector<SymbolExponents> monos;
  for (const auto& [e, c] : expr.terms()) monos.push_back(e);
  const auto vals = evaluate_monomials(monos, values);
  LaurentPoly out;
  std::size_t i = 0;
  for (const auto& [e, c] : expr.terms()) out += vals[i++].scaled(c);
  return out;
}

std::vector<std::string> t_symbol_names(std::size_t count) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back("T" + std::to_string(i));
  return names;
}

std::string format_symbolic(const SymbolicPoly& expr, const std::vector<std::string>& names) {
  if (expr.is_zero()) return "0";
  std::vector<std::pair<SymbolExponents, Rational>> terms(expr.terms().begin(),
                                                          expr.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return graded_lex_before(a.first, b.first); });
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms) {
    const bool negative = c < 0;
    const Rational mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += to_string(mag) + "*" + mono;
    }
  }
  return out;
}

SymbolicPoly parse_symbolic(std::string_view text, const std::vector<std::string>& names) {
  // Longest name first so that T10 wins over T1.
  std::vector<std::size_t> order(names.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return names[a].size() > names[b].size(); });
  const detail::AtomReader reader = [&](std::string_view s,
                                        std::size_t& pos) -> std::optional<std::size_t> {
    for (std::size_t i : order) {
      if (s.substr(pos, names[i].size()) == names[i]) {
        pos += names[i].size();
        return i;
      }
    }
    return std::nullopt;
  };
  const auto terms = detail::parse_terms(text, reader, [](std::size_t) { return false; });
  SymbolicPoly out(names.size());
  for (const auto& t : terms) {
    SymbolExponents e(names.size(), 0);
    for (const auto& a : t.atoms) e[a.slot] += static_cast<std::uint32_t>(a.exponent);
    out.add_term(e, t.coeff);
  }
  return out;
}

}  // namespace wright
