#include "term_parser.hpp"

#include <cctype>

#include "wright/errors.hpp"

namespace wright::detail {

namespace {

class Reader {
 public:
  Reader(std::string s, const AtomReader& read_atom,
         const std::function<bool(std::size_t)>& allow_negative)
      : s_(std::move(s)), read_atom_(read_atom), allow_negative_(allow_negative) {}

  std::vector<ParsedTerm> run() {
    if (s_.empty()) fail("empty polynomial");
    std::vector<ParsedTerm> out;
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = s_[pos_++] == '-';
    out.push_back(term(negative));
    while (pos_ < s_.size()) {
      const char c = s_[pos_];
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      ++pos_;
      out.push_back(term(c == '-'));
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  ParsedTerm term(bool negative) {
    ParsedTerm t{Rational(1), {}};
    bool have_any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num(digits(), 10);
      mpz_class den(1);
      if (peek() == '/') {
        ++pos_;
        den = mpz_class(digits(), 10);
        if (den == 0) fail("zero denominator");
      }
      t.coeff = Rational(num, den);
      t.coeff.canonicalize();
      have_any = true;
    }
    while (pos_ < s_.size() && peek() != '+' && peek() != '-') {
      if (peek() == '*') {
        ++pos_;
        if (pos_ >= s_.size()) fail("dangling '*'");
      }
      auto slot = read_atom_(s_, pos_);
      if (!slot) fail("unknown atom");
      std::int64_t exponent = 1;
      if (peek() == '^') {
        ++pos_;
        bool neg_exp = false;
        if (peek() == '-') {
          neg_exp = true;
          ++pos_;
        }
        const std::string d = digits();
        if (d.size() > 15) fail("exponent too large");
        exponent = std::stoll(d);
        if (neg_exp) {
          if (!allow_negative_(*slot)) fail("negative exponent not allowed here");
          exponent = -exponent;
        }
      }
      t.atoms.push_back({*slot, exponent});
      have_any = true;
    }
    if (!have_any) fail("empty term");
    if (negative) t.coeff = -t.coeff;
    return t;
  }

  std::string s_;
  std::size_t pos_ = 0;
  const AtomReader& read_atom_;
  const std::function<bool(std::size_t)>& allow_negative_;
};

}  // namespace

std::vector<ParsedTerm> parse_terms(std::string_view text, const AtomReader& read_atom,
                                    const std::function<bool(std::size_t)>& allow_negative) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  return Reader(std::move(s), read_atom, allow_negative).run();
}

}  // namespace wright::detail
