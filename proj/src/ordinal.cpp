#include "ordcopies/ordinal.hpp"

#include <cctype>
#include <utility>

#include "ordcopies/error.hpp"

namespace ordcopies {

namespace {

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw RepresentationLimit("ordinal coefficient overflow");
  return out;
}

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw RepresentationLimit("ordinal coefficient overflow");
  return out;
}

void check_size(std::size_t n) {
  if (n > kMaxOrdinalTerms)
    throw RepresentationLimit("ordinal exceeds " +
                              std::to_string(kMaxOrdinalTerms) + " CNF terms");
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ordinal parse_all() {
    Ordinal result = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  Ordinal parse_sum() {
    std::vector<OrdinalTerm> terms;
    bool saw_zero = false;
    for (;;) {
      skip_ws();
      std::size_t start = pos_;
      OrdinalTerm t = parse_term();
      if (t.coeff == 0) {
        if (!terms.empty() || saw_zero) fail_at(start, "0 may only appear alone");
        saw_zero = true;
      } else {
        if (saw_zero) fail_at(start, "0 may only appear alone");
        if (!terms.empty() && !(t.exponent < terms.back().exponent))
          fail_at(start, "non-canonical form: exponents must strictly decrease");
        terms.push_back(std::move(t));
      }
      skip_ws();
      if (peek() != '+') break;
      ++pos_;
    }
    return Ordinal::from_terms(std::move(terms));
  }

  // coeff == 0 encodes the literal "0".
  OrdinalTerm parse_term() {
    skip_ws();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return OrdinalTerm{Ordinal{}, parse_natural()};
    }
    if (c != 'w') fail("expected 'w' or a natural number");
    ++pos_;
    Ordinal exponent = Ordinal::natural(1);
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (peek() == '(') {
        ++pos_;
        exponent = parse_sum();
        skip_ws();
        if (peek() != ')') fail("expected ')'");
        ++pos_;
      } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
        exponent = Ordinal::natural(parse_natural());
      } else {
        fail("expected '(' or digits after '^'");
      }
    }
    std::uint64_t coeff = 1;
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      coeff = parse_natural();
      if (coeff == 0) fail_at(start, "coefficient must be positive");
    }
    return OrdinalTerm{std::move(exponent), coeff};
  }

  std::uint64_t parse_natural() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::uint64_t d = static_cast<std::uint64_t>(text_[pos_] - '0');
      std::uint64_t next;
      if (__builtin_mul_overflow(v, 10u, &next) || __builtin_add_overflow(next, d, &next))
        fail("natural number too large");
      v = next;
      ++pos_;
    }
    return v;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const { fail_at(pos_, what); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& what) const {
    throw ParseError("ordinal parse error at column " + std::to_string(at + 1) +
                     ": " + what + " in \"" + std::string(text_) + "\"");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Ordinal::Ordinal(std::vector<OrdinalTerm> terms) : terms_(std::move(terms)) {}

Ordinal Ordinal::natural(std::uint64_t n) {
  if (n == 0) return Ordinal{};
  return Ordinal(std::vector<OrdinalTerm>{OrdinalTerm{Ordinal{}, n}});
}

Ordinal Ordinal::omega() { return omega_pow(natural(1)); }

Ordinal Ordinal::omega_pow(Ordinal exponent, std::uint64_t coeff) {
  if (coeff == 0) return Ordinal{};
  return Ordinal(std::vector<OrdinalTerm>{OrdinalTerm{std::move(exponent), coeff}});
}

Ordinal Ordinal::from_terms(std::vector<OrdinalTerm> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff == 0) throw DomainError("CNF coefficient must be positive");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
      throw DomainError("CNF exponents must strictly decrease");
  }
  return Ordinal(std::move(terms));
}

Ordinal Ordinal::parse(std::string_view text) { return Parser(text).parse_all(); }

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

bool Ordinal::is_successor() const {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

bool Ordinal::is_limit() const { return !terms_.empty() && !is_successor(); }

std::optional<std::uint64_t> Ordinal::as_natural() const {
  if (!is_finite()) return std::nullopt;
  return finite_part();
}

std::uint64_t Ordinal::finite_part() const { return is_successor() ? terms_.back().coeff : 0; }

Ordinal Ordinal::without_finite_part() const {
  if (!is_successor()) return *this;
  std::vector<OrdinalTerm> t(terms_.begin(), terms_.end() - 1);
  return Ordinal(std::move(t));
}

const Ordinal& Ordinal::leading_exponent() const {
  if (terms_.empty()) throw DomainError("zero has no leading exponent");
  return terms_.front().exponent;
}

std::uint64_t Ordinal::leading_coefficient() const {
  return terms_.empty() ? 0 : terms_.front().coeff;
}

std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += '+';
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coeff);
      continue;
    }
    out += 'w';
    if (t.exponent != natural(1)) out += "^(" + t.exponent.to_string() + ")";
    if (t.coeff != 1) out += '*' + std::to_string(t.coeff);
  }
  return out;
}

std::string Ordinal::to_latex() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coeff);
      continue;
    }
    out += "\\omega";
    if (t.exponent != natural(1)) out += "^{" + t.exponent.to_latex() + "}";
    if (t.coeff != 1) out += " \\cdot " + std::to_string(t.coeff);
  }
  return out;
}

bool operator==(const Ordinal& a, const Ordinal& b) { return compare(a, b) == Cmp::EQ; }

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  switch (compare(a, b)) {
    case Cmp::LT: return std::strong_ordering::less;
    case Cmp::GT: return std::strong_ordering::greater;
    default: return std::strong_ordering::equal;
  }
}

Cmp compare(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t n = std::min(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    Cmp e = compare(x[i].exponent, y[i].exponent);
    if (e != Cmp::EQ) return e;
    if (x[i].coeff != y[i].coeff) return x[i].coeff < y[i].coeff ? Cmp::LT : Cmp::GT;
  }
  if (x.size() == y.size()) return Cmp::EQ;
  return x.size() < y.size() ? Cmp::LT : Cmp::GT;
}

const char* to_string(Cmp c) {
  switch (c) {
    case Cmp::LT: return "LT";
    case Cmp::EQ: return "EQ";
    case Cmp::GT: return "GT";
  }
  return "?";
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return b;
  const Ordinal& lead = b.leading_exponent();
  std::vector<OrdinalTerm> out;
  out.reserve(a.terms().size() + b.terms().size());
  std::uint64_t carry = 0;
  for (const auto& t : a.terms()) {
    Cmp c = compare(t.exponent, lead);
    if (c == Cmp::GT) {
      out.push_back(t);
    } else {
      if (c == Cmp::EQ) carry = t.coeff;
      break;
    }
  }
  out.insert(out.end(), b.terms().begin(), b.terms().end());
  out[out.size() - b.terms().size()].coeff =
      checked_add(out[out.size() - b.terms().size()].coeff, carry);
  check_size(out.size());
  return Ordinal(std::move(out));
}

Ordinal operator*(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal{};
  const Ordinal& a_lead = a.leading_exponent();
  Ordinal result;
  // a*(w^e*c) is w^(a_lead+e)*c for e > 0; for the trailing natural c only
  // the leading coefficient of a scales.
  for (const auto& t : b.terms()) {
    Ordinal piece;
    if (t.exponent.is_zero()) {
      std::vector<OrdinalTerm> terms = a.terms();
      terms.front().coeff = checked_mul(terms.front().coeff, t.coeff);
      piece = Ordinal(std::move(terms));
    } else {
      piece = Ordinal::omega_pow(a_lead + t.exponent, t.coeff);
    }
    result = result + piece;
  }
  return result;
}

namespace {

Ordinal natural_power(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    out = checked_mul(out, base);
    if (base <= 1) break;
  }
  return Ordinal::natural(out);
}

Ordinal repeated_power(const Ordinal& base, std::uint64_t exp) {
  Ordinal result = Ordinal::natural(1);
  Ordinal sq = base;
  // a^(m) for finite m via binary powering (ordinal multiplication is
  // associative, so the grouping is irrelevant).
  while (exp > 0) {
    if (exp & 1u) result = result * sq;
    exp >>= 1;
    if (exp > 0) sq = sq * sq;
  }
  return result;
}

}  // namespace

Ordinal power(const Ordinal& base, const Ordinal& exponent) {
  if (exponent.is_zero()) return Ordinal::natural(1);
  if (base.is_zero()) return Ordinal{};
  if (base == Ordinal::natural(1)) return base;

  Ordinal limit_part = exponent.without_finite_part();
  std::uint64_t m = exponent.finite_part();

  if (auto n = base.as_natural()) {
    if (limit_part.is_zero()) return natural_power(*n, m);
    // n^(w*x) = w^x where limit_part = w*x; w^e = w * w^(e') with
    // 1 + e' = e, i.e. e' = e - 1 for finite e and e' = e otherwise.
    std::vector<OrdinalTerm> shifted;
    for (const auto& t : limit_part.terms()) {
      Ordinal e = t.exponent;
      if (auto k = e.as_natural()) e = Ordinal::natural(*k - 1);
      shifted.push_back(OrdinalTerm{std::move(e), t.coeff});
    }
    Ordinal x = Ordinal::from_terms(std::move(shifted));
    return Ordinal::omega_pow(x) * natural_power(*n, m);
  }

  // Infinite base: a^L = w^(lead(a) * L) for L a sum of w^e*c with e >= 1.
  Ordinal head = Ordinal::natural(1);
  if (!limit_part.is_zero()) head = Ordinal::omega_pow(base.leading_exponent() * limit_part);
  return head * repeated_power(base, m);
}

bool is_indecomposable(const Ordinal& a) {
  if (a.is_zero()) throw DomainError("is_indecomposable: zero is not a valid input");
  return a.terms().size() == 1 && a.terms().front().coeff == 1;
}

ExponentSplit split_exponent(const Ordinal& d) {
  if (d.is_zero()) throw DomainError("split_exponent: exponent must be positive");
  if (auto n = d.as_natural()) return ExponentSplit{Ordinal::natural(1), *n - 1};
  return ExponentSplit{d.without_finite_part(), d.finite_part()};
}

Ordinal left_subtract(const Ordinal& a, const Ordinal& b) {
  if (compare(a, b) == Cmp::GT) throw DomainError("left_subtract: a > b");
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t i = 0;
  while (i < x.size() && i < y.size() && compare(x[i].exponent, y[i].exponent) == Cmp::EQ &&
         x[i].coeff == y[i].coeff)
    ++i;
  if (i == y.size()) return Ordinal{};  // a == b
  std::vector<OrdinalTerm> rest(y.begin() + static_cast<std::ptrdiff_t>(i), y.end());
  // a <= b and they first differ at i: either a ran out, a has a smaller
  // exponent there (its tail is absorbed), or the same exponent with a
  // smaller coefficient.
  if (i < x.size() && compare(x[i].exponent, y[i].exponent) == Cmp::EQ)
    rest.front().coeff -= x[i].coeff;
  return Ordinal::from_terms(std::move(rest));
}

}  // namespace ordcopies
