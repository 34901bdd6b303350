#pragma once

// Countable ordinals below epsilon_0 in hereditary Cantor normal form.
//
// An Ordinal is the finite sum  w^e1*c1 + w^e2*c2 + ... + w^ek*ck  with
// e1 > e2 > ... > ek (each again an Ordinal) and every ci >= 1.  The empty
// sum is 0.  Construction always yields the canonical form, so structural
// equality is ordinal equality.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ordcopies {

struct OrdinalTerm;

class Ordinal {
 public:
  Ordinal() = default;  // zero

  static Ordinal natural(std::uint64_t n);
  static Ordinal omega();
  // w^exponent * coeff; coeff == 0 gives zero.
  static Ordinal omega_pow(Ordinal exponent, std::uint64_t coeff = 1);
  // Throws DomainError unless exponents strictly decrease and coefficients
  // are positive.
  static Ordinal from_terms(std::vector<OrdinalTerm> terms);

  // Text grammar:
  //   ordinal := term ("+" term)* | "0"
  //   term    := "w" ["^(" ordinal ")"] ["*" coeff] | natural
  // "w^5" abbreviates "w^(5)"; whitespace is ignored.  Non-canonical
  // input (exponents not strictly decreasing) is a ParseError.
  static Ordinal parse(std::string_view text);

  const std::vector<OrdinalTerm>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_finite() const;
  bool is_successor() const;
  bool is_limit() const;  // nonzero and not a successor

  // Value when finite, nullopt otherwise.
  std::optional<std::uint64_t> as_natural() const;
  // Coefficient of w^0 (the trailing natural number).
  std::uint64_t finite_part() const;
  // This ordinal with its trailing natural number removed.
  Ordinal without_finite_part() const;

  // Precondition: nonzero.
  const Ordinal& leading_exponent() const;
  std::uint64_t leading_coefficient() const;

  // Canonical text; re-parses to an equal Ordinal.
  std::string to_string() const;
  std::string to_latex() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  explicit Ordinal(std::vector<OrdinalTerm> terms);

  std::vector<OrdinalTerm> terms_;

  friend Ordinal operator+(const Ordinal&, const Ordinal&);
  friend Ordinal operator*(const Ordinal&, const Ordinal&);
};

struct OrdinalTerm {
  Ordinal exponent;
  std::uint64_t coeff = 1;
};

enum class Cmp { LT, EQ, GT };

Cmp compare(const Ordinal& a, const Ordinal& b);
const char* to_string(Cmp c);

// Ordinal sum; left terms below b's leading exponent are absorbed.
Ordinal operator+(const Ordinal& a, const Ordinal& b);
// Ordinal product, a*b = type of b x a under lexicographic order.
Ordinal operator*(const Ordinal& a, const Ordinal& b);
// Ordinal exponentiation a^b.  0^b = 0 for b > 0, a^0 = 1.
Ordinal power(const Ordinal& base, const Ordinal& exponent);

// True iff a = w^d for some d (a single CNF term with coefficient 1).
// Throws DomainError for a = 0.  is_indecomposable(1) holds.
bool is_indecomposable(const Ordinal& a);

struct ExponentSplit {
  Ordinal gamma;  // a limit ordinal or 1
  std::uint64_t r = 0;
};

// The unique d = gamma + r with gamma limit or gamma = 1.  Throws for d = 0.
ExponentSplit split_exponent(const Ordinal& d);

// The unique c with a + c = b.  Precondition a <= b (DomainError otherwise).
Ordinal left_subtract(const Ordinal& a, const Ordinal& b);

// Upper bound on the number of CNF terms any arithmetic result may have.
inline constexpr std::size_t kMaxOrdinalTerms = 1u << 16;

}  // namespace ordcopies
