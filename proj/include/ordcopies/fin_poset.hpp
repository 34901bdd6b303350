#pragma once

// Finite pre-orders and their separative modification / quotient.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ordcopies {

class FinPoset {
 public:
  // leq[p][q] means p <= q.  Throws DomainError unless square, reflexive
  // and transitive.
  explicit FinPoset(std::vector<std::vector<bool>> leq);

  static FinPoset antichain(std::size_t n);
  static FinPoset chain(std::size_t n);  // 0 < 1 < ... < n-1

  // Text format: the size m on the first line, then m rows of 0/1 (digits
  // may be separated by blanks).
  static FinPoset parse(std::string_view text);
  std::string to_text() const;

  std::size_t size() const { return leq_.size(); }
  bool leq(std::size_t p, std::size_t q) const { return leq_[p][q]; }
  bool compatible(std::size_t p, std::size_t q) const;
  bool is_partial_order() const;  // antisymmetric as well

  const std::vector<std::vector<bool>>& matrix() const { return leq_; }

  friend bool operator==(const FinPoset&, const FinPoset&) = default;

 private:
  std::vector<std::vector<bool>> leq_;
};

// For p not <= q some r <= p is incompatible with q.
bool is_separative(const FinPoset& p);

// p <=* q iff every r <= p is compatible with q.
FinPoset separative_modification(const FinPoset& p);

// Result of collapsing =*-classes.  class_of[i] is the quotient element
// of the original element i; quotient elements are numbered by their
// least member.
struct SeparativeQuotient {
  FinPoset order;
  std::vector<std::size_t> class_of;
};

SeparativeQuotient separative_quotient_map(const FinPoset& p);
inline FinPoset separative_quotient(const FinPoset& p) { return separative_quotient_map(p).order; }

// Coordinatewise order on pairs; pair (i, j) is element i * |Q| + j.
FinPoset product(const FinPoset& p, const FinPoset& q);

inline constexpr std::size_t kDefaultIsoCap = 10;

// An order isomorphism (perm[i] is the image of i) or nullopt.  Throws
// DomainError when either side has more than `max_size` elements.
std::optional<std::vector<std::size_t>> find_isomorphism(const FinPoset& p, const FinPoset& q,
                                                         std::size_t max_size = kDefaultIsoCap);

}  // namespace ordcopies
