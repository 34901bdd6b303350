#pragma once

// Eventually-periodic subsets of w^n under the lexicographic order.
//
// A CubeSet of dimension 0 is a single bit (the one-point order is in or
// out).  A CubeSet of dimension n >= 1 is a stream of dimension n-1
// columns, given by a finite prefix followed by a cycle that repeats
// forever: column i is prefix[i] for i < |prefix|, else
// cycle[(i - |prefix|) mod |cycle|].  The point (i1, ..., in) stands for
// the ordinal w^(n-1)*i1 + ... + in.
//
// Values are kept canonical (minimal cycle, shortest prefix, children
// canonical), so operator== is semantic equality.

#include <cstdint>
#include <span>
#include <vector>

#include "ordcopies/ordinal.hpp"

namespace ordcopies {

using Point = std::vector<std::uint64_t>;

class CubeSet {
 public:
  static CubeSet bit(bool in);
  static CubeSet empty(std::size_t dim);
  static CubeSet full(std::size_t dim);
  // Throws DomainError on an empty cycle or children of the wrong dimension.
  static CubeSet make(std::size_t dim, std::vector<CubeSet> prefix, std::vector<CubeSet> cycle);

  std::size_t dim() const { return dim_; }
  // Dimension 0 only.
  bool is_set() const { return bit_; }
  const std::vector<CubeSet>& prefix() const { return prefix_; }
  const std::vector<CubeSet>& cycle() const { return cycle_; }
  // Dimension >= 1 only.
  const CubeSet& column(std::uint64_t i) const;

  bool contains(std::span<const std::uint64_t> p) const;
  bool is_empty() const;

  friend bool operator==(const CubeSet& a, const CubeSet& b);

 private:
  CubeSet() = default;
  void canonicalize();

  std::size_t dim_ = 0;
  bool bit_ = false;
  std::vector<CubeSet> prefix_;
  std::vector<CubeSet> cycle_;
};

enum class BoolOp { Union, Intersection, Difference };

// Pointwise Boolean combination; both operands must share a dimension.
CubeSet combine(BoolOp op, const CubeSet& a, const CubeSet& b);
CubeSet complement(const CubeSet& a);
inline CubeSet operator|(const CubeSet& a, const CubeSet& b) { return combine(BoolOp::Union, a, b); }
inline CubeSet operator&(const CubeSet& a, const CubeSet& b) { return combine(BoolOp::Intersection, a, b); }
inline CubeSet operator-(const CubeSet& a, const CubeSet& b) { return combine(BoolOp::Difference, a, b); }
bool is_subset(const CubeSet& a, const CubeSet& b);

// Equality checked column-by-column on the window
// |prefix_a| + |prefix_b| + lcm(|cycle_a|, |cycle_b|), recursively.
// Independent of canonical form; used to cross-check operator==.
bool window_equal(const CubeSet& a, const CubeSet& b);

// Order type of <A, lex>.
Ordinal order_type(const CubeSet& a);

// A is not in Fin^n: cofinally many columns are positive, recursively;
// a dimension-0 set is positive iff its bit is set.
bool fubini_positive(const CubeSet& a);

// Independent of fubini_positive: A is a copy of w^n.
inline bool positive_by_type(const CubeSet& a) {
  return order_type(a) == Ordinal::omega_pow(Ordinal::natural(a.dim()));
}

// A \ B is in Fin^n.
bool subset_mod_ideal(const CubeSet& a, const CubeSet& b);

// The xi-th element of A in lex order.  Throws DomainError when
// xi >= order_type(A).
Point select(const CubeSet& a, const Ordinal& xi);
// Position of p in A, the inverse of select.  Throws if p is not in A.
Ordinal rank(const CubeSet& a, std::span<const std::uint64_t> p);

// type(A) = alpha, i.e. A is a copy of alpha.  A must lie inside the
// encoded initial segment of alpha, and alpha <= w^dim(A).
bool is_copy(const CubeSet& a, const Ordinal& alpha);

// point (i1,...,in) <-> w^(n-1)*i1 + ... + in.
Ordinal point_to_ord(std::span<const std::uint64_t> p);
// Throws DomainError unless xi < w^n.
Point ord_to_point(std::size_t n, const Ordinal& xi);

// {p : point_to_ord(p) < alpha} inside w^n, alpha <= w^n.
CubeSet initial_segment(std::size_t n, const Ordinal& alpha);

// Replace every point of `major` by a copy of `minor`; the result has
// dimension dim(major) + dim(minor) and type type(minor) * type(major).
CubeSet lex_product(const CubeSet& major, const CubeSet& minor);

// Columns 0..k-1 are the given sets, the rest empty; type is the ordinal
// sum of their types.
CubeSet lex_sum(std::span<const CubeSet> parts);

// Cap on explicitly materialised columns (prefix or cycle length).
inline constexpr std::size_t kMaxColumns = 1u << 16;

}  // namespace ordcopies
