#pragma once

// Subsets of L = sum_{n in w} L_n with L_n = w^(n+1) (the ladder
// delta_n = n + 1 below gamma = w), and the S-set machinery deciding
// membership in the ideal I of subsets into which L does not embed.

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ordcopies/cube_set.hpp"
#include "ordcopies/ordinal.hpp"

namespace ordcopies {

// A finite or cofinite subset of w.
struct FinCof {
  enum class Kind { Finite, Cofinite };
  Kind kind = Kind::Finite;
  std::set<std::uint64_t> exceptions;  // members if finite, non-members if cofinite

  bool contains(std::uint64_t n) const {
    return (kind == Kind::Finite) == exceptions.contains(n);
  }
  FinCof complement() const {
    return {kind == Kind::Finite ? Kind::Cofinite : Kind::Finite, exceptions};
  }
  friend bool operator==(const FinCof&, const FinCof&) = default;
};

// An eventually periodic subset of w.  Finite and cofinite sets are the
// special case of a constant cycle.
class NatSet {
 public:
  NatSet() : bits_(CubeSet::empty(1)) {}
  static NatSet none() { return NatSet(); }
  static NatSet all() { return NatSet(CubeSet::full(1)); }
  // {n : n >= k}
  static NatSet from(std::uint64_t k);
  static NatSet finite(std::span<const std::uint64_t> members);
  static NatSet periodic(std::vector<bool> prefix, std::vector<bool> cycle);
  static NatSet from_fincof(const FinCof& f);
  static NatSet from_cube(const CubeSet& s);  // s must have dimension 1

  bool contains(std::uint64_t n) const;
  bool is_empty() const { return bits_.is_empty(); }
  bool is_finite() const { return !fubini_positive(bits_); }
  bool is_infinite() const { return !is_finite(); }
  // Set view when finite or cofinite.
  std::optional<FinCof> as_fincof() const;
  // Members below `bound`.
  std::vector<std::uint64_t> members_below(std::uint64_t bound) const;

  const CubeSet& bits() const { return bits_; }

  NatSet operator|(const NatSet& o) const { return NatSet(bits_ | o.bits_); }
  NatSet operator&(const NatSet& o) const { return NatSet(bits_ & o.bits_); }
  NatSet operator-(const NatSet& o) const { return NatSet(bits_ - o.bits_); }
  NatSet complement() const { return NatSet(ordcopies::complement(bits_)); }

  bool subset_of(const NatSet& o) const { return (*this - o).is_empty(); }
  // this \ o is finite.
  bool almost_subset_of(const NatSet& o) const { return (*this - o).is_finite(); }

  std::string to_string() const;

  friend bool operator==(const NatSet&, const NatSet&) = default;

 private:
  explicit NatSet(CubeSet bits) : bits_(std::move(bits)) {}
  CubeSet bits_;
};

class LayeredSet {
 public:
  // Column n of the prefix must have dimension n + 1.  Columns at and
  // beyond |prefix| are full exactly where `tail` holds and empty
  // elsewhere.
  LayeredSet(std::vector<CubeSet> prefix, NatSet tail);

  static LayeredSet empty() { return LayeredSet({}, NatSet::none()); }
  static LayeredSet full() { return LayeredSet({}, NatSet::all()); }

  const std::vector<CubeSet>& prefix() const { return prefix_; }
  const NatSet& tail() const { return tail_; }

  // A ∩ L_n as a subset of w^(n+1).
  CubeSet column(std::uint64_t n) const;

  // Keep only the columns indexed by `cols`.
  LayeredSet restrict_columns(const NatSet& cols) const;

  friend bool operator==(const LayeredSet& a, const LayeredSet& b);

 private:
  std::vector<CubeSet> prefix_;
  NatSet tail_;
};

LayeredSet combine(BoolOp op, const LayeredSet& a, const LayeredSet& b);
inline LayeredSet operator|(const LayeredSet& a, const LayeredSet& b) { return combine(BoolOp::Union, a, b); }
inline LayeredSet operator&(const LayeredSet& a, const LayeredSet& b) { return combine(BoolOp::Intersection, a, b); }
inline LayeredSet operator-(const LayeredSet& a, const LayeredSet& b) { return combine(BoolOp::Difference, a, b); }
bool is_subset(const LayeredSet& a, const LayeredSet& b);

// S^m_A = {n : type(A ∩ L_n) >= w^(m+1)}.
NatSet s_set(const LayeredSet& a, std::uint64_t m);
// supp A = {n : A ∩ L_n nonempty}.
NatSet support(const LayeredSet& a);

// A ∈ I iff S^m_A is empty for some m.  Beyond the prefix every column is
// full or empty, so this happens iff the tail is finite or some m <= |prefix|
// already gives an empty S^m.
bool in_ideal(const LayeredSet& a);
// A ⊆_I B, i.e. A \ B ∈ I.
bool subset_mod_ideal(const LayeredSet& a, const LayeredSet& b);

// S is a reduction of A up to m_max: S \ S^m_A is finite for m <= m_max.
// Throws DomainError when A ∈ I.
bool is_reduction(const NatSet& s, const LayeredSet& a, std::uint64_t m_max);

// With r = |as| - 1, S_r = S ∩ ⋂_{m,n<=r} S^m_{A_n} and the result is
// B_r = A_r ∩ ⋃_{k in S_r} L_k.  Preconditions (S infinite, each A_n ∉ I,
// S ⊆* S^m_{A_n} for m, n <= r) are checked; violations throw
// DomainError naming the failing pair.
LayeredSet fusion(std::span<const LayeredSet> as, const NatSet& s);
// The index set S_r used by fusion.
NatSet fusion_index(std::span<const LayeredSet> as, const NatSet& s);

// Sum of the column types; w^w exactly when infinitely many tail columns
// are full.
Ordinal order_type(const LayeredSet& a);

}  // namespace ordcopies
