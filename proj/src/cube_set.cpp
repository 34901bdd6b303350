#include "ordcopies/cube_set.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "ordcopies/error.hpp"

namespace ordcopies {

namespace {

std::size_t aligned_cycle(std::size_t a, std::size_t b) {
  std::size_t l = std::lcm(a, b);
  if (l > kMaxColumns) throw RepresentationLimit("cycle length lcm exceeds column cap");
  return l;
}

void require_same_dim(const CubeSet& a, const CubeSet& b, const char* op) {
  if (a.dim() != b.dim())
    throw DomainError(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                      " vs " + std::to_string(b.dim()) + ")");
}

// Sum of types taken right to left: each new left summand keeps only the
// terms at or above the running total's leading exponent.  Exponents here
// are finite (every type is at most w^n), so they compare as naturals.
Ordinal sum_types(const std::vector<Ordinal>& summands) {
  std::vector<OrdinalTerm> acc;  // canonical terms of the running total
  for (auto it = summands.rbegin(); it != summands.rend(); ++it) {
    const auto& left = it->terms();
    if (left.empty()) continue;
    if (acc.empty()) {
      acc = left;
      continue;
    }
    std::uint64_t head = *acc.front().exponent.as_natural();
    std::vector<OrdinalTerm> merged;
    for (const auto& t : left) {
      std::uint64_t e = *t.exponent.as_natural();
      if (e > head) {
        merged.push_back(t);
      } else if (e == head) {
        merged.push_back(t);
        break;
      } else {
        break;
      }
    }
    std::size_t skip = 0;
    if (!merged.empty() && *merged.back().exponent.as_natural() == head) {
      merged.back().coeff += acc.front().coeff;
      skip = 1;
    }
    merged.insert(merged.end(), acc.begin() + static_cast<std::ptrdiff_t>(skip), acc.end());
    acc = std::move(merged);
  }
  return Ordinal::from_terms(std::move(acc));
}

Ordinal times_natural(const Ordinal& a, std::uint64_t k) { return a * Ordinal::natural(k); }

}  // namespace

CubeSet CubeSet::bit(bool in) {
  CubeSet s;
  s.bit_ = in;
  return s;
}

CubeSet CubeSet::empty(std::size_t dim) {
  if (dim == 0) return bit(false);
  CubeSet s;
  s.dim_ = dim;
  s.cycle_.push_back(empty(dim - 1));
  return s;
}

CubeSet CubeSet::full(std::size_t dim) {
  if (dim == 0) return bit(true);
  CubeSet s;
  s.dim_ = dim;
  s.cycle_.push_back(full(dim - 1));
  return s;
}

CubeSet CubeSet::make(std::size_t dim, std::vector<CubeSet> prefix, std::vector<CubeSet> cycle) {
  if (dim == 0) throw DomainError("CubeSet::make: use CubeSet::bit for dimension 0");
  if (cycle.empty()) throw DomainError("CubeSet::make: cycle must be nonempty");
  if (prefix.size() > kMaxColumns || cycle.size() > kMaxColumns)
    throw RepresentationLimit("CubeSet::make: too many columns");
  for (const auto* part : {&prefix, &cycle})
    for (const auto& c : *part)
      if (c.dim() != dim - 1)
        throw DomainError("CubeSet::make: child of dimension " + std::to_string(c.dim()) +
                          " in a set of dimension " + std::to_string(dim));
  CubeSet s;
  s.dim_ = dim;
  s.prefix_ = std::move(prefix);
  s.cycle_ = std::move(cycle);
  s.canonicalize();
  return s;
}

void CubeSet::canonicalize() {
  const std::size_t n = cycle_.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = cycle_[i] == cycle_[i - p];
    if (periodic) {
      cycle_.erase(cycle_.begin() + static_cast<std::ptrdiff_t>(p), cycle_.end());
      break;
    }
  }
  while (!prefix_.empty() && prefix_.back() == cycle_.back()) {
    prefix_.pop_back();
    std::rotate(cycle_.rbegin(), cycle_.rbegin() + 1, cycle_.rend());
  }
}

const CubeSet& CubeSet::column(std::uint64_t i) const {
  if (dim_ == 0) throw DomainError("column: dimension-0 set has no columns");
  if (i < prefix_.size()) return prefix_[i];
  return cycle_[(i - prefix_.size()) % cycle_.size()];
}

bool CubeSet::contains(std::span<const std::uint64_t> p) const {
  if (p.size() != dim_)
    throw DomainError("contains: point of length " + std::to_string(p.size()) +
                      " in a set of dimension " + std::to_string(dim_));
  const CubeSet* s = this;
  for (std::uint64_t c : p) s = &s->column(c);
  return s->bit_;
}

bool CubeSet::is_empty() const {
  if (dim_ == 0) return !bit_;
  auto empty_child = [](const CubeSet& c) { return c.is_empty(); };
  return std::all_of(prefix_.begin(), prefix_.end(), empty_child) &&
         std::all_of(cycle_.begin(), cycle_.end(), empty_child);
}

bool operator==(const CubeSet& a, const CubeSet& b) {
  return a.dim_ == b.dim_ && a.bit_ == b.bit_ && a.prefix_ == b.prefix_ && a.cycle_ == b.cycle_;
}

CubeSet combine(BoolOp op, const CubeSet& a, const CubeSet& b) {
  require_same_dim(a, b, "combine");
  if (a.dim() == 0) {
    bool x = a.is_set(), y = b.is_set();
    switch (op) {
      case BoolOp::Union: return CubeSet::bit(x || y);
      case BoolOp::Intersection: return CubeSet::bit(x && y);
      case BoolOp::Difference: return CubeSet::bit(x && !y);
    }
  }
  std::size_t p = std::max(a.prefix().size(), b.prefix().size());
  std::size_t c = aligned_cycle(a.cycle().size(), b.cycle().size());
  std::vector<CubeSet> prefix, cycle;
  prefix.reserve(p);
  cycle.reserve(c);
  for (std::size_t i = 0; i < p; ++i) prefix.push_back(combine(op, a.column(i), b.column(i)));
  for (std::size_t i = p; i < p + c; ++i) cycle.push_back(combine(op, a.column(i), b.column(i)));
  return CubeSet::make(a.dim(), std::move(prefix), std::move(cycle));
}

CubeSet complement(const CubeSet& a) {
  if (a.dim() == 0) return CubeSet::bit(!a.is_set());
  std::vector<CubeSet> prefix, cycle;
  for (const auto& c : a.prefix()) prefix.push_back(complement(c));
  for (const auto& c : a.cycle()) cycle.push_back(complement(c));
  return CubeSet::make(a.dim(), std::move(prefix), std::move(cycle));
}

bool is_subset(const CubeSet& a, const CubeSet& b) { return (a - b).is_empty(); }

bool window_equal(const CubeSet& a, const CubeSet& b) {
  if (a.dim() != b.dim()) return false;
  if (a.dim() == 0) return a.is_set() == b.is_set();
  std::size_t window = a.prefix().size() + b.prefix().size() +
                       aligned_cycle(a.cycle().size(), b.cycle().size());
  for (std::size_t i = 0; i < window; ++i)
    if (!window_equal(a.column(i), b.column(i))) return false;
  return true;
}

Ordinal order_type(const CubeSet& a) {
  if (a.dim() == 0) return Ordinal::natural(a.is_set() ? 1 : 0);
  std::vector<Ordinal> block;
  for (const auto& c : a.cycle()) block.push_back(order_type(c));
  Ordinal block_sum = sum_types(block);
  std::vector<Ordinal> summands;
  for (const auto& c : a.prefix()) summands.push_back(order_type(c));
  if (!block_sum.is_zero()) {
    // A positive block c repeated w times has type c*w = w^(e+1), e the
    // leading exponent of c.
    std::uint64_t e = *block_sum.leading_exponent().as_natural();
    summands.push_back(Ordinal::omega_pow(Ordinal::natural(e + 1)));
  }
  return sum_types(summands);
}

bool fubini_positive(const CubeSet& a) {
  if (a.dim() == 0) return a.is_set();
  return std::any_of(a.cycle().begin(), a.cycle().end(),
                     [](const CubeSet& c) { return fubini_positive(c); });
}

bool subset_mod_ideal(const CubeSet& a, const CubeSet& b) { return !fubini_positive(a - b); }

Point select(const CubeSet& a, const Ordinal& xi) {
  if (a.dim() == 0) {
    if (a.is_set() && xi.is_zero()) return {};
    throw DomainError("select: index " + xi.to_string() + " out of range");
  }
  auto descend = [](std::uint64_t col, const CubeSet& s, const Ordinal& rest) {
    Point p{col};
    Point tail = select(s, rest);
    p.insert(p.end(), tail.begin(), tail.end());
    return p;
  };

  Ordinal rest = xi;
  for (std::size_t i = 0; i < a.prefix().size(); ++i) {
    Ordinal t = order_type(a.prefix()[i]);
    if (rest < t) return descend(i, a.prefix()[i], rest);
    rest = left_subtract(t, rest);
  }

  std::vector<Ordinal> types;
  Ordinal block;
  for (const auto& c : a.cycle()) {
    types.push_back(order_type(c));
    block = block + types.back();
  }
  if (block.is_zero()) throw DomainError("select: index " + xi.to_string() + " out of range");
  const Ordinal& e = block.leading_exponent();
  if (rest >= Ordinal::omega_pow(e + Ordinal::natural(1)))
    throw DomainError("select: index " + xi.to_string() + " out of range");

  // Number of whole blocks before the target: the largest k with
  // block*k <= rest.
  std::uint64_t k = 0;
  if (!rest.is_zero() && rest.leading_exponent() == e) {
    k = rest.leading_coefficient() / block.leading_coefficient();
    if (times_natural(block, k) > rest) --k;
  }
  rest = left_subtract(times_natural(block, k), rest);

  std::uint64_t col;
  if (__builtin_mul_overflow(k, static_cast<std::uint64_t>(a.cycle().size()), &col) ||
      __builtin_add_overflow(col, static_cast<std::uint64_t>(a.prefix().size()), &col))
    throw RepresentationLimit("select: column index overflow");
  for (std::size_t j = 0; j < a.cycle().size(); ++j, ++col) {
    if (rest < types[j]) return descend(col, a.cycle()[j], rest);
    rest = left_subtract(types[j], rest);
  }
  throw DomainError("select: internal block overrun");  // unreachable: rest < block
}

Ordinal rank(const CubeSet& a, std::span<const std::uint64_t> p) {
  if (!a.contains(p)) throw DomainError("rank: point is not a member");
  if (a.dim() == 0) return Ordinal{};
  std::uint64_t i = p[0];
  Ordinal before;
  std::size_t plen = a.prefix().size();
  for (std::size_t j = 0; j < std::min<std::uint64_t>(i, plen); ++j)
    before = before + order_type(a.prefix()[j]);
  if (i > plen) {
    std::uint64_t offset = i - plen;
    std::uint64_t blocks = offset / a.cycle().size();
    std::uint64_t within = offset % a.cycle().size();
    Ordinal block;
    for (const auto& c : a.cycle()) block = block + order_type(c);
    before = before + times_natural(block, blocks);
    for (std::uint64_t j = 0; j < within; ++j) before = before + order_type(a.cycle()[j]);
  }
  return before + rank(a.column(i), p.subspan(1));
}

Ordinal point_to_ord(std::span<const std::uint64_t> p) {
  std::vector<OrdinalTerm> terms;
  for (std::size_t j = 0; j < p.size(); ++j)
    if (p[j] != 0) terms.push_back(OrdinalTerm{Ordinal::natural(p.size() - 1 - j), p[j]});
  return Ordinal::from_terms(std::move(terms));
}

Point ord_to_point(std::size_t n, const Ordinal& xi) {
  Point p(n, 0);
  for (const auto& t : xi.terms()) {
    auto e = t.exponent.as_natural();
    if (!e || *e >= n)
      throw DomainError("ord_to_point: " + xi.to_string() + " is not below w^" + std::to_string(n));
    p[n - 1 - *e] = t.coeff;
  }
  return p;
}

CubeSet initial_segment(std::size_t n, const Ordinal& alpha) {
  Ordinal top = Ordinal::omega_pow(Ordinal::natural(n));
  if (alpha > top)
    throw DomainError("initial_segment: " + alpha.to_string() + " exceeds w^" + std::to_string(n));
  if (alpha == top) return CubeSet::full(n);
  if (alpha.is_zero()) return CubeSet::empty(n);
  // alpha < w^n, so n >= 1 here.
  std::uint64_t e = *alpha.leading_exponent().as_natural();
  if (e + 1 < n) {
    return CubeSet::make(n, {initial_segment(n - 1, alpha)}, {CubeSet::empty(n - 1)});
  }
  std::uint64_t c = alpha.leading_coefficient();
  if (c >= kMaxColumns) throw RepresentationLimit("initial_segment: too many full columns");
  std::vector<OrdinalTerm> rest_terms(alpha.terms().begin() + 1, alpha.terms().end());
  std::vector<CubeSet> prefix(c, CubeSet::full(n - 1));
  prefix.push_back(initial_segment(n - 1, Ordinal::from_terms(std::move(rest_terms))));
  return CubeSet::make(n, std::move(prefix), {CubeSet::empty(n - 1)});
}

bool is_copy(const CubeSet& a, const Ordinal& alpha) {
  CubeSet segment = initial_segment(a.dim(), alpha);
  if (!is_subset(a, segment))
    throw DomainError("is_copy: set is not contained in the encoded segment " + alpha.to_string());
  return order_type(a) == alpha;
}

CubeSet lex_product(const CubeSet& major, const CubeSet& minor) {
  if (major.dim() == 0) return major.is_set() ? minor : CubeSet::empty(minor.dim());
  std::vector<CubeSet> prefix, cycle;
  for (const auto& c : major.prefix()) prefix.push_back(lex_product(c, minor));
  for (const auto& c : major.cycle()) cycle.push_back(lex_product(c, minor));
  return CubeSet::make(major.dim() + minor.dim(), std::move(prefix), std::move(cycle));
}

CubeSet lex_sum(std::span<const CubeSet> parts) {
  if (parts.empty()) throw DomainError("lex_sum: no summands");
  std::size_t d = parts.front().dim();
  for (const auto& p : parts)
    if (p.dim() != d) throw DomainError("lex_sum: summands differ in dimension");
  return CubeSet::make(d + 1, std::vector<CubeSet>(parts.begin(), parts.end()), {CubeSet::empty(d)});
}

}  // namespace ordcopies
