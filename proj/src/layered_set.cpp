#include "ordcopies/layered_set.hpp"

#include <algorithm>

#include "ordcopies/error.hpp"

namespace ordcopies {

namespace {

CubeSet column_of(bool full, std::uint64_t n) {
  return full ? CubeSet::full(n + 1) : CubeSet::empty(n + 1);
}

}  // namespace

// ---- NatSet ---------------------------------------------------------------

NatSet NatSet::from(std::uint64_t k) {
  if (k > kMaxColumns) throw RepresentationLimit("NatSet::from: threshold exceeds column cap");
  return NatSet(CubeSet::make(1, std::vector<CubeSet>(k, CubeSet::bit(false)), {CubeSet::bit(true)}));
}

NatSet NatSet::finite(std::span<const std::uint64_t> members) {
  if (members.empty()) return none();
  std::uint64_t top = *std::max_element(members.begin(), members.end());
  if (top >= kMaxColumns) throw RepresentationLimit("NatSet::finite: member exceeds column cap");
  std::vector<CubeSet> prefix(top + 1, CubeSet::bit(false));
  for (auto m : members) prefix[m] = CubeSet::bit(true);
  return NatSet(CubeSet::make(1, std::move(prefix), {CubeSet::bit(false)}));
}

NatSet NatSet::periodic(std::vector<bool> prefix, std::vector<bool> cycle) {
  std::vector<CubeSet> p, c;
  for (bool b : prefix) p.push_back(CubeSet::bit(b));
  for (bool b : cycle) c.push_back(CubeSet::bit(b));
  return NatSet(CubeSet::make(1, std::move(p), std::move(c)));
}

NatSet NatSet::from_fincof(const FinCof& f) {
  std::vector<std::uint64_t> ex(f.exceptions.begin(), f.exceptions.end());
  NatSet s = finite(ex);
  return f.kind == FinCof::Kind::Finite ? s : s.complement();
}

NatSet NatSet::from_cube(const CubeSet& s) {
  if (s.dim() != 1) throw DomainError("NatSet::from_cube: expected a dimension-1 set");
  return NatSet(s);
}

bool NatSet::contains(std::uint64_t n) const { return bits_.column(n).is_set(); }

std::optional<FinCof> NatSet::as_fincof() const {
  if (bits_.cycle().size() != 1) return std::nullopt;
  bool tail = bits_.cycle().front().is_set();
  FinCof f;
  f.kind = tail ? FinCof::Kind::Cofinite : FinCof::Kind::Finite;
  for (std::size_t i = 0; i < bits_.prefix().size(); ++i)
    if (bits_.prefix()[i].is_set() != tail) f.exceptions.insert(i);
  return f;
}

std::vector<std::uint64_t> NatSet::members_below(std::uint64_t bound) const {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 0; n < bound; ++n)
    if (contains(n)) out.push_back(n);
  return out;
}

std::string NatSet::to_string() const {
  auto list = [](const std::set<std::uint64_t>& xs) {
    std::string s = "{";
    for (auto x : xs) s += (s.size() > 1 ? "," : "") + std::to_string(x);
    return s + "}";
  };
  if (auto f = as_fincof()) {
    if (f->kind == FinCof::Kind::Finite) return list(f->exceptions);
    return f->exceptions.empty() ? "w" : "w\\" + list(f->exceptions);
  }
  std::string s = "periodic(";
  for (const auto& b : bits_.prefix()) s += b.is_set() ? '1' : '0';
  s += '|';
  for (const auto& b : bits_.cycle()) s += b.is_set() ? '1' : '0';
  return s + ")";
}

// ---- LayeredSet -------------------------------------------------------------

LayeredSet::LayeredSet(std::vector<CubeSet> prefix, NatSet tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  if (prefix_.size() > kMaxColumns) throw RepresentationLimit("LayeredSet: prefix too long");
  for (std::size_t n = 0; n < prefix_.size(); ++n)
    if (prefix_[n].dim() != n + 1)
      throw DomainError("LayeredSet: column " + std::to_string(n) + " has dimension " +
                        std::to_string(prefix_[n].dim()) + ", expected " +
                        std::to_string(n + 1));
  // Canonical form: no trailing prefix column that the tail already
  // describes, and no tail bits below the prefix.
  std::vector<std::uint64_t> full_columns;
  for (std::uint64_t n = 0; n < prefix_.size(); ++n)
    if (prefix_[n] == CubeSet::full(n + 1)) full_columns.push_back(n);
  NatSet full = (tail_ & NatSet::from(prefix_.size())) | NatSet::finite(full_columns);
  while (!prefix_.empty()) {
    std::uint64_t n = prefix_.size() - 1;
    if (prefix_.back() != column_of(full.contains(n), n)) break;
    prefix_.pop_back();
  }
  tail_ = full & NatSet::from(prefix_.size());
}

CubeSet LayeredSet::column(std::uint64_t n) const {
  if (n < prefix_.size()) return prefix_[n];
  return column_of(tail_.contains(n), n);
}

LayeredSet LayeredSet::restrict_columns(const NatSet& cols) const {
  std::vector<CubeSet> prefix;
  for (std::uint64_t n = 0; n < prefix_.size(); ++n)
    prefix.push_back(cols.contains(n) ? prefix_[n] : CubeSet::empty(n + 1));
  return LayeredSet(std::move(prefix), tail_ & cols);
}

bool operator==(const LayeredSet& a, const LayeredSet& b) {
  return a.prefix_ == b.prefix_ && a.tail_ == b.tail_;
}

LayeredSet combine(BoolOp op, const LayeredSet& a, const LayeredSet& b) {
  std::size_t p = std::max(a.prefix().size(), b.prefix().size());
  std::vector<CubeSet> prefix;
  for (std::uint64_t n = 0; n < p; ++n) prefix.push_back(combine(op, a.column(n), b.column(n)));
  NatSet tail = NatSet::from_cube(combine(op, a.tail().bits(), b.tail().bits()));
  return LayeredSet(std::move(prefix), std::move(tail));
}

bool is_subset(const LayeredSet& a, const LayeredSet& b) {
  LayeredSet d = a - b;
  return d.tail().is_empty() &&
         std::all_of(d.prefix().begin(), d.prefix().end(), [](const CubeSet& c) { return c.is_empty(); });
}

NatSet s_set(const LayeredSet& a, std::uint64_t m) {
  const Ordinal threshold = Ordinal::omega_pow(Ordinal::natural(m + 1));
  std::vector<std::uint64_t> hits;
  for (std::uint64_t n = 0; n < a.prefix().size(); ++n)
    if (order_type(a.prefix()[n]) >= threshold) hits.push_back(n);
  // A full tail column n has type w^(n+1), which reaches w^(m+1) iff n >= m.
  std::uint64_t start = std::max<std::uint64_t>(a.prefix().size(), m);
  return NatSet::finite(hits) | (a.tail() & NatSet::from(start));
}

NatSet support(const LayeredSet& a) {
  std::vector<std::uint64_t> hits;
  for (std::uint64_t n = 0; n < a.prefix().size(); ++n)
    if (!a.prefix()[n].is_empty()) hits.push_back(n);
  return NatSet::finite(hits) | a.tail();
}

bool in_ideal(const LayeredSet& a) {
  // Past the prefix S^m is the tail above m, so some S^m is empty iff the
  // tail is finite or an earlier S^m already is.
  if (a.tail().is_finite()) return true;
  for (std::uint64_t m = 0; m <= a.prefix().size(); ++m)
    if (s_set(a, m).is_empty()) return true;
  return false;
}

bool subset_mod_ideal(const LayeredSet& a, const LayeredSet& b) { return in_ideal(a - b); }

bool is_reduction(const NatSet& s, const LayeredSet& a, std::uint64_t m_max) {
  if (in_ideal(a)) throw DomainError("is_reduction: A belongs to the ideal");
  for (std::uint64_t m = 0; m <= m_max; ++m)
    if (!s.almost_subset_of(s_set(a, m))) return false;
  return true;
}

NatSet fusion_index(std::span<const LayeredSet> as, const NatSet& s) {
  if (as.empty()) throw DomainError("fusion: empty list of sets");
  if (s.is_finite()) throw DomainError("fusion: S must be infinite");
  const std::uint64_t r = as.size() - 1;
  for (std::uint64_t n = 0; n <= r; ++n)
    if (in_ideal(as[n])) throw DomainError("fusion: A_" + std::to_string(n) + " belongs to the ideal");
  NatSet index = s;
  for (std::uint64_t m = 0; m <= r; ++m) {
    for (std::uint64_t n = 0; n <= r; ++n) {
      NatSet sm = s_set(as[n], m);
      if (!s.almost_subset_of(sm))
        throw DomainError("fusion: S is not almost contained in S^" + std::to_string(m) + "_A_" +
                          std::to_string(n) + " (m=" + std::to_string(m) +
                          ", n=" + std::to_string(n) + ")");
      index = index & sm;
    }
  }
  return index;
}

LayeredSet fusion(std::span<const LayeredSet> as, const NatSet& s) {
  NatSet index = fusion_index(as, s);
  return as.back().restrict_columns(index);
}

Ordinal order_type(const LayeredSet& a) {
  Ordinal total;
  for (const auto& c : a.prefix()) total = total + order_type(c);
  if (a.tail().is_infinite()) return total + Ordinal::omega_pow(Ordinal::omega());
  auto f = a.tail().as_fincof();
  for (auto n : f->exceptions) total = total + Ordinal::omega_pow(Ordinal::natural(n + 1));
  return total;
}

}  // namespace ordcopies
