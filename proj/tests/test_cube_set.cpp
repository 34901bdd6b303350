#include "doctest.h"
#include "ordcopies/cube_set.hpp"
#include "ordcopies/error.hpp"
#include "ordcopies/random.hpp"

using namespace ordcopies;

namespace {

Ordinal O(const char* s) { return Ordinal::parse(s); }
Ordinal N(std::uint64_t n) { return Ordinal::natural(n); }
Ordinal wpow(std::uint64_t n) { return Ordinal::omega_pow(N(n)); }

CubeSet bits(std::vector<int> prefix, std::vector<int> cycle) {
  std::vector<CubeSet> p, c;
  for (int b : prefix) p.push_back(CubeSet::bit(b));
  for (int b : cycle) c.push_back(CubeSet::bit(b));
  return CubeSet::make(1, std::move(p), std::move(c));
}

const CubeSet evens = bits({}, {1, 0});
const CubeSet odds = bits({}, {0, 1});

// Members of a dimension-1 column below `bound`.
std::uint64_t count_below(const CubeSet& col, std::uint64_t bound) {
  std::uint64_t n = 0;
  for (std::uint64_t j = 0; j < bound; ++j) n += col.column(j).is_set();
  return n;
}

bool column_infinite(const CubeSet& col) {
  for (const auto& b : col.cycle())
    if (b.is_set()) return true;
  return false;
}

// Position of (i, j) in a dimension-2 set, counted directly: each earlier
// infinite column contributes a copy of w, a finite column after the last
// infinite one contributes its size, and finite columns before an infinite
// one are absorbed.  Returned as (coefficient of w, finite part).
std::pair<std::uint64_t, std::uint64_t> brute_position(const CubeSet& a, std::uint64_t i, std::uint64_t j) {
  std::uint64_t omegas = 0, finite = 0;
  for (std::uint64_t k = 0; k < i; ++k) {
    const CubeSet& col = a.column(k);
    if (column_infinite(col)) {
      ++omegas;
      finite = 0;
    } else {
      finite += count_below(col, col.prefix().size());
    }
  }
  return {omegas, finite + count_below(a.column(i), j)};
}

}  // namespace

TEST_CASE("membership") {
  CHECK(CubeSet::full(2).contains(Point{7, 3}));
  CHECK_FALSE(CubeSet::empty(1).contains(Point{5}));
  CubeSet even_cols = CubeSet::make(2, {}, {CubeSet::full(1), CubeSet::empty(1)});
  CHECK_FALSE(even_cols.contains(Point{3, 0}));
  CHECK(even_cols.contains(Point{4, 100}));
  CHECK_THROWS_AS(even_cols.contains(Point{1}), DomainError);
}

TEST_CASE("construction is canonical") {
  CHECK(bits({1, 0, 1, 0}, {1, 0, 1, 0}) == evens);
  CHECK(bits({0}, {1, 0}) == odds);
  CHECK(bits({1, 1, 1}, {1}) == CubeSet::full(1));
  CHECK(bits({}, {0, 0, 0}) == CubeSet::empty(1));
  CHECK(bits({0, 1}, {1, 0, 1, 0}) != odds);
  CHECK_THROWS_AS(CubeSet::make(1, {}, {}), DomainError);
  CHECK_THROWS_AS(CubeSet::make(2, {}, {CubeSet::bit(true)}), DomainError);
}

TEST_CASE("boolean operations") {
  random::Rng rng(21);
  CHECK((evens & odds) == CubeSet::empty(1));
  CHECK((evens | odds) == CubeSet::full(1));
  CHECK_THROWS_AS(evens | CubeSet::full(2), DomainError);
  for (int i = 0; i < 200; ++i) {
    std::size_t d = random::uniform(rng, 1, 3);
    CubeSet a = random::cube_set(rng, d), b = random::cube_set(rng, d);
    CHECK((a | CubeSet::empty(d)) == a);
    CHECK(complement(complement(a)) == a);
    CHECK(complement(a | b) == (complement(a) & complement(b)));
    CHECK(complement(a & b) == (complement(a) | complement(b)));
    CHECK((a | (a & b)) == a);
    CHECK((a & (a | b)) == a);
    CHECK((a - b) == (a & complement(b)));
    // canonical equality agrees with the window criterion
    CHECK((a == b) == window_equal(a, b));
    CHECK(window_equal(complement(complement(a)), a));
  }
}

TEST_CASE("point encoding") {
  CHECK(point_to_ord(Point{3, 5}) == O("w*3+5"));
  CHECK(ord_to_point(2, O("w*3+5")) == Point{3, 5});
  CHECK(point_to_ord(Point{0, 0}) == N(0));
  CHECK(ord_to_point(2, N(0)) == Point{0, 0});
  CHECK(point_to_ord(Point{1, 2, 3}) == O("w^2+w*2+3"));
  CHECK(ord_to_point(3, O("w^2+w*2+3")) == Point{1, 2, 3});
  CHECK_THROWS_AS(ord_to_point(2, O("w^2")), DomainError);
  CHECK_THROWS_AS(ord_to_point(2, O("w^(w)")), DomainError);
  // order preserving
  random::Rng rng(22);
  for (int i = 0; i < 200; ++i) {
    Point p{random::uniform(rng, 0, 4), random::uniform(rng, 0, 4), random::uniform(rng, 0, 4)};
    Point q{random::uniform(rng, 0, 4), random::uniform(rng, 0, 4), random::uniform(rng, 0, 4)};
    CHECK((p < q) == (point_to_ord(p) < point_to_ord(q)));
    CHECK(ord_to_point(3, point_to_ord(p)) == p);
  }
}

TEST_CASE("order type examples") {
  CHECK(order_type(CubeSet::empty(3)) == N(0));
  for (std::size_t n = 0; n <= 4; ++n) CHECK(order_type(CubeSet::full(n)) == wpow(n));
  CHECK(order_type(evens) == Ordinal::omega());
  CHECK(order_type(bits({1, 1, 0, 1}, {0})) == N(3));
}

TEST_CASE("alternating full and {0,1,2} columns have type w^2") {
  CubeSet three = bits({1, 1, 1}, {0});
  CubeSet a = CubeSet::make(2, {}, {CubeSet::full(1), three});
  // Partial-sum oracle: the block sum is w+3 and (w+3)*k = w*k + 3, all
  // below w^2 and unbounded in it, so the supremum is w^2.
  Ordinal block = Ordinal::omega() + N(3);
  Ordinal partial;
  for (std::uint64_t k = 1; k <= 20; ++k) {
    partial = partial + block;
    CHECK(partial == Ordinal::omega_pow(N(1), k) + N(3));
    CHECK(partial < wpow(2));
  }
  CHECK(order_type(a) == wpow(2));
}

TEST_CASE("closed form c*w = w^(e+1) against hand-checked partial sums") {
  // block sum c, leading exponent e; expected limit w^(e+1).
  const std::vector<std::pair<const char*, std::uint64_t>> table = {
      {"1", 0},         {"3", 0},           {"w", 1},       {"w+3", 1},     {"w*2+1", 1},
      {"w^2", 2},       {"w^2+w*5", 2},     {"w^2*3+7", 2}, {"w^3+w^2+w+1", 3}, {"w^3*4", 3},
  };
  for (const auto& [text, e] : table) {
    Ordinal c = O(text);
    Ordinal limit = wpow(e + 1);
    Ordinal partial;
    for (std::uint64_t k = 1; k <= 12; ++k) {
      partial = partial + c;
      CHECK(partial < limit);
      CHECK(partial >= Ordinal::omega_pow(N(e), k));  // unbounded below w^(e+1)
    }
    CHECK(c * Ordinal::omega() == limit);
  }
}

TEST_CASE("lex sums and products model ordinal arithmetic") {
  // w^2*3 + (w^2+w): both fit in w^3
  std::vector<CubeSet> parts{initial_segment(3, O("w^2*3")), initial_segment(3, O("w^2+w"))};
  CHECK(order_type(lex_sum(parts)) == O("w^2*4+w"));
  // 2*w = type(w x 2)
  CHECK(order_type(lex_product(CubeSet::full(1), initial_segment(1, N(2)))) == Ordinal::omega());
  // w*2 = type(2 x w)
  CHECK(order_type(lex_product(initial_segment(1, N(2)), CubeSet::full(1))) == O("w*2"));
}

TEST_CASE("initial segments") {
  CHECK(initial_segment(2, wpow(2)) == CubeSet::full(2));
  CHECK(initial_segment(2, N(0)) == CubeSet::empty(2));
  CubeSet seg = initial_segment(2, O("w*2+3"));
  CHECK(seg.contains(Point{1, 77}));
  CHECK(seg.contains(Point{2, 2}));
  CHECK_FALSE(seg.contains(Point{2, 3}));
  CHECK(order_type(seg) == O("w*2+3"));
  CHECK_THROWS_AS(initial_segment(2, O("w^2+1")), DomainError);
  random::Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    Ordinal a = random::ordinal(rng, {0, 3, 4, 2});
    CHECK(order_type(initial_segment(3, a)) == a);
  }
}

TEST_CASE("ideal membership by recursion") {
  CHECK(fubini_positive(CubeSet::full(2)));
  // every column finite
  CubeSet finite_cols = CubeSet::make(2, {}, {bits({1, 1}, {0}), bits({0, 1, 0, 1}, {0})});
  CHECK_FALSE(fubini_positive(finite_cols));
  CHECK(order_type(finite_cols) == Ordinal::omega());
  CHECK(fubini_positive(CubeSet::make(2, {}, {CubeSet::full(1), CubeSet::empty(1)})));
  CHECK(fubini_positive(evens));
  CHECK_FALSE(fubini_positive(bits({1, 1, 1}, {0})));
}

TEST_CASE("ideal recursion agrees with order type; indivisibility") {
  random::Rng rng(24);
  for (int i = 0; i < 600; ++i) {
    std::size_t d = random::uniform(rng, 1, 3);
    CubeSet a = random::cube_set(rng, d);
    CHECK(fubini_positive(a) == positive_by_type(a));
    CHECK((positive_by_type(a) || positive_by_type(complement(a))));
    CHECK(order_type(a) <= wpow(d));
  }
}

TEST_CASE("order type is monotone") {
  random::Rng rng(25);
  for (int i = 0; i < 300; ++i) {
    std::size_t d = random::uniform(rng, 1, 3);
    CubeSet a = random::cube_set(rng, d), b = random::cube_set(rng, d);
    CHECK(order_type(a & b) <= order_type(a));
    CHECK(order_type(a) <= order_type(a | b));
  }
}

TEST_CASE("select examples") {
  CHECK(select(CubeSet::full(2), O("w*2+3")) == Point{2, 3});
  CHECK(select(evens, N(0)) == Point{0});
  for (std::uint64_t k = 0; k < 50; ++k) CHECK(select(evens, N(k)) == Point{2 * k});
  CHECK_THROWS_AS(select(evens, Ordinal::omega()), DomainError);
  CHECK_THROWS_AS(select(CubeSet::empty(2), N(0)), DomainError);
  CubeSet a = CubeSet::make(2, {bits({0, 1}, {0})}, {CubeSet::full(1)});
  CHECK(select(a, N(0)) == Point{0, 1});
  CHECK(select(a, O("w+4")) == Point{2, 4});
}

TEST_CASE("rank matches a direct count on dimension-2 sets") {
  random::Rng rng(26);
  for (int i = 0; i < 150; ++i) {
    CubeSet a = random::cube_set(rng, 2);
    for (std::uint64_t col = 0; col < 8; ++col)
      for (std::uint64_t row = 0; row < 8; ++row) {
        if (!a.contains(Point{col, row})) continue;
        auto [omegas, finite] = brute_position(a, col, row);
        Ordinal expected = Ordinal::omega_pow(N(1), omegas) + N(finite);
        CHECK(rank(a, Point{col, row}) == expected);
        CHECK(select(a, expected) == Point{col, row});
      }
  }
}

TEST_CASE("select is the increasing enumeration") {
  random::Rng rng(27);
  for (int i = 0; i < 200; ++i) {
    std::size_t d = random::uniform(rng, 1, 3);
    CubeSet a = random::cube_set(rng, d);
    Ordinal type = order_type(a);
    if (type.is_zero()) continue;
    for (int k = 0; k < 10; ++k) {
      Ordinal xi = random::ordinal(rng, {0, 2, 3, d - 1});
      if (!(xi < type)) continue;
      Point p = select(a, xi);
      CHECK(a.contains(p));
      CHECK(rank(a, p) == xi);
    }
    // consecutive ordinals give lex-increasing points
    Ordinal xi;
    Point last = select(a, xi);
    for (int k = 0; k < 20; ++k) {
      Ordinal next = xi + N(1);
      if (!(next < type)) break;
      Point p = select(a, next);
      CHECK(last < p);
      last = p;
      xi = next;
    }
  }
}

TEST_CASE("copies") {
  CHECK(is_copy(CubeSet::full(2), wpow(2)));
  // evens in column 0 plus {w, w+1} inside w+2
  CubeSet with_tail = CubeSet::make(2, {evens, bits({1, 1}, {0})}, {CubeSet::empty(1)});
  CHECK(is_copy(with_tail, O("w+2")));
  CubeSet short_tail = CubeSet::make(2, {evens, bits({1}, {0})}, {CubeSet::empty(1)});
  CHECK_FALSE(is_copy(short_tail, O("w+2")));
  CHECK(order_type(short_tail) == O("w+1"));
  CHECK_THROWS_AS(is_copy(CubeSet::full(2), O("w^2+1")), DomainError);
  CHECK_THROWS_AS(is_copy(CubeSet::full(2), O("w*3")), DomainError);  // not inside the segment
}

TEST_CASE("separativity witness") {
  random::Rng rng(28);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    std::size_t d = random::uniform(rng, 1, 3);
    CubeSet a = random::cube_set(rng, d), b = random::cube_set(rng, d);
    if (!fubini_positive(a) || subset_mod_ideal(a, b)) continue;
    CubeSet c = a - b;
    CHECK(fubini_positive(c));
    CHECK(positive_by_type(c));
    CHECK((c & b).is_empty());
    CHECK(is_subset(c, a));
    ++checked;
  }
  CHECK(checked > 20);
}
