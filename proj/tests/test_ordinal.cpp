#include "doctest.h"
#include "ordcopies/error.hpp"
#include "ordcopies/ordinal.hpp"
#include "ordcopies/random.hpp"

using namespace ordcopies;

namespace {

Ordinal O(const char* s) { return Ordinal::parse(s); }
Ordinal N(std::uint64_t n) { return Ordinal::natural(n); }
const Ordinal w = Ordinal::omega();

}  // namespace

TEST_CASE("compare") {
  CHECK(compare(N(0), w) == Cmp::LT);
  CHECK(compare(O("w+1"), w) == Cmp::GT);
  CHECK(compare(O("w^3*2+w"), O("w^3*2+w")) == Cmp::EQ);
  CHECK(compare(O("w^(w)"), O("w^5*100+7")) == Cmp::GT);
  CHECK(compare(O("w*2"), O("w+5")) == Cmp::GT);
}

TEST_CASE("addition") {
  CHECK(N(1) + w == w);
  CHECK(w + O("w^2") == O("w^2"));
  CHECK(O("w^2*3") + O("w^2+w") == O("w^2*4+w"));
  CHECK(O("w+1") + w == O("w*2"));
  CHECK(w + N(1) != w);
  CHECK(N(3) + N(4) == N(7));
}

TEST_CASE("multiplication") {
  CHECK(w * N(0) == N(0));
  CHECK(O("w^2") * w == O("w^3"));
  CHECK(N(2) * w == w);
  CHECK(w * N(2) != w);
  CHECK(O("w+1") * N(2) == O("w*2+1"));
  CHECK(O("w+1") * O("w+1") == O("w^2+w+1"));
}

TEST_CASE("power") {
  CHECK(power(w, N(0)) == N(1));
  CHECK(power(w, w) == Ordinal::omega_pow(w));
  CHECK(power(w, w).terms().size() == 1);
  CHECK(power(N(0), N(3)) == N(0));
  CHECK(power(N(1), w) == N(1));
  CHECK(power(N(2), N(10)) == N(1024));
  CHECK(power(N(2), O("w+1")) == O("w*2"));
  CHECK(power(N(3), O("w^2")) == O("w^(w)"));
  CHECK(power(O("w+1"), N(2)) == O("w^2+w+1"));
  CHECK(power(O("w^2"), w) == O("w^(w)"));
}

TEST_CASE("2^w is the supremum of 2^n") {
  // Oracle: 2^n is finite and strictly increasing, hence unbounded in w;
  // its supremum is the least infinite ordinal.
  Ordinal prev = N(0);
  for (std::uint64_t n = 0; n < 63; ++n) {
    Ordinal p = power(N(2), N(n));
    REQUIRE(p.is_finite());
    CHECK(p > prev);
    prev = p;
  }
  Ordinal sup = power(N(2), w);
  CHECK(sup > prev);
  CHECK(!sup.is_finite());
  CHECK(sup == w);  // least infinite ordinal
}

TEST_CASE("a^w for infinite a is the supremum of a^n") {
  random::Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    Ordinal a = random::ordinal(rng, {1, 2, 3, 2});
    if (a.is_finite()) continue;
    Ordinal limit = power(a, w);
    // a^n has leading exponent lead(a)*n; the supremum is w^(lead(a)*w).
    CHECK(limit == Ordinal::omega_pow(a.leading_exponent() * w));
    Ordinal an = N(1);
    for (int n = 0; n < 5; ++n) {
      CHECK(an < limit);
      an = an * a;
    }
  }
}

TEST_CASE("finite powers agree with repeated multiplication") {
  random::Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    Ordinal a = random::ordinal(rng, {1, 3, 3, 3});
    std::uint64_t n = random::uniform(rng, 0, 6);
    Ordinal folded = N(1);
    for (std::uint64_t k = 0; k < n; ++k) folded = folded * a;
    CHECK(power(a, N(n)) == folded);
  }
}

TEST_CASE("indecomposability") {
  CHECK(is_indecomposable(O("w^2")));
  CHECK_FALSE(is_indecomposable(O("w^2+w")));
  CHECK_FALSE(is_indecomposable(N(3)));
  CHECK(is_indecomposable(N(1)));
  CHECK_THROWS_AS(is_indecomposable(N(0)), DomainError);
  // w^d + w^d' is never indecomposable for d >= d' > 0
  for (std::uint64_t d = 1; d < 5; ++d)
    for (std::uint64_t e = 1; e <= d; ++e)
      CHECK_FALSE(is_indecomposable(Ordinal::omega_pow(N(d)) + Ordinal::omega_pow(N(e))));
}

TEST_CASE("split_exponent") {
  auto s = split_exponent(N(5));
  CHECK(s.gamma == N(1));
  CHECK(s.r == 4);
  s = split_exponent(w);
  CHECK(s.gamma == w);
  CHECK(s.r == 0);
  s = split_exponent(O("w*2+3"));
  CHECK(s.gamma == O("w*2"));
  CHECK(s.r == 3);
  CHECK_THROWS_AS(split_exponent(N(0)), DomainError);

  random::Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    Ordinal d = random::ordinal(rng);
    if (d.is_zero()) continue;
    auto sp = split_exponent(d);
    CHECK((sp.gamma == N(1) || sp.gamma.is_limit()));
    CHECK(sp.gamma + N(sp.r) == d);
  }
}

TEST_CASE("left_subtract inverts addition") {
  random::Rng rng(14);
  for (int i = 0; i < 300; ++i) {
    Ordinal a = random::ordinal(rng), c = random::ordinal(rng);
    CHECK(a + left_subtract(a, a + c) == a + c);
  }
  CHECK(left_subtract(N(1), w) == w);
  CHECK(left_subtract(w, O("w*3+2")) == O("w*2+2"));
  CHECK_THROWS_AS(left_subtract(w, N(5)), DomainError);
}

TEST_CASE("text grammar") {
  CHECK(O("w^(w+2)*3 + w^5*2 + 4").to_string() == "w^(w+2)*3+w^(5)*2+4");
  CHECK(O("  w ^ ( 2 ) ").to_string() == "w^(2)");
  CHECK(O("0").is_zero());
  CHECK(O("w^(0)*3") == N(3));
  CHECK(O("w*2").to_string() == "w*2");
  CHECK(O("w^(w^(w))").to_latex() == "\\omega^{\\omega^{\\omega}}");
  CHECK_THROWS_AS(O("w + w^2"), ParseError);
  CHECK_THROWS_AS(O("w + w"), ParseError);
  CHECK_THROWS_AS(O("3 + w"), ParseError);
  CHECK_THROWS_AS(O("w*0"), ParseError);
  CHECK_THROWS_AS(O("w+0"), ParseError);
  CHECK_THROWS_AS(O("v"), ParseError);
  CHECK_THROWS_AS(O("w^(2"), ParseError);
  CHECK_THROWS_AS(O(""), ParseError);
  CHECK_THROWS_AS(O("99999999999999999999999"), ParseError);
}

TEST_CASE("printed ordinals re-parse") {
  random::Rng rng(15);
  for (int i = 0; i < 300; ++i) {
    Ordinal a = random::ordinal(rng, {2, 3, 5, 4});
    CHECK(Ordinal::parse(a.to_string()) == a);
  }
}

TEST_CASE("algebraic laws on random ordinals") {
  random::Rng rng(16);
  for (int i = 0; i < 300; ++i) {
    Ordinal a = random::ordinal(rng), b = random::ordinal(rng), c = random::ordinal(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(compare(a, b) == (a < b ? Cmp::LT : a == b ? Cmp::EQ : Cmp::GT));
  }
}

TEST_CASE("power laws on random ordinals") {
  random::Rng rng(17);
  random::OrdinalShape base{1, 2, 2, 2}, expo{1, 2, 2, 2};
  for (int i = 0; i < 200; ++i) {
    Ordinal a = random::ordinal(rng, base), b = random::ordinal(rng, expo), c = random::ordinal(rng, expo);
    CHECK(power(a, b + c) == power(a, b) * power(a, c));
    CHECK(power(power(a, b), c) == power(a, b * c));
  }
}

TEST_CASE("cofinal sums collapse to the last term") {
  random::Rng rng(18);
  for (int i = 0; i < 100; ++i) {
    std::vector<Ordinal> exps;
    for (int k = 0; k < 5; ++k) exps.push_back(random::ordinal(rng, {1, 2, 3, 3}) + N(1));
    std::sort(exps.begin(), exps.end());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    Ordinal sum;
    for (const auto& e : exps) sum = sum + Ordinal::omega_pow(e);
    CHECK(sum == Ordinal::omega_pow(exps.back()));
  }
}

TEST_CASE("coefficient overflow is reported") {
  Ordinal big = N(std::numeric_limits<std::uint64_t>::max());
  CHECK_THROWS_AS(big + N(1), RepresentationLimit);
  CHECK_THROWS_AS(power(N(2), N(64)), RepresentationLimit);
}
