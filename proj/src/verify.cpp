#include "ordcopies/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "ordcopies/cube_set.hpp"
#include "ordcopies/error.hpp"
#include "ordcopies/fin_poset.hpp"
#include "ordcopies/forcing_expr.hpp"
#include "ordcopies/layered_set.hpp"
#include "ordcopies/random.hpp"
#include "ordcopies/serialization.hpp"

namespace ordcopies::verify {

namespace {

using random::Rng;

constexpr std::size_t kMaxReported = 5;
// sq(P) x sq(Q) for P, Q of up to five elements has at most 25 elements.
constexpr std::size_t kIsoCap = 32;

Ordinal N(std::uint64_t n) { return Ordinal::natural(n); }
Ordinal wpow(std::uint64_t n) { return Ordinal::omega_pow(N(n)); }

class Checker {
 public:
  explicit Checker(SuiteResult& r) : r_(r) {}

  // Records one checked instance; `describe` is only called on failure.
  void check(bool ok, const std::function<std::string()>& describe) {
    ++r_.cases;
    if (ok) return;
    ++failed_;
    if (r_.failures.size() < kMaxReported) r_.failures.push_back(describe());
  }
  void fail(std::string why) { check(false, [&] { return why; }); }

  bool clean() const { return failed_ == 0; }

 private:
  SuiteResult& r_;
  std::size_t failed_ = 0;
};

std::string json_of(const CubeSet& s) { return to_json(s).dump(); }
std::string json_of(const LayeredSet& s) { return to_json(s).dump(); }

// 1000 sets per dimension 1..3, reproducible from the seed.
std::vector<CubeSet> cube_sample(Rng& rng, std::size_t dim, std::size_t count) {
  std::vector<CubeSet> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random::cube_set(rng, dim));
  return out;
}

void oracle_agreement(Checker& c, Rng& rng) {
  for (std::size_t n = 1; n <= 3; ++n) {
    std::size_t positives = 0;
    for (const auto& a : cube_sample(rng, n, 1000)) {
      bool by_recursion = fubini_positive(a);
      bool by_type = order_type(a) == wpow(n);
      positives += by_recursion;
      c.check(by_recursion == by_type, [&] {
        return "dim " + std::to_string(n) + ": fubini=" + std::to_string(by_recursion) + " type=" +
               order_type(a).to_string() + " for " + json_of(a);
      });
    }
    // Both answers must actually occur in the sample.
    c.check(positives > 50 && positives < 950, [&] {
      return "dim " + std::to_string(n) + ": degenerate sample, " + std::to_string(positives) + "/1000 positive";
    });
  }
}

void indivisibility(Checker& c, Rng& rng) {
  for (std::size_t n = 1; n <= 3; ++n)
    for (const auto& a : cube_sample(rng, n, 1000)) {
      bool ok = order_type(a) == wpow(n) || order_type(complement(a)) == wpow(n);
      c.check(ok, [&] { return "neither A nor its complement is a copy of w^" + std::to_string(n) + ": " + json_of(a); });
    }
}

void lex_model(Checker& c, Rng&) {
  std::vector<Ordinal> values;
  for (std::uint64_t a = 0; a <= 3; ++a)
    for (std::uint64_t b = 0; b <= 3; ++b) values.push_back(Ordinal::omega_pow(N(1), a) + N(b));
  for (const auto& alpha : values)
    for (const auto& beta : values) {
      CubeSet ea = initial_segment(2, alpha), eb = initial_segment(2, beta);
      std::vector<CubeSet> parts{ea, eb};
      Ordinal sum_type = order_type(lex_sum(parts));
      c.check(sum_type == alpha + beta, [&] {
        return alpha.to_string() + " + " + beta.to_string() + ": arithmetic " + (alpha + beta).to_string() +
               ", lex model " + sum_type.to_string();
      });
      // alpha * beta is the type of beta x alpha, beta the major coordinate.
      Ordinal prod_type = order_type(lex_product(eb, ea));
      c.check(prod_type == alpha * beta, [&] {
        return alpha.to_string() + " * " + beta.to_string() + ": arithmetic " + (alpha * beta).to_string() +
               ", lex model " + prod_type.to_string();
      });
    }
}

void cofinal_sum(Checker& c, Rng& rng) {
  for (int i = 0; i < 200; ++i) {
    std::vector<Ordinal> exps;
    Ordinal e = random::ordinal(rng, {1, 2, 3, 3}) + N(1);
    std::size_t len = random::uniform(rng, 1, 6);
    for (std::size_t k = 0; k < len; ++k) {
      exps.push_back(e);
      Ordinal step = random::ordinal(rng, {1, 2, 2, 2});
      e = e + (step.is_zero() ? N(1) : step);
    }
    Ordinal sum;
    for (const auto& x : exps) sum = sum + Ordinal::omega_pow(x);
    c.check(sum == Ordinal::omega_pow(exps.back()), [&] {
      std::string s;
      for (const auto& x : exps) s += "w^(" + x.to_string() + ") ";
      return "sum of " + s + "= " + sum.to_string();
    });
  }
}

void s_set_laws(Checker& c, Rng& rng) {
  constexpr std::uint64_t kMaxM = 8;
  for (int i = 0; i < 500; ++i) {
    LayeredSet a = random::layered_set(rng), b = random::layered_set(rng);
    auto where = [&](const char* law, std::uint64_t m) {
      return [&, law, m] { return std::string(law) + " fails at m=" + std::to_string(m) + " for A=" + json_of(a) + " B=" + json_of(b); };
    };
    NatSet supp = support(a);
    LayeredSet join = a | b, meet = a & b, diff = a - b;
    bool some_empty = false, all_infinite = true, diff_some_empty = false;
    for (std::uint64_t m = 0; m <= kMaxM; ++m) {
      NatSet s = s_set(a, m);
      c.check(s.subset_of(supp & NatSet::from(m)), where("S^m inside supp above m", m));
      if (m > 0) c.check(s.subset_of(s_set(a, m - 1)), where("S^m decreasing in m", m));
      c.check(s.subset_of(s_set(join, m)), where("S^m monotone under A ⊆ A∪B", m));
      c.check(s_set(meet, m).subset_of(s), where("S^m monotone under A∩B ⊆ A", m));
      c.check(s_set(join, m) == (s | s_set(b, m)), where("S^m of a union", m));
      some_empty |= s.is_empty();
      all_infinite &= s.is_infinite();
      diff_some_empty |= s_set(diff, m).is_empty();
    }
    bool ideal = in_ideal(a);
    c.check(!ideal == all_infinite, where("positive iff every S^m infinite", kMaxM));
    c.check(ideal == some_empty, where("in I iff some S^m empty", kMaxM));
    if (supp.is_finite()) c.check(ideal, where("finite support implies I", 0));
    c.check(subset_mod_ideal(a, b) == diff_some_empty, where("⊆_I iff some S^m of the difference is empty", kMaxM));
    c.check(ideal == (order_type(a) != Ordinal::omega_pow(Ordinal::omega())), where("type w^w iff positive", 0));
  }
}

void fusion_properties(Checker& c, Rng& rng) {
  int done = 0;
  while (done < 100) {
    // A common periodic set D keeps every tail, and S, infinite.
    std::uint64_t period = random::uniform(rng, 1, 3), offset = random::uniform(rng, 0, period - 1);
    std::vector<bool> cycle(period, false);
    cycle[offset] = true;
    NatSet common = NatSet::periodic({}, cycle);
    std::size_t r = random::uniform(rng, 0, 3);
    std::vector<LayeredSet> as;
    for (std::size_t n = 0; n <= r + 1; ++n) {
      LayeredSet x = random::layered_set(rng);
      as.push_back(LayeredSet(x.prefix(), x.tail() | common));
    }
    NatSet s = common & (random::coin(rng) ? NatSet::all() : NatSet::from(random::uniform(rng, 0, 6)));
    std::span<const LayeredSet> head(as.data(), r + 1), longer(as.data(), r + 2);
    try {
      LayeredSet br = fusion(head, s);
      LayeredSet next = fusion(longer, s);
      c.check(!in_ideal(br), [&] { return "B_r in I for r=" + std::to_string(r) + ": " + json_of(br); });
      c.check(subset_mod_ideal(next, br), [&] {
        return "B_{r+1} not ⊆_I B_r for r=" + std::to_string(r) + ": " + json_of(next) + " vs " + json_of(br);
      });
      c.check(is_subset(br, as[r]), [&] { return "B_r not inside A_r"; });
      ++done;
    } catch (const DomainError& e) {
      c.fail(std::string("precondition rejected a valid input: ") + e.what());
      ++done;
    }
  }
}

std::vector<FinPoset> all_preorders(std::size_t n) {
  std::vector<FinPoset> out;
  const std::size_t off = n * n - n;
  for (std::uint64_t mask = 0; mask < (1ull << off); ++mask) {
    std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rel[i][j] = i == j || ((mask >> bit++) & 1u);
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n && transitive; ++j)
        for (std::size_t k = 0; k < n && transitive; ++k)
          if (rel[i][j] && rel[j][k] && !rel[i][k]) transitive = false;
    if (transitive) out.emplace_back(std::move(rel));
  }
  return out;
}

void sq_product(Checker& c, Rng& rng) {
  auto law = [&](const FinPoset& p, const FinPoset& q) {
    FinPoset lhs = separative_quotient(product(p, q));
    FinPoset rhs = product(separative_quotient(p), separative_quotient(q));
    c.check(find_isomorphism(lhs, rhs, kIsoCap).has_value(),
            [&] { return "sq(PxQ) !~ sq(P)xsq(Q) for P=\n" + p.to_text() + "Q=\n" + q.to_text(); });
    c.check(is_separative(lhs), [&] { return "sq(PxQ) not separative for P=\n" + p.to_text() + "Q=\n" + q.to_text(); });
    c.check(find_isomorphism(separative_quotient(lhs), lhs, kIsoCap).has_value(),
            [&] { return "sq not idempotent on sq(PxQ) for P=\n" + p.to_text() + "Q=\n" + q.to_text(); });
  };
  std::vector<FinPoset> small;
  for (std::size_t n = 1; n <= 3; ++n)
    for (auto& p : all_preorders(n)) small.push_back(std::move(p));
  for (const auto& p : small)
    for (const auto& q : small) law(p, q);
  for (int i = 0; i < 500; ++i) {
    FinPoset p = random::preorder(rng, random::uniform(rng, 1, 5), 0.25);
    FinPoset q = random::preorder(rng, random::uniform(rng, 1, 5), 0.25);
    law(p, q);
  }
}

void factorizer_goldens(Checker& c, Rng& rng) {
  ExprPtr fin = quotient(N(1));
  for (std::uint64_t n = 1; n <= 6; ++n) {
    Ordinal alpha = Ordinal::omega_pow(N(1), n);
    ExprPtr expected = n == 1 ? positive(fin) : power(positive(fin), n);
    ExprPtr got = factorize(alpha);
    c.check(equal(got, expected), [&] { return "factorize(" + alpha.to_string() + ") = " + render(got); });
  }
  for (std::uint64_t n = 1; n <= 5; ++n) {
    Ordinal alpha = wpow(n);
    ExprPtr expected = positive(n == 1 ? fin : reduced_power(fin, n - 1));
    ExprPtr got = factorize(alpha);
    c.check(equal(got, expected), [&] { return "factorize(" + alpha.to_string() + ") = " + render(got); });
  }
  int done = 0;
  while (done < 200) {
    Ordinal alpha = random::ordinal(rng, {1, 4, 4, 4});
    if (alpha.is_finite()) continue;
    Ordinal k = N(random::uniform(rng, 0, 19));
    ExprPtr a = factorize(alpha), b = factorize(alpha + k);
    c.check(equal(a, b) && is_canonical(a), [&] {
      return "factorize(" + alpha.to_string() + ") = " + render(a) + " but factorize(+" + k.to_string() + ") = " + render(b);
    });
    ++done;
  }
}

void enumeration(Checker& c, Rng& rng) {
  for (int i = 0; i < 500; ++i) {
    std::size_t n = random::uniform(rng, 1, 3);
    CubeSet a = random::cube_set(rng, n);
    Ordinal type = order_type(a);
    random::OrdinalShape below_wn{0, 2, 3, n - 1};
    Ordinal xi = random::ordinal(rng, below_wn), zeta = random::ordinal(rng, below_wn);
    auto attempt = [&](const Ordinal& x) -> std::optional<Point> {
      try {
        return select(a, x);
      } catch (const DomainError&) {
        return std::nullopt;
      }
    };
    auto p = attempt(xi), q = attempt(zeta);
    auto ctx = [&](const char* what) {
      return [&, what] { return std::string(what) + " xi=" + xi.to_string() + " zeta=" + zeta.to_string() + " type=" + type.to_string() + " A=" + json_of(a); };
    };
    c.check(p.has_value() == (xi < type), ctx("defined iff xi < type"));
    c.check(q.has_value() == (zeta < type), ctx("defined iff zeta < type"));
    if (p) c.check(a.contains(*p), ctx("selected point not in A"));
    if (p && q) c.check((xi < zeta) == (*p < *q) && (xi == zeta) == (*p == *q), ctx("not strictly monotone"));
  }
}

void separativity_witness(Checker& c, Rng& rng) {
  int done = 0;
  while (done < 500) {
    std::size_t n = random::uniform(rng, 1, 3);
    CubeSet a = random::cube_set(rng, n), b = random::cube_set(rng, n);
    if (!fubini_positive(a) || subset_mod_ideal(a, b)) continue;
    CubeSet w = a - b;
    c.check(fubini_positive(w) && order_type(w) == wpow(n) && (w & b).is_empty() && is_subset(w, a),
            [&] { return "witness fails for A=" + json_of(a) + " B=" + json_of(b); });
    ++done;
  }
}

void arithmetic_laws(Checker& c, Rng& rng) {
  for (int i = 0; i < 500; ++i) {
    Ordinal a = random::ordinal(rng), b = random::ordinal(rng), d = random::ordinal(rng);
    c.check((a + b) + d == a + (b + d), [&] { return "+ not associative on " + a.to_string() + ", " + b.to_string() + ", " + d.to_string(); });
    c.check((a * b) * d == a * (b * d), [&] { return "* not associative on " + a.to_string() + ", " + b.to_string() + ", " + d.to_string(); });
    c.check(a * (b + d) == a * b + a * d, [&] { return "left distributivity fails on " + a.to_string() + ", " + b.to_string() + ", " + d.to_string(); });
    Ordinal x = random::ordinal(rng, {1, 2, 2, 2}), y = random::ordinal(rng, {1, 2, 2, 2}), z = random::ordinal(rng, {1, 2, 2, 2});
    c.check(power(x, y + z) == power(x, y) * power(x, z), [&] { return "power law fails on " + x.to_string() + ", " + y.to_string() + ", " + z.to_string(); });
    c.check(Ordinal::parse(a.to_string()) == a, [&] { return "round trip fails on " + a.to_string(); });
  }
  const Ordinal w = Ordinal::omega();
  c.check(N(1) + w == w && w + N(1) != w, [] { return "1+w / w+1 witnesses"; });
  c.check(N(2) * w == w && w * N(2) != w, [] { return "2*w / w*2 witnesses"; });
}

struct Entry {
  SuiteInfo info;
  void (*run)(Checker&, Rng&);
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"oracle-agreement", "Fin^n recursion agrees with order type = w^n (1000 sets, n = 1..3)", 10}, oracle_agreement},
      {{"indivisibility", "A or its complement is a copy of w^n (1000 sets, n = 1..3)", 0}, indivisibility},
      {{"lex-model", "ordinal + and * agree with lex sum/product sets below w^2", 30}, lex_model},
      {{"cofinal-sum", "increasing sums of powers of w collapse to the last term (200 tuples)", 0}, cofinal_sum},
      {{"s-set-laws", "S-set bounds, monotonicity, unions and ideal tests (500 layered sets, m <= 8)", 0}, s_set_laws},
      {{"fusion", "fusion output positive and decreasing mod I (100 inputs)", 0}, fusion_properties},
      {{"sq-product", "sq(PxQ) ~ sq(P)xsq(Q), sq separative and idempotent", 60}, sq_product},
      {{"factorizer", "factorization goldens and tail-drop law", 0}, factorizer_goldens},
      {{"enumeration", "select defined iff xi < type, monotone, lands in A (500 pairs)", 0}, enumeration},
      {{"separativity-witness", "A\\B is a positive witness disjoint from B (500 pairs)", 0}, separativity_witness},
      {{"arithmetic-laws", "associativity, distributivity, power law, text round trip", 0}, arithmetic_laws},
  };
  return entries;
}

}  // namespace

const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> infos = [] {
    std::vector<SuiteInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

SuiteResult run_suite(std::string_view name, std::uint64_t seed) {
  for (const auto& e : registry()) {
    if (e.info.name != name) continue;
    SuiteResult r;
    r.name = std::string(e.info.name);
    r.summary = std::string(e.info.summary);
    r.time_limit = e.info.time_limit;
    Rng rng(seed);
    Checker checker(r);
    auto start = std::chrono::steady_clock::now();
    try {
      e.run(checker, rng);
    } catch (const std::exception& ex) {
      checker.fail(std::string("unexpected exception: ") + ex.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.passed = checker.clean() && (r.time_limit == 0 || r.seconds < r.time_limit);
    return r;
  }
  throw DomainError("unknown suite \"" + std::string(name) + "\"");
}

}  // namespace ordcopies::verify
