#include "doctest.h"
#include "ordcopies/error.hpp"
#include "ordcopies/forcing_expr.hpp"
#include "ordcopies/random.hpp"
#include "ordcopies/serialization.hpp"

using namespace ordcopies;

namespace {

Ordinal O(const char* s) { return Ordinal::parse(s); }
std::string text(const char* alpha) { return render(factorize(O(alpha))); }

ExprPtr fin_plus() { return positive(quotient(Ordinal::natural(1))); }

}  // namespace

TEST_CASE("factorize examples") {
  CHECK(text("w") == "(P(w)/fin)^+");
  CHECK(text("w^2") == "(rp(P(w)/fin))^+");
  CHECK(text("w^(w+2)*3 + w^5*2 + 4") ==
        "((rp^2(P(w^(w))/I_(w^(w))))^+)^3 x ((rp^4(P(w)/fin))^+)^2");
  CHECK(text("w*3") == "((P(w)/fin)^+)^3");
  CHECK(equal(factorize(O("w+5")), factorize(O("w"))));
  CHECK_THROWS_AS(factorize(O("7")), DomainError);
  CHECK_THROWS_AS(factorize(O("0")), DomainError);
}

TEST_CASE("factorize AST shape") {
  ExprPtr e = factorize(O("w^(w+2)*3 + w^5*2 + 4"));
  ExprPtr expected = product({
      power(positive(reduced_power(quotient(O("w")), 2)), 3),
      power(positive(reduced_power(quotient(O("1")), 4)), 2),
  });
  CHECK(equal(e, expected));
}

TEST_CASE("goldens for w*n and w^n") {
  for (std::uint64_t n = 1; n <= 6; ++n) {
    ExprPtr e = factorize(Ordinal::omega_pow(Ordinal::natural(1), n));
    ExprPtr expected = n == 1 ? fin_plus() : power(fin_plus(), n);
    CHECK(equal(e, expected));
  }
  for (std::uint64_t n = 1; n <= 5; ++n) {
    ExprPtr e = factorize(Ordinal::omega_pow(Ordinal::natural(n)));
    ExprPtr inner = quotient(Ordinal::natural(1));
    ExprPtr expected = positive(n == 1 ? inner : reduced_power(inner, n - 1));
    CHECK(equal(e, expected));
  }
}

TEST_CASE("simplify") {
  ExprPtr x = quotient(Ordinal::omega());
  CHECK(equal(simplify(reduced_power(x, 0)), x));
  CHECK(equal(simplify(product({x})), x));
  CHECK(equal(simplify(power(x, 1)), x));
  CHECK(equal(simplify(power(power(x, 2), 3)), power(x, 6)));
  CHECK(equal(simplify(reduced_power(reduced_power(x, 2), 1)), reduced_power(x, 3)));
  // factors sorted by gamma + r, equal factors merged
  ExprPtr a = positive(quotient(Ordinal::natural(1)));
  ExprPtr b = positive(reduced_power(quotient(Ordinal::natural(1)), 1));
  CHECK(equal(simplify(product({a, b, a})), product({b, power(a, 2)})));
  CHECK(equal(simplify(product({product({a}), power(a, 2)})), power(a, 3)));
}

TEST_CASE("tail drop and canonical output on random ordinals") {
  random::Rng rng(51);
  random::OrdinalShape shape{1, 4, 4, 3};
  int checked = 0;
  while (checked < 1000) {
    Ordinal alpha = random::ordinal(rng, shape);
    if (alpha.is_finite()) continue;
    ExprPtr e = factorize(alpha);
    CHECK(is_canonical(e));
    CHECK(equal(e, factorize(alpha + Ordinal::natural(random::uniform(rng, 0, 19)))));
    CHECK(equal(ForcingExpr::parse(render(e)), e));
    CHECK(equal(expr_from_json(expr_to_json(e)), e));
    ++checked;
  }
}

TEST_CASE("iteration form") {
  CHECK(render(iteration_form(O("w"))) == "(P(w)/fin)^+");
  CHECK(render(iteration_form(O("w+9"))) == "(P(w)/fin)^+");
  ExprPtr two = iteration_form(O("w*2"));
  REQUIRE(two->as<Iteration>());
  CHECK(two->as<Iteration>()->annotation == kIterationTail);
  CHECK(equal(two->as<Iteration>()->first, fin_plus()));
  ExprPtr limit = iteration_form(O("w^(w)"));
  REQUIRE(limit->as<Iteration>());
  CHECK(limit->as<Iteration>()->annotation == kLimitPowerTail);
  CHECK(iteration_form(O("w^(w*2)+3"))->as<Iteration>()->annotation == kLimitPowerTail);
  CHECK(iteration_form(O("w^(w+1)"))->as<Iteration>()->annotation == kIterationTail);
  CHECK(iteration_form(O("w^(w)*2"))->as<Iteration>()->annotation == kIterationTail);
  CHECK_THROWS_AS(iteration_form(O("3")), DomainError);
  CHECK(equal(ForcingExpr::parse(render(limit)), limit));
}

TEST_CASE("renderings") {
  CHECK(render(fin_plus(), RenderFormat::Latex) == "(P(\\omega)/\\mathrm{Fin})^+");
  CHECK(render(factorize(O("w^(w+1)")), RenderFormat::Latex) ==
        "(\\mathrm{rp}(P(\\omega^{\\omega})/\\mathcal{I}_{\\omega^{\\omega}}))^+");
  CHECK(render(fin_plus(), RenderFormat::Json) ==
        R"({"inner":{"gamma":"1","kind":"quotient"},"kind":"positive"})");
  CHECK(render(iteration_form(O("w*2"))) == "(P(w)/fin)^+ * \"" + std::string(kIterationTail) + "\"");
}

TEST_CASE("expression parser errors") {
  CHECK_THROWS_AS(ForcingExpr::parse("P(w^2)/fin"), ParseError);
  CHECK_THROWS_AS(ForcingExpr::parse("P(w*2)/fin"), ParseError);
  CHECK_THROWS_AS(ForcingExpr::parse("P(w^(w))/I_(w)"), ParseError);
  CHECK_THROWS_AS(ForcingExpr::parse("(P(w)/fin"), ParseError);
  CHECK_THROWS_AS(ForcingExpr::parse("rp(P(w)/fin) extra"), ParseError);
  CHECK(equal(ForcingExpr::parse("(P(w)/fin x P(w^(w))/I_(w^(w)))^2"),
              power(product({quotient(Ordinal::natural(1)), quotient(Ordinal::omega())}), 2)));
}
