// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

#include <cstdio>
#include <string>

#include "ordcopies/verify.hpp"

namespace {

struct Criterion {
  int number;
  const char* title;
  const char* suite;
};

constexpr Criterion kCriteria[] = {
    {1, "fubini recursion agrees with order type w^n", "oracle-agreement"},
    {2, "A or its complement is a copy of w^n", "indivisibility"},
    {3, "ordinal + and * agree with the lex model", "lex-model"},
    {4, "increasing sums of powers collapse to the last term", "cofinal-sum"},
    {5, "S-set laws on layered sets", "s-set-laws"},
    {6, "fusion output positive and decreasing mod I", "fusion"},
    {7, "separative quotient commutes with products", "sq-product"},
    {8, "factorizer goldens and tail-drop law", "factorizer"},
    {9, "select is defined below the type, monotone, inside A", "enumeration"},
    {10, "A minus B witnesses A not below B", "separativity-witness"},
};

}  // namespace

int main() {
  int failed = 0;
  for (const auto& c : kCriteria) {
    auto r = ordcopies::verify::run_suite(c.suite);
    std::string limit = r.time_limit > 0 ? " / limit " + std::to_string(static_cast<int>(r.time_limit)) + "s" : "";
    std::printf("%s criterion %d: %s [%zu cases, %.2fs%s]\n", r.passed ? "PASS" : "FAIL", c.number, c.title,
                r.cases, r.seconds, limit.c_str());
    for (const auto& f : r.failures) std::printf("    %s\n", f.c_str());
    if (!r.passed) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(kCriteria)) - failed, std::size(kCriteria));
  return failed == 0 ? 0 : 1;
}
