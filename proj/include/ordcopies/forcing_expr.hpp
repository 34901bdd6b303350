#pragma once

// Symbolic forcing expressions and the factorization of sq<P(alpha), ⊂>.
//
// Text rendering (round-trips through ForcingExpr::parse):
//   P(w)/fin                      quotient algebra for gamma = 1
//   P(w^(w))/I_(w^(w))            quotient algebra for other gamma
//   rp(X), rp^3(X)                iterated reduced power
//   (X)^+                         positive part
//   (X)^4                         finite power
//   X x Y                         product
//   X * "label"                   two-step iteration with a symbolic tail

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ordcopies/ordinal.hpp"

namespace ordcopies {

class ForcingExpr;
using ExprPtr = std::shared_ptr<const ForcingExpr>;

struct QuotientAlgebra {
  Ordinal gamma;  // P(w^gamma) / I_(w^gamma)
};
struct ReducedPowerIter {
  ExprPtr inner;
  std::uint64_t r = 1;
};
struct PositivePart {
  ExprPtr inner;
};
struct Power {
  ExprPtr inner;
  std::uint64_t s = 1;
};
struct Product {
  std::vector<ExprPtr> factors;
};
struct Iteration {
  ExprPtr first;
  std::string annotation;
};

enum class RenderFormat { Text, Json, Latex };

class ForcingExpr {
 public:
  using Node = std::variant<QuotientAlgebra, ReducedPowerIter, PositivePart, Power, Product, Iteration>;

  explicit ForcingExpr(Node node) : node_(std::move(node)) {}

  const Node& node() const { return node_; }
  template <typename T>
  const T* as() const { return std::get_if<T>(&node_); }

  static ExprPtr parse(std::string_view text);

 private:
  Node node_;
};

// Node constructors.
ExprPtr quotient(Ordinal gamma);
ExprPtr reduced_power(ExprPtr inner, std::uint64_t r);
ExprPtr positive(ExprPtr inner);
ExprPtr power(ExprPtr inner, std::uint64_t s);
ExprPtr product(std::vector<ExprPtr> factors);
ExprPtr iteration(ExprPtr first, std::string annotation);

// Deep structural equality.
bool equal(const ExprPtr& a, const ExprPtr& b);

// Canonical form: rp^0 and ^1 unwrapped, nested products flattened,
// equal adjacent factors merged into powers, (X^a)^b = X^(ab), singleton
// products unwrapped, factors sorted by gamma + r descending.
ExprPtr simplify(const ExprPtr& e);

// sq<P(alpha), ⊂> as a product over the CNF terms w^(gamma_i + r_i) * s_i
// of ((rp^r_i(P(w^gamma_i)/I_(w^gamma_i)))^+)^s_i, trailing natural
// dropped.  Throws DomainError for finite alpha.
ExprPtr factorize(const Ordinal& alpha);

inline constexpr std::string_view kIterationTail = "ω₁-closed separative atomless π";
inline constexpr std::string_view kLimitPowerTail = "(P(L)ˇ/Iˇ_{qˇ⁻¹[Γ₁]})^+";

// Two-step iteration form of P(alpha): for alpha < w*2 the single factor
// (P(w)/fin)^+; for alpha = w^gamma + k with gamma a limit, (P(w)/fin)^+
// followed by the quotient of P(L); otherwise (P(w)/fin)^+ followed by an
// abstract w1-closed tail.  Throws DomainError for finite alpha.
ExprPtr iteration_form(const Ordinal& alpha);

std::string render(const ExprPtr& e, RenderFormat fmt = RenderFormat::Text);

// Whether every quotient gamma is a limit or 1, products are sorted by
// strictly decreasing gamma + r, and no rp^0 or ^1 survives.
bool is_canonical(const ExprPtr& e);

}  // namespace ordcopies
