#include "ordcopies/forcing_expr.hpp"

#include <algorithm>
#include <cctype>
#include <optional>

#include "json.hpp"
#include "ordcopies/error.hpp"
#include "ordcopies/serialization.hpp"

namespace ordcopies {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

ExprPtr make(ForcingExpr::Node n) { return std::make_shared<const ForcingExpr>(std::move(n)); }

const Ordinal kOne = Ordinal::natural(1);

// gamma + r of a factor shaped ((rp^r(P(w^gamma)/I))^+)^s, if it has
// that shape.
std::optional<Ordinal> factor_key(const ExprPtr& e) {
  const ForcingExpr* cur = e.get();
  if (auto p = cur->as<Power>()) cur = p->inner.get();
  auto pos = cur->as<PositivePart>();
  if (!pos) return std::nullopt;
  cur = pos->inner.get();
  std::uint64_t r = 0;
  if (auto rp = cur->as<ReducedPowerIter>()) {
    r = rp->r;
    cur = rp->inner.get();
  }
  auto q = cur->as<QuotientAlgebra>();
  if (!q) return std::nullopt;
  return q->gamma + Ordinal::natural(r);
}

struct Counted {
  ExprPtr base;
  std::uint64_t count;
};

Counted strip_power(const ExprPtr& e) {
  if (auto p = e->as<Power>()) return {p->inner, p->s};
  return {e, 1};
}

bool needs_group(const ExprPtr& e) { return e->as<Product>() || e->as<Iteration>(); }

std::string render_text(const ExprPtr& e);
std::string render_latex(const ExprPtr& e);

std::string render_text(const ExprPtr& e) {
  return std::visit(
      overloaded{
          [](const QuotientAlgebra& q) -> std::string {
            if (q.gamma == kOne) return "P(w)/fin";
            std::string top = Ordinal::omega_pow(q.gamma).to_string();
            return "P(" + top + ")/I_(" + top + ")";
          },
          [](const ReducedPowerIter& rp) -> std::string {
            std::string head = rp.r == 1 ? "rp" : "rp^" + std::to_string(rp.r);
            return head + "(" + render_text(rp.inner) + ")";
          },
          [](const PositivePart& p) -> std::string { return "(" + render_text(p.inner) + ")^+"; },
          [](const Power& p) -> std::string {
            return "(" + render_text(p.inner) + ")^" + std::to_string(p.s);
          },
          [](const Product& p) -> std::string {
            std::string out;
            for (const auto& f : p.factors) {
              if (!out.empty()) out += " x ";
              out += needs_group(f) ? "(" + render_text(f) + ")" : render_text(f);
            }
            return out;
          },
          [](const Iteration& it) -> std::string {
            std::string first = needs_group(it.first) ? "(" + render_text(it.first) + ")" : render_text(it.first);
            return first + " * \"" + it.annotation + "\"";
          },
      },
      e->node());
}

std::string render_latex(const ExprPtr& e) {
  return std::visit(
      overloaded{
          [](const QuotientAlgebra& q) -> std::string {
            if (q.gamma == kOne) return "P(\\omega)/\\mathrm{Fin}";
            std::string top = Ordinal::omega_pow(q.gamma).to_latex();
            return "P(" + top + ")/\\mathcal{I}_{" + top + "}";
          },
          [](const ReducedPowerIter& rp) -> std::string {
            std::string head = rp.r == 1 ? "\\mathrm{rp}" : "\\mathrm{rp}^{" + std::to_string(rp.r) + "}";
            return head + "(" + render_latex(rp.inner) + ")";
          },
          [](const PositivePart& p) -> std::string { return "(" + render_latex(p.inner) + ")^+"; },
          [](const Power& p) -> std::string {
            return "(" + render_latex(p.inner) + ")^{" + std::to_string(p.s) + "}";
          },
          [](const Product& p) -> std::string {
            std::string out;
            for (const auto& f : p.factors) {
              if (!out.empty()) out += " \\times ";
              out += needs_group(f) ? "(" + render_latex(f) + ")" : render_latex(f);
            }
            return out;
          },
          [](const Iteration& it) -> std::string {
            std::string first =
                needs_group(it.first) ? "(" + render_latex(it.first) + ")" : render_latex(it.first);
            return first + " \\ast \\text{" + it.annotation + "}";
          },
      },
      e->node());
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  ExprPtr parse_all() {
    ExprPtr e = parse_iteration();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  ExprPtr parse_iteration() {
    ExprPtr first = parse_product();
    skip_ws();
    if (peek() != '*') return first;
    ++pos_;
    skip_ws();
    expect("\"");
    std::size_t close = text_.find('"', pos_);
    if (close == std::string_view::npos) fail("unterminated annotation");
    std::string label(text_.substr(pos_, close - pos_));
    pos_ = close + 1;
    return iteration(std::move(first), std::move(label));
  }

  ExprPtr parse_product() {
    std::vector<ExprPtr> factors{parse_unary()};
    for (;;) {
      skip_ws();
      if (peek() != 'x') break;
      ++pos_;
      factors.push_back(parse_unary());
    }
    if (factors.size() == 1) return factors.front();
    return product(std::move(factors));
  }

  ExprPtr parse_unary() {
    skip_ws();
    if (accept("rp")) {
      std::uint64_t r = 1;
      if (accept("^")) r = parse_natural();
      expect("(");
      ExprPtr inner = parse_iteration();
      skip_ws();
      expect(")");
      return reduced_power(std::move(inner), r);
    }
    if (accept("P(")) {
      Ordinal top = parse_balanced_ordinal();
      expect("/");
      Ordinal gamma = gamma_of(top);
      if (accept("fin")) {
        if (gamma != kOne) fail("'fin' names the ideal on w only");
        return quotient(gamma);
      }
      expect("I_(");
      Ordinal ideal_top = parse_balanced_ordinal();
      if (ideal_top != top) fail("ideal does not match the algebra");
      return quotient(gamma);
    }
    if (accept("(")) {
      ExprPtr inner = parse_iteration();
      skip_ws();
      expect(")");
      if (accept("^+")) return positive(std::move(inner));
      if (accept("^")) return power(std::move(inner), parse_natural());
      return inner;
    }
    fail("expected 'rp', 'P(' or '('");
  }

  // Reads up to the ')' closing an already consumed '('.
  Ordinal parse_balanced_ordinal() {
    int depth = 1;
    std::size_t start = pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '(') ++depth;
      if (c == ')' && --depth == 0) break;
      ++pos_;
    }
    if (depth != 0) fail("unbalanced parentheses");
    Ordinal o = Ordinal::parse(text_.substr(start, pos_ - start));
    ++pos_;
    return o;
  }

  Ordinal gamma_of(const Ordinal& top) {
    if (top.is_zero() || !is_indecomposable(top)) fail("algebra index must be a power of w");
    return top.leading_exponent();
  }

  std::uint64_t parse_natural() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
    return v;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) != tok) return false;
    pos_ += tok.size();
    return true;
  }
  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression parse error at column " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr ForcingExpr::parse(std::string_view text) { return ExprParser(text).parse_all(); }

ExprPtr quotient(Ordinal gamma) {
  if (gamma.is_zero()) throw DomainError("quotient: gamma must be positive");
  return make(QuotientAlgebra{std::move(gamma)});
}
ExprPtr reduced_power(ExprPtr inner, std::uint64_t r) { return make(ReducedPowerIter{std::move(inner), r}); }
ExprPtr positive(ExprPtr inner) { return make(PositivePart{std::move(inner)}); }
ExprPtr power(ExprPtr inner, std::uint64_t s) {
  if (s == 0) throw DomainError("power: exponent must be at least 1");
  return make(Power{std::move(inner), s});
}
ExprPtr product(std::vector<ExprPtr> factors) { return make(Product{std::move(factors)}); }
ExprPtr iteration(ExprPtr first, std::string annotation) {
  if (annotation.find('"') != std::string::npos) throw DomainError("iteration: annotation may not contain '\"'");
  return make(Iteration{std::move(first), std::move(annotation)});
}

bool equal(const ExprPtr& a, const ExprPtr& b) {
  if (a->node().index() != b->node().index()) return false;
  return std::visit(
      overloaded{
          [&](const QuotientAlgebra& x) { return x.gamma == b->as<QuotientAlgebra>()->gamma; },
          [&](const ReducedPowerIter& x) {
            auto y = b->as<ReducedPowerIter>();
            return x.r == y->r && equal(x.inner, y->inner);
          },
          [&](const PositivePart& x) { return equal(x.inner, b->as<PositivePart>()->inner); },
          [&](const Power& x) {
            auto y = b->as<Power>();
            return x.s == y->s && equal(x.inner, y->inner);
          },
          [&](const Product& x) {
            auto y = b->as<Product>();
            if (x.factors.size() != y->factors.size()) return false;
            for (std::size_t i = 0; i < x.factors.size(); ++i)
              if (!equal(x.factors[i], y->factors[i])) return false;
            return true;
          },
          [&](const Iteration& x) {
            auto y = b->as<Iteration>();
            return x.annotation == y->annotation && equal(x.first, y->first);
          },
      },
      a->node());
}

ExprPtr simplify(const ExprPtr& e) {
  return std::visit(
      overloaded{
          [&](const QuotientAlgebra&) { return e; },
          [&](const ReducedPowerIter& x) -> ExprPtr {
            ExprPtr inner = simplify(x.inner);
            if (x.r == 0) return inner;
            if (auto nested = inner->as<ReducedPowerIter>()) return reduced_power(nested->inner, x.r + nested->r);
            return reduced_power(inner, x.r);
          },
          [&](const PositivePart& x) { return positive(simplify(x.inner)); },
          [&](const Power& x) -> ExprPtr {
            ExprPtr inner = simplify(x.inner);
            if (auto nested = inner->as<Power>()) return power(nested->inner, x.s * nested->s);
            return x.s == 1 ? inner : power(inner, x.s);
          },
          [&](const Product& x) -> ExprPtr {
            std::vector<ExprPtr> flat;
            for (const auto& f : x.factors) {
              ExprPtr s = simplify(f);
              if (auto p = s->as<Product>())
                flat.insert(flat.end(), p->factors.begin(), p->factors.end());
              else
                flat.push_back(s);
            }
            std::stable_sort(flat.begin(), flat.end(), [](const ExprPtr& a, const ExprPtr& b) {
              auto ka = factor_key(a), kb = factor_key(b);
              if (!ka || !kb) return ka.has_value() && !kb.has_value();
              return *ka > *kb;
            });
            std::vector<Counted> merged;
            for (const auto& f : flat) {
              Counted c = strip_power(f);
              if (!merged.empty() && equal(merged.back().base, c.base))
                merged.back().count += c.count;
              else
                merged.push_back(c);
            }
            std::vector<ExprPtr> out;
            for (auto& c : merged) out.push_back(c.count == 1 ? c.base : power(c.base, c.count));
            if (out.size() == 1) return out.front();
            return product(std::move(out));
          },
          [&](const Iteration& x) { return iteration(simplify(x.first), x.annotation); },
      },
      e->node());
}

ExprPtr factorize(const Ordinal& alpha) {
  if (alpha.is_finite())
    throw DomainError("factorize: " + alpha.to_string() + " is finite; P(alpha) is trivial below w");
  std::vector<ExprPtr> factors;
  for (const auto& t : alpha.terms()) {
    if (t.exponent.is_zero()) continue;  // the trailing natural k is dropped
    ExponentSplit split = split_exponent(t.exponent);
    factors.push_back(power(positive(reduced_power(quotient(split.gamma), split.r)), t.coeff));
  }
  return simplify(product(std::move(factors)));
}

ExprPtr iteration_form(const Ordinal& alpha) {
  if (alpha.is_finite())
    throw DomainError("iteration_form: " + alpha.to_string() + " is finite; P(alpha) is trivial below w");
  if (alpha < Ordinal::omega_pow(kOne, 2)) return factorize(alpha);
  Ordinal head = alpha.without_finite_part();
  ExprPtr first = positive(quotient(kOne));
  if (is_indecomposable(head) && head.leading_exponent().is_limit())
    return iteration(first, std::string(kLimitPowerTail));
  return iteration(first, std::string(kIterationTail));
}

std::string render(const ExprPtr& e, RenderFormat fmt) {
  switch (fmt) {
    case RenderFormat::Text: return render_text(e);
    case RenderFormat::Latex: return render_latex(e);
    case RenderFormat::Json: return expr_to_json(e).dump();
  }
  return {};
}

bool is_canonical(const ExprPtr& e) {
  return std::visit(
      overloaded{
          [](const QuotientAlgebra& q) { return q.gamma == kOne || q.gamma.is_limit(); },
          [](const ReducedPowerIter& x) {
            return x.r >= 1 && !x.inner->as<ReducedPowerIter>() && is_canonical(x.inner);
          },
          [](const PositivePart& x) { return is_canonical(x.inner); },
          [](const Power& x) { return x.s >= 2 && !x.inner->as<Power>() && is_canonical(x.inner); },
          [](const Product& x) {
            if (x.factors.size() < 2) return false;
            std::optional<Ordinal> prev;
            for (const auto& f : x.factors) {
              if (!is_canonical(f) || f->as<Product>()) return false;
              auto k = factor_key(f);
              if (!k) continue;
              if (prev && !(*k < *prev)) return false;
              prev = k;
            }
            return true;
          },
          [](const Iteration& x) { return is_canonical(x.first); },
      },
      e->node());
}

}  // namespace ordcopies
