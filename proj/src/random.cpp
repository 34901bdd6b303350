#include "ordcopies/random.hpp"

#include <algorithm>

namespace ordcopies::random {

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Ordinal ordinal(Rng& rng, const OrdinalShape& shape) {
  std::size_t n = uniform(rng, 0, shape.max_terms);
  std::vector<Ordinal> exps;
  for (std::size_t i = 0; i < n; ++i) {
    if (shape.depth == 0) {
      exps.push_back(Ordinal::natural(uniform(rng, 0, shape.max_finite_exponent)));
    } else {
      OrdinalShape inner = shape;
      inner.depth -= 1;
      exps.push_back(ordinal(rng, inner));
    }
  }
  std::sort(exps.begin(), exps.end(), std::greater<>());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<OrdinalTerm> terms;
  for (auto& e : exps) terms.push_back(OrdinalTerm{std::move(e), uniform(rng, 1, shape.max_coeff)});
  return Ordinal::from_terms(std::move(terms));
}

CubeSet cube_set(Rng& rng, std::size_t dim, const CubeShape& shape) {
  if (dim == 0) return CubeSet::bit(coin(rng, shape.p_bit));
  auto child = [&]() {
    if (coin(rng, shape.p_constant)) return coin(rng) ? CubeSet::full(dim - 1) : CubeSet::empty(dim - 1);
    return cube_set(rng, dim - 1, shape);
  };
  std::vector<CubeSet> prefix, cycle;
  std::size_t p = uniform(rng, 0, shape.max_prefix);
  std::size_t c = uniform(rng, 1, shape.max_cycle);
  for (std::size_t i = 0; i < p; ++i) prefix.push_back(child());
  for (std::size_t i = 0; i < c; ++i) cycle.push_back(child());
  return CubeSet::make(dim, std::move(prefix), std::move(cycle));
}

NatSet nat_set(Rng& rng, std::size_t max_prefix, std::size_t max_cycle) {
  std::vector<bool> prefix(uniform(rng, 0, max_prefix)), cycle(uniform(rng, 1, max_cycle));
  for (std::size_t i = 0; i < prefix.size(); ++i) prefix[i] = coin(rng);
  for (std::size_t i = 0; i < cycle.size(); ++i) cycle[i] = coin(rng);
  return NatSet::periodic(std::move(prefix), std::move(cycle));
}

LayeredSet layered_set(Rng& rng, const LayerShape& shape) {
  std::size_t p = uniform(rng, 0, shape.max_prefix);
  std::vector<CubeSet> cols;
  for (std::size_t n = 0; n < p; ++n) cols.push_back(cube_set(rng, n + 1, shape.columns));
  return LayeredSet(std::move(cols), nat_set(rng));
}

FinPoset preorder(Rng& rng, std::size_t n, double density) {
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rel[i][j] = i == j || coin(rng, density);
  // transitive closure
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rel[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (rel[k][j]) rel[i][j] = true;
  return FinPoset(std::move(rel));
}

}  // namespace ordcopies::random
