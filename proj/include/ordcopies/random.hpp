#pragma once

// Random instances for property checks.  Everything is driven by an
// explicit std::mt19937_64, so a seed reproduces a run.

#include <random>

#include "ordcopies/cube_set.hpp"
#include "ordcopies/fin_poset.hpp"
#include "ordcopies/layered_set.hpp"
#include "ordcopies/ordinal.hpp"

namespace ordcopies::random {

using Rng = std::mt19937_64;

std::uint64_t uniform(Rng& rng, std::uint64_t lo, std::uint64_t hi);  // inclusive
bool coin(Rng& rng, double p = 0.5);

struct OrdinalShape {
  std::size_t depth = 1;       // exponent nesting below the top level
  std::size_t max_terms = 3;
  std::uint64_t max_coeff = 3;
  std::uint64_t max_finite_exponent = 3;
};
Ordinal ordinal(Rng& rng, const OrdinalShape& shape = {});

struct CubeShape {
  std::size_t max_prefix = 2;
  std::size_t max_cycle = 3;
  double p_constant = 0.25;  // chance a child is outright empty or full
  double p_bit = 0.5;
};
CubeSet cube_set(Rng& rng, std::size_t dim, const CubeShape& shape = {});

NatSet nat_set(Rng& rng, std::size_t max_prefix = 4, std::size_t max_cycle = 4);

struct LayerShape {
  std::size_t max_prefix = 4;
  CubeShape columns{1, 2, 0.3, 0.5};
};
LayeredSet layered_set(Rng& rng, const LayerShape& shape = {});

// A random reflexive, transitive relation on n points.
FinPoset preorder(Rng& rng, std::size_t n, double density = 0.3);

}  // namespace ordcopies::random
