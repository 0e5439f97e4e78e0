#pragma once

#include "idpcheck/model.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace idpcheck {

struct RandomIdealOptions {
  std::size_t max_variables = 9;
  std::size_t max_generators = 6;
  /// Largest number of generators sharing one variable.
  std::size_t max_edge = 3;
  /// Chance that a variable divides a single generator.
  double private_probability = 0.1;
};

/// Minimal squarefree ideal over x1..xm with every variable used. Each
/// variable is assigned a random set of generators (an edge of the labeled
/// hypergraph). Draws that are not minimal are redrawn (up to a fixed number
/// of attempts, after which the minimalized draw is returned).
SquarefreeIdeal random_ideal(std::mt19937_64& rng, const RandomIdealOptions& options = {});

std::vector<SquarefreeIdeal> random_ideals(std::uint64_t seed, std::size_t count, const RandomIdealOptions& options = {});

}  // namespace idpcheck
