#pragma once

// Seeded generation of small Krasner hyperrings by backtracking.
//
// Addition is described by the symmetric relation T(x,y,w) <=> -w in x+y,
// which is invariant under permuting x,y,w and under negating all three;
// deciding one orbit at a time makes commutativity and reversibility
// automatic. Multiplication tables are then searched with associativity and
// distributivity pruning. Every returned ring has passed verify_axioms.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperring/kernel.hpp"
#include "hyperring/random.hpp"

namespace hyperring {

struct GeneratorOptions {
  std::size_t min_order = 2;
  std::size_t max_order = 5;
  std::size_t node_budget = 200000;  // search nodes per attempt
  int attempts = 200;                // fresh negations tried at the drawn order
};

// nullopt when the budget runs out.
std::optional<FiniteHyperring> random_hyperring(
    Rng& rng, const GeneratorOptions& opts = {},
    const std::string& name = "random");

struct GeneratedBatch {
  std::vector<FiniteHyperring> rings;
  std::size_t timeouts = 0;
};

// count structures from one seed; names are "random_<seed>_<index>".
GeneratedBatch random_hyperrings(std::uint64_t seed, std::size_t count,
                                 const GeneratorOptions& opts = {});

}  // namespace hyperring
