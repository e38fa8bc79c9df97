#pragma once

// The acceptance battery, one Report per criterion.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "hyperring/kernel.hpp"
#include "hyperring/report.hpp"

namespace hyperring {

// Bundled fixtures, loaded and verified. A fixture that fails its axioms
// throws InternalConsistencyError.
std::vector<FiniteHyperring> bundled_rings();

Report criterion_golden_example();
Report criterion_documented_divergence();
// Fixtures plus `random` generated structures of order <= 5.
Report criterion_oracle_equivalence(std::uint64_t seed, std::size_t random);
Report criterion_closure_properties(const std::vector<FiniteHyperring>& rings);
Report criterion_difference_condition(const std::vector<FiniteHyperring>& rings);
Report criterion_value_consistency(std::uint64_t seed, int cases, int window);
Report criterion_valuation_battery(std::uint64_t seed);
Report criterion_poly_bridge();

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::size_t random = 25;
  int window = 16;
  int value_cases = 200;
  // Scopes: golden, divergence, oracle, remark, difference, value,
  // valuation, poly. Empty means all.
  std::set<std::string> only;
  // Restricts the finite scopes to one fixture when set.
  std::string fixture;
};

const std::vector<std::string>& suite_scopes();

Report run_suite(const SuiteOptions& opts);

}  // namespace hyperring
