// One line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>

#include "hyperring/suite.hpp"

using namespace hyperring;

int main() {
  constexpr std::uint64_t kSeed = 42;
  const auto rings = bundled_rings();
  const std::vector<std::pair<std::string, std::function<Report()>>> criteria{
      {"golden example tables and closures", criterion_golden_example},
      {"documented divergence on J", criterion_documented_divergence},
      {"witness search vs ideal-power criterion",
       [] { return criterion_oracle_equivalence(kSeed, 25); }},
      {"closure properties on every fixture ideal",
       [&] { return criterion_closure_properties(rings); }},
      {"closure is an ideal under the difference condition",
       [&] { return criterion_difference_condition(rings); }},
      {"cut closed forms vs window oracle (W=16, 200 cases)",
       [] { return criterion_value_consistency(kSeed, 200, 16); }},
      {"valuation battery on ranks 1 and 2",
       [] { return criterion_valuation_battery(kSeed); }},
      {"polynomial evaluation compatibility", criterion_poly_bridge},
  };

  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    std::string verdict, detail;
    try {
      auto report = criteria[k].second();
      verdict = report.passed() ? "PASS" : "FAIL";
      detail = std::to_string(report.entries().size()) + " checks";
      for (const auto& e : report.entries()) {
        if (!e.passed) {
          detail += "; first failure " + e.check + ": " + e.witness;
          break;
        }
      }
    } catch (const std::exception& e) {
      verdict = "FAIL";
      detail = std::string("exception: ") + e.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    all = all && verdict == "PASS";
    std::cout << "criterion " << k + 1 << ": " << verdict << "  " << criteria[k].first
              << " (" << detail << ", " << ms << " ms)\n";
  }
  return all ? 0 : 1;
}
