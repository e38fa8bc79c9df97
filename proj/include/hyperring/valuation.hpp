#pragma once

// Hypervaluations, valuation ideals and the valuation-theoretic checks.
//
// A finite carrier admits only the trivial hypervaluation (a finite totally
// ordered group is trivial), so the finite side is limited to checking
// given value tables. Everything nontrivial runs on T_G, where the identity
// map is the hypervaluation and V_k, ..., V_0 are its overrings.

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hyperring/kernel.hpp"
#include "hyperring/report.hpp"
#include "hyperring/valuefield.hpp"

namespace hyperring {

// Values of a map from a finite hyperring into Z^k with infinity.
struct FiniteHypervaluation {
  int rank = 1;
  std::vector<value::Value> values;  // indexed by element
};

// nu(0) = infinity, nu(x) = 0 otherwise.
FiniteHypervaluation trivial_valuation(const FiniteHyperring& ring);

// Axioms: "zero" (nu(x) infinite iff x = 0), "negation", "multiplicative",
// "ultrametric" (z in x+y gives nu(z) >= min) and "image_group" (the
// finite values form a subgroup). Exhaustive.
VerificationReport check_hypervaluation(const FiniteHyperring& ring,
                                        const FiniteHypervaluation& nu);

struct NuIdealVerdict {
  bool is_nu_ideal = true;
  // x in I, nu(y) >= nu(x), y not in I (rendered), when the verdict is false.
  std::optional<std::pair<std::string, std::string>> witness;
};

NuIdealVerdict is_nu_hyperideal(const FiniteHyperring& ring,
                                const FiniteHypervaluation& nu,
                                const ElementSet& ideal);

namespace value {

using ValueMap = std::function<Value(const Value&)>;

// The same axioms for a map T_G -> T_G, sampled on the window together with
// infinity; surjectivity is checked on the half window.
VerificationReport check_hypervaluation(const ValueHyperfield& field,
                                        const ValueMap& nu, int radius = 3);

// Upward closure of a subset of V under the identity valuation, on a window.
NuIdealVerdict is_nu_hyperideal(const ValueHyperfield& field,
                                const std::function<bool(const Value&)>& ideal,
                                int radius = 4);
NuIdealVerdict is_nu_hyperideal(const CutIdeal& ideal, int radius = 4);

// (I W) intersected with R_sub, where R_sub must be V. Throws
// PreconditionError for any other R_sub or mismatched ranks.
CutIdeal extend_contract(const CutIdeal& ideal, const ValuationSubring& w,
                         const ValuationSubring& r_sub);

// The closure of W in T_G agrees with W on the window.
bool valuation_ring_is_integrally_closed(const ValueHyperfield& field,
                                         const ValuationSubring& w,
                                         int radius = 3);

// Intersection of I W contracted to V over every intermediate valuation
// ring. Must equal the closure computed from scaling preimages
// (InternalConsistencyError otherwise).
CutIdeal closure_via_valuations(const ValueHyperfield& field,
                                const CutIdeal& ideal,
                                const ValuationSubring& r_sub);

struct ExistenceWitness {
  ValuationSubring ring;
  CutIdeal maximal_contraction;  // M_W intersected with V
};

// A valuation ring W from the enumerated family with M_W meeting V in P.
// Throws PreconditionError when P is not prime.
std::optional<ExistenceWitness> existence_witness(const ValueHyperfield& field,
                                                  const ValuationSubring& r_sub,
                                                  const CutIdeal& prime);

// Square dichotomy, product avoidance, power cancellation, the prime
// intersection of powers, primary intersections and directed radicals, on
// seeded samples.
Report valuation_ideal_suite(const ValueHyperfield& field, const ValuationSubring& r_sub,
                    std::uint64_t seed = 1, int cases = 40);

// The M-primary cuts cut(k, m e_k) form a chain of valuation ideals whose
// intersection is prime.
Report primary_chain_check(const ValueHyperfield& field,
                        const ValuationSubring& r_sub);

// For each prime P and each a on the window: P V[a] != V[a] or
// P V[1/a] != V[1/a].
Report extension_dichotomy_check(const ValueHyperfield& field, int radius = 3);

// Everything above plus the ideal-level checks, on random cuts.
Report valuation_battery(int rank, std::uint64_t seed = 1, int cases = 40);

}  // namespace value

}  // namespace hyperring
