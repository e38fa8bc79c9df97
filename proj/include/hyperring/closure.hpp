#pragma once

#include <map>
#include <optional>
#include <vector>

#include "hyperring/ideals.hpp"
#include "hyperring/report.hpp"
#include "hyperring/valuefield.hpp"

namespace hyperring {

// Certificate for 0 in r^n + a_1 r^(n-1) + ... + a_n.
struct DependenceWitness {
  std::size_t degree = 0;
  std::vector<Element> coefficients;  // a_1..a_n
  ElementSet resulting_set;           // value of the folded expression
};

struct IntegralityResult {
  bool integral = false;
  std::optional<DependenceWitness> witness;
};

struct ClosureResult {
  ElementSet ideal;
  ElementSet closure;
  std::map<Element, DependenceWitness> witnesses;  // members outside the ideal
  bool is_closed = false;
};

// The fold r^n + a_1 r^(n-1) + ... + a_n, with n = coefficients.size() >= 1.
ElementSet evaluate_dependence(const FiniteHyperring& ring, Element r,
                               const std::vector<Element>& coefficients);

// Direct search over a_i in I^i for n up to max_degree (default |R|+1).
// The witness has the least possible degree.
IntegralityResult is_integral_over_ideal(
    const FiniteHyperring& ring, const ElementSet& ideal, Element r,
    std::optional<std::size_t> max_degree = std::nullopt);

// J = I + (r) and J^n = I J^(n-1) for some n, scanning n up to one past the
// point where the chain J^n stops descending.
bool is_integral_power_criterion(const FiniteHyperring& ring,
                                 const ElementSet& ideal, Element r);

// Both oracles on every element; a disagreement throws
// InternalConsistencyError.
ClosureResult ideal_closure(const FiniteHyperring& ring, const ElementSet& ideal,
                            std::optional<std::size_t> max_degree = std::nullopt);

// Monic dependence with coefficients in a subhyperring. Throws
// PreconditionError when sub is not a subhyperring.
IntegralityResult is_integral_over_subring(
    const FiniteHyperring& ring, const ElementSet& sub, Element x,
    std::optional<std::size_t> max_degree = std::nullopt);
ElementSet subring_integral_closure(const FiniteHyperring& ring,
                                    const ElementSet& sub);

// All finite hyper-sums of terms y - y with y in I.
ElementSet difference_condition_set(const FiniteHyperring& ring,
                                    const ElementSet& ideal);

// Closure properties over every hyperideal of the ring, plus the
// hyperideal property of the closure under the difference condition.
Report closure_property_suite(const FiniteHyperring& ring);

namespace value {

struct ValueDependence {
  std::size_t degree = 0;
  std::vector<Value> coefficients;
};

struct ValueIntegrality {
  bool integral = false;
  std::optional<ValueDependence> witness;
};

// Integrality of x over a valuation subring W. A witness, when found, has
// been re-evaluated through the min-twice criterion.
ValueIntegrality integral_over_subring(const ValueHyperfield& field,
                                       const ValuationSubring& w,
                                       const Value& x,
                                       std::size_t max_degree = 8);
bool subring_closure_contains(const ValueHyperfield& field,
                              const ValuationSubring& w, const Value& x);

// r in V integral over the cut ideal I: some i <= max_degree with i*r in I^i.
ValueIntegrality integral_over_ideal(const ValueHyperfield& field,
                                     const CutIdeal& ideal, const Value& r,
                                     std::size_t max_degree = 8);

// Union of the scaling preimages {v : i*v in I^i}, i <= max_degree.
CutIdeal ideal_closure(const CutIdeal& ideal, std::size_t max_degree = 8);

}  // namespace value

}  // namespace hyperring
