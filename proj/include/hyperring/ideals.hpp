#pragma once

#include <optional>
#include <vector>

#include "hyperring/kernel.hpp"

namespace hyperring {

// Why a set fails to be a hyperideal: either a-b escapes the set, or r*a does.
struct IdealViolation {
  enum class Kind { difference, absorption } kind;
  Element a;
  Element b;          // b for a-b, the ambient r for r*a
  ElementSet escaped;  // the offending set a-b, or {r*a}
  std::string describe(const FiniteHyperring& ring) const;
};

class NotAHyperideal : public PreconditionError {
 public:
  NotAHyperideal(const std::string& what, IdealViolation v)
      : PreconditionError(what), violation_(v) {}
  const IdealViolation& violation() const noexcept { return violation_; }

 private:
  IdealViolation violation_;
};

// First violation in carrier order, or nullopt for a hyperideal.
// Throws PreconditionError on an empty set.
std::optional<IdealViolation> hyperideal_violation(const FiniteHyperring& ring,
                                                   const ElementSet& set);
bool is_hyperideal(const FiniteHyperring& ring, const ElementSet& set);

// Least hyperideal containing gens ({0} for an empty generator set).
ElementSet ideal_generated_by(const FiniteHyperring& ring,
                              const ElementSet& gens);

ElementSet ideal_sum(const FiniteHyperring& ring, const ElementSet& i,
                     const ElementSet& j);
ElementSet ideal_product(const FiniteHyperring& ring, const ElementSet& i,
                         const ElementSet& j);
// I^n with I^1 = I and I^0 = R.
ElementSet ideal_power(const FiniteHyperring& ring, const ElementSet& i,
                       std::size_t n);

// {x : x^n in I for some 1 <= n <= |R|}.
ElementSet radical(const FiniteHyperring& ring, const ElementSet& i);
ElementSet nilradical(const FiniteHyperring& ring);

// Prime, primary and maximal require a proper ideal (PreconditionError).
bool is_prime(const FiniteHyperring& ring, const ElementSet& i);
bool is_primary(const FiniteHyperring& ring, const ElementSet& i);
bool is_maximal(const FiniteHyperring& ring, const ElementSet& i);
// r + I - r contained in I for every r.
bool is_normal(const FiniteHyperring& ring, const ElementSet& i);

enum class EnumerationMode { subset_scan, incremental };

// All hyperideals in canonical ElementSet order. The subset scan refuses
// carriers over 20 elements; the incremental mode grows ideals one
// generator at a time and has no such limit.
std::vector<ElementSet> enumerate_hyperideals(
    const FiniteHyperring& ring,
    EnumerationMode mode = EnumerationMode::subset_scan);

inline constexpr std::size_t kSubsetScanLimit = 20;

struct QuotientResult {
  FiniteHyperring ring;
  HomomorphismTable projection;
  std::vector<ElementSet> cosets;  // coset k as a subset of the source
};

// R/I for a normal hyperideal I. The quotient ring is returned verified.
QuotientResult quotient_by_normal_ideal(const FiniteHyperring& ring,
                                        const ElementSet& i);

// A hyperideal bound to its ring, with write-once predicate caches.
// The ring must outlive the handle.
class IdealHandle {
 public:
  // Throws NotAHyperideal when set is not a hyperideal of ring.
  IdealHandle(const FiniteHyperring& ring, ElementSet set);

  const FiniteHyperring& ring() const noexcept { return *ring_; }
  const ElementSet& set() const noexcept { return set_; }
  bool is_proper() const noexcept { return !set_.is_full(); }

  bool is_prime() const;
  bool is_primary() const;
  bool is_normal() const;
  bool is_maximal() const;

  IdealHandle operator+(const IdealHandle& other) const;
  IdealHandle operator*(const IdealHandle& other) const;
  IdealHandle pow(std::size_t n) const;
  IdealHandle radical() const;

  bool operator==(const IdealHandle& other) const {
    return ring_ == other.ring_ && set_ == other.set_;
  }

 private:
  struct Unchecked {};
  IdealHandle(const FiniteHyperring& ring, ElementSet set, Unchecked)
      : ring_(&ring), set_(set) {}
  void require_same_ring(const IdealHandle& other) const;

  const FiniteHyperring* ring_;
  ElementSet set_;
  mutable std::optional<bool> prime_, primary_, normal_, maximal_;
};

}  // namespace hyperring
