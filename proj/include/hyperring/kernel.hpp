#pragma once

// Finite, table-based Krasner hyperrings.
//
// Addition is a set-valued table, multiplication an ordinary table. A ring
// is built from its tables (structural checks only) and then run through
// verify_axioms, which records the verdict on the object. Operations that
// need the axioms (negation, folds, ideals) refuse unverified rings.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hyperring/element_set.hpp"
#include "hyperring/errors.hpp"

namespace hyperring {

enum class Verification { unchecked, passed, failed };

struct AxiomViolation {
  std::string axiom;
  std::vector<Element> witness;  // carrier indices, in the order named
  std::string detail;            // rendered with labels
};

struct VerificationReport {
  std::vector<AxiomViolation> violations;

  bool passed() const noexcept { return violations.empty(); }
  bool violates(const std::string& axiom) const;
};

class FiniteHyperring {
 public:
  using AddCell = std::vector<Element>;

  // Throws StructuralError on ragged tables, out-of-range indices,
  // duplicate labels, or carriers over kMaxCarrier.
  FiniteHyperring(std::string name, std::vector<std::string> labels,
                  Element zero, Element one,
                  const std::vector<std::vector<AddCell>>& add,
                  std::vector<std::vector<Element>> mul);

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(Element x) const { return labels_.at(x); }
  std::optional<Element> find(const std::string& label) const;

  Element zero() const noexcept { return zero_; }
  Element one() const noexcept { return one_; }

  const ElementSet& add(Element x, Element y) const { return add_[x][y]; }
  Element mul(Element x, Element y) const { return mul_[x][y]; }

  // x^n with x^0 = one.
  Element pow(Element x, std::size_t n) const;

  // Unique additive inverse. Requires a verified ring.
  Element neg(Element x) const;

  // Elementwise images {x*s : s in set}.
  ElementSet mul_set(Element x, const ElementSet& set) const;
  // Union of x+y over x in a, y in b.
  ElementSet add_sets(const ElementSet& a, const ElementSet& b) const;

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const { return ElementSet::full(size()); }
  ElementSet singleton(Element x) const {
    return ElementSet::singleton(size(), x);
  }
  ElementSet set_of(const std::vector<std::string>& labels) const;

  // "{0,b}" in carrier order.
  std::string format(const ElementSet& set) const;
  std::string format(std::span<const Element> elements) const;

  Verification verification() const noexcept { return status_; }
  bool verified() const noexcept { return status_ == Verification::passed; }
  void require_verified() const;

  bool same_tables(const FiniteHyperring& other) const;

 private:
  friend VerificationReport verify_axioms(FiniteHyperring& ring);

  std::string name_;
  std::vector<std::string> labels_;
  Element zero_;
  Element one_;
  std::vector<std::vector<ElementSet>> add_;
  std::vector<std::vector<Element>> mul_;
  std::vector<Element> neg_;  // filled once inverses are known to be unique
  Verification status_ = Verification::unchecked;
};

// Exhaustive check of every Krasner hyperring axiom (commutative with unit).
// Records the verdict on the ring. Witnesses are in carrier order.
VerificationReport verify_axioms(FiniteHyperring& ring);

struct Classification {
  bool is_hyperfield = false;
  bool is_hyperdomain = false;
};

// Refuses unverified rings (PreconditionError).
Classification classify(const FiniteHyperring& ring);

// All elements reachable by folding hyperaddition over the terms.
// Throws PreconditionError on an empty term list.
ElementSet hyper_sum_fold(const FiniteHyperring& ring,
                          std::span<const Element> terms);

// A map between two finite hyperrings, given by images of source elements.
struct HomomorphismTable {
  FiniteHyperring source;
  FiniteHyperring target;
  std::vector<Element> map;
};

// f(ab) = f(a)f(b) and f(a+b) is contained in f(a)+f(b), for all a, b.
// Throws StructuralError when the map does not fit the carriers.
VerificationReport check_homomorphism(const HomomorphismTable& h);

// Contains 0 and 1, closed under multiplication, negation and hyperaddition.
bool is_subhyperring(const FiniteHyperring& ring, const ElementSet& subset);

}  // namespace hyperring
