#include "hyperring/ideals.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace hyperring {

namespace {

void require_width(const FiniteHyperring& ring, const ElementSet& set) {
  if (set.width() != ring.size()) {
    throw PreconditionError("set of width " + std::to_string(set.width()) +
                            " used with hyperring '" + ring.name() +
                            "' of size " + std::to_string(ring.size()));
  }
}

void require_ideal(const FiniteHyperring& ring, const ElementSet& set) {
  if (auto v = hyperideal_violation(ring, set)) {
    throw NotAHyperideal(ring.format(set) + " is not a hyperideal: " +
                             v->describe(ring),
                         *v);
  }
}

void require_proper_ideal(const FiniteHyperring& ring, const ElementSet& set,
                          const char* predicate) {
  require_ideal(ring, set);
  if (set.is_full()) {
    throw PreconditionError(std::string(predicate) +
                            " requires a proper hyperideal");
  }
}

}  // namespace

std::string IdealViolation::describe(const FiniteHyperring& ring) const {
  if (kind == Kind::difference) {
    return ring.label(a) + " - " + ring.label(b) + " = " + ring.format(escaped) +
           " is not contained in the set";
  }
  return ring.label(b) + " * " + ring.label(a) + " = " + ring.format(escaped) +
         " is not contained in the set";
}

std::optional<IdealViolation> hyperideal_violation(const FiniteHyperring& ring,
                                                   const ElementSet& set) {
  ring.require_verified();
  require_width(ring, set);
  if (set.empty()) throw PreconditionError("a hyperideal must be nonempty");
  for (auto a : set) {
    for (auto b : set) {
      const auto& d = ring.add(a, ring.neg(b));
      if (!d.subset_of(set)) {
        return IdealViolation{IdealViolation::Kind::difference, a, b, d};
      }
    }
  }
  for (auto a : set) {
    for (Element r = 0; r < ring.size(); ++r) {
      if (!set.contains(ring.mul(r, a))) {
        return IdealViolation{IdealViolation::Kind::absorption, a, r,
                              ring.singleton(ring.mul(r, a))};
      }
    }
  }
  return std::nullopt;
}

bool is_hyperideal(const FiniteHyperring& ring, const ElementSet& set) {
  return !hyperideal_violation(ring, set).has_value();
}

ElementSet ideal_generated_by(const FiniteHyperring& ring,
                              const ElementSet& gens) {
  ring.require_verified();
  require_width(ring, gens);
  auto current = gens;
  current.insert(ring.zero());
  while (true) {
    auto next = current;
    for (auto a : current) {
      for (Element r = 0; r < ring.size(); ++r) next.insert(ring.mul(r, a));
      for (auto b : current) next |= ring.add(a, ring.neg(b));
    }
    if (next == current) return current;
    current = next;
  }
}

ElementSet ideal_sum(const FiniteHyperring& ring, const ElementSet& i,
                     const ElementSet& j) {
  require_width(ring, i);
  require_width(ring, j);
  return ideal_generated_by(ring, ring.add_sets(i, j));
}

ElementSet ideal_product(const FiniteHyperring& ring, const ElementSet& i,
                         const ElementSet& j) {
  require_width(ring, i);
  require_width(ring, j);
  auto gens = ring.empty_set();
  for (auto a : i) {
    for (auto b : j) gens.insert(ring.mul(a, b));
  }
  return ideal_generated_by(ring, gens);
}

ElementSet ideal_power(const FiniteHyperring& ring, const ElementSet& i,
                       std::size_t n) {
  ring.require_verified();
  if (n == 0) return ring.full_set();
  auto result = i;
  for (std::size_t k = 1; k < n; ++k) result = ideal_product(ring, result, i);
  return result;
}

ElementSet radical(const FiniteHyperring& ring, const ElementSet& i) {
  ring.require_verified();
  require_width(ring, i);
  auto out = ring.empty_set();
  for (Element x = 0; x < ring.size(); ++x) {
    Element power = x;
    for (std::size_t n = 1; n <= ring.size(); ++n) {
      if (i.contains(power)) {
        out.insert(x);
        break;
      }
      power = ring.mul(power, x);
    }
  }
  return out;
}

ElementSet nilradical(const FiniteHyperring& ring) {
  ring.require_verified();
  return radical(ring, ring.singleton(ring.zero()));
}

bool is_prime(const FiniteHyperring& ring, const ElementSet& i) {
  require_proper_ideal(ring, i, "is_prime");
  for (Element a = 0; a < ring.size(); ++a) {
    for (Element b = a; b < ring.size(); ++b) {
      if (i.contains(ring.mul(a, b)) && !i.contains(a) && !i.contains(b)) {
        return false;
      }
    }
  }
  return true;
}

bool is_primary(const FiniteHyperring& ring, const ElementSet& i) {
  require_proper_ideal(ring, i, "is_primary");
  auto rad = radical(ring, i);
  for (Element x = 0; x < ring.size(); ++x) {
    for (Element y = 0; y < ring.size(); ++y) {
      if (i.contains(ring.mul(x, y)) && !i.contains(x) && !rad.contains(y)) {
        return false;
      }
    }
  }
  return true;
}

bool is_maximal(const FiniteHyperring& ring, const ElementSet& i) {
  require_proper_ideal(ring, i, "is_maximal");
  // Any strictly larger ideal contains some x outside I, hence <I, x>.
  for (auto x : i.complement()) {
    auto grown = i;
    grown.insert(x);
    if (!ideal_generated_by(ring, grown).is_full()) return false;
  }
  return true;
}

bool is_normal(const FiniteHyperring& ring, const ElementSet& i) {
  require_ideal(ring, i);
  for (Element r = 0; r < ring.size(); ++r) {
    auto shifted = ring.add_sets(ring.singleton(r), i);
    auto back = ring.add_sets(shifted, ring.singleton(ring.neg(r)));
    if (!back.subset_of(i)) return false;
  }
  return true;
}

std::vector<ElementSet> enumerate_hyperideals(const FiniteHyperring& ring,
                                              EnumerationMode mode) {
  ring.require_verified();
  const auto n = ring.size();
  std::vector<ElementSet> out;

  if (mode == EnumerationMode::subset_scan) {
    if (n > kSubsetScanLimit) {
      throw PreconditionError(
          "subset scan refuses carriers over 20 elements; use incremental "
          "mode");
    }
    std::vector<Element> others;
    for (Element x = 0; x < n; ++x) {
      if (x != ring.zero()) others.push_back(x);
    }
    const std::uint64_t count = std::uint64_t{1} << others.size();
    for (std::uint64_t pick = 0; pick < count; ++pick) {
      auto set = ring.singleton(ring.zero());
      for (std::size_t k = 0; k < others.size(); ++k) {
        if ((pick >> k) & 1u) set.insert(others[k]);
      }
      if (is_hyperideal(ring, set)) out.push_back(set);
    }
  } else {
    std::set<ElementSet> seen;
    std::deque<ElementSet> queue;
    auto zero = ring.singleton(ring.zero());
    seen.insert(zero);
    queue.push_back(zero);
    while (!queue.empty()) {
      auto current = queue.front();
      queue.pop_front();
      for (auto x : current.complement()) {
        auto grown = current;
        grown.insert(x);
        auto next = ideal_generated_by(ring, grown);
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
    out.assign(seen.begin(), seen.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

QuotientResult quotient_by_normal_ideal(const FiniteHyperring& ring,
                                        const ElementSet& i) {
  if (!is_normal(ring, i)) {
    throw PreconditionError(ring.format(i) +
                            " is not a normal hyperideal; quotient undefined");
  }
  const auto n = ring.size();

  std::vector<ElementSet> cosets;
  std::vector<Element> coset_of(n, n);
  for (Element x = 0; x < n; ++x) {
    auto c = ring.add_sets(ring.singleton(x), i);
    if (!c.contains(x)) {
      throw InternalConsistencyError("coset of " + ring.label(x) +
                                     " misses its representative");
    }
    auto it = std::find(cosets.begin(), cosets.end(), c);
    if (it == cosets.end()) {
      for (auto& other : cosets) {
        if (!(other & c).empty()) {
          throw InternalConsistencyError("cosets " + ring.format(other) +
                                         " and " + ring.format(c) +
                                         " overlap without being equal");
        }
      }
      coset_of[x] = cosets.size();
      cosets.push_back(c);
    } else {
      coset_of[x] = static_cast<Element>(it - cosets.begin());
    }
  }

  const auto m = cosets.size();
  std::vector<std::vector<FiniteHyperring::AddCell>> add(
      m, std::vector<FiniteHyperring::AddCell>(m));
  std::vector<std::vector<Element>> mul(m, std::vector<Element>(m));
  for (Element p = 0; p < m; ++p) {
    for (Element q = 0; q < m; ++q) {
      std::optional<ElementSet> sum_cell;
      std::optional<Element> product;
      for (auto x : cosets[p]) {
        for (auto y : cosets[q]) {
          ElementSet cell(m);
          for (auto z : ring.add(x, y)) cell.insert(coset_of[z]);
          auto prod = coset_of[ring.mul(x, y)];
          if (sum_cell && *sum_cell != cell) {
            throw InternalConsistencyError(
                "coset addition depends on representatives");
          }
          if (product && *product != prod) {
            throw InternalConsistencyError(
                "coset multiplication depends on representatives");
          }
          sum_cell = cell;
          product = prod;
        }
      }
      add[p][q] = sum_cell->elements();
      mul[p][q] = *product;
    }
  }

  std::vector<std::string> labels;
  for (auto& c : cosets) labels.push_back(ring.format(c));
  FiniteHyperring quotient(ring.name() + "/" + ring.format(i),
                           std::move(labels), coset_of[ring.zero()],
                           coset_of[ring.one()], add, std::move(mul));
  auto report = verify_axioms(quotient);
  if (!report.passed()) {
    throw InternalConsistencyError("quotient " + quotient.name() +
                                   " fails axiom " +
                                   report.violations.front().axiom);
  }
  HomomorphismTable projection{ring, quotient, coset_of};
  return QuotientResult{std::move(quotient), std::move(projection),
                        std::move(cosets)};
}

IdealHandle::IdealHandle(const FiniteHyperring& ring, ElementSet set)
    : ring_(&ring), set_(set) {
  require_ideal(ring, set_);
}

void IdealHandle::require_same_ring(const IdealHandle& other) const {
  if (ring_ != other.ring_) {
    throw PreconditionError("ideals belong to different hyperrings");
  }
}

bool IdealHandle::is_prime() const {
  if (!prime_) prime_ = hyperring::is_prime(*ring_, set_);
  return *prime_;
}

bool IdealHandle::is_primary() const {
  if (!primary_) primary_ = hyperring::is_primary(*ring_, set_);
  return *primary_;
}

bool IdealHandle::is_normal() const {
  if (!normal_) normal_ = hyperring::is_normal(*ring_, set_);
  return *normal_;
}

bool IdealHandle::is_maximal() const {
  if (!maximal_) maximal_ = hyperring::is_maximal(*ring_, set_);
  return *maximal_;
}

IdealHandle IdealHandle::operator+(const IdealHandle& other) const {
  require_same_ring(other);
  return IdealHandle(*ring_, ideal_sum(*ring_, set_, other.set_), Unchecked{});
}

IdealHandle IdealHandle::operator*(const IdealHandle& other) const {
  require_same_ring(other);
  return IdealHandle(*ring_, ideal_product(*ring_, set_, other.set_),
                     Unchecked{});
}

IdealHandle IdealHandle::pow(std::size_t n) const {
  if (n == 0) throw PreconditionError("ideal powers start at 1");
  return IdealHandle(*ring_, ideal_power(*ring_, set_, n), Unchecked{});
}

IdealHandle IdealHandle::radical() const {
  return IdealHandle(*ring_, hyperring::radical(*ring_, set_), Unchecked{});
}

}  // namespace hyperring
