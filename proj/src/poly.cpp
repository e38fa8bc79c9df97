#include "hyperring/poly.hpp"

#include <algorithm>
#include <set>

namespace hyperring {

namespace {

void require_same_ring(const HyperPolynomial& f, const HyperPolynomial& g) {
  if (&f.ring() != &g.ring()) {
    throw PreconditionError("polynomials over different hyperrings");
  }
}

// Every choice of one element per cell, as trimmed polynomials.
std::vector<HyperPolynomial> expand(const FiniteHyperring& ring,
                                    const std::vector<ElementSet>& cells,
                                    std::size_t bound) {
  std::set<std::vector<Element>> seen;
  std::vector<Element> pick(cells.size());
  std::vector<HyperPolynomial> out;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == cells.size()) {
      HyperPolynomial p(ring, pick, bound);
      if (seen.insert(p.coefficients()).second) out.push_back(std::move(p));
      return;
    }
    for (auto c : cells[i]) {
      pick[i] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

HyperPolynomial::HyperPolynomial(const FiniteHyperring& ring,
                                 std::vector<Element> coefficients,
                                 std::size_t bound)
    : ring_(&ring), coeffs_(std::move(coefficients)), bound_(bound) {
  for (auto c : coeffs_) {
    if (c >= ring.size()) throw PreconditionError("coefficient out of range");
  }
  while (!coeffs_.empty() && coeffs_.back() == ring.zero()) coeffs_.pop_back();
  if (coeffs_.size() > bound_ + 1) {
    throw PreconditionError("degree " + std::to_string(coeffs_.size() - 1) +
                            " exceeds the bound " + std::to_string(bound_));
  }
}

HyperPolynomial HyperPolynomial::zero(const FiniteHyperring& ring,
                                      std::size_t bound) {
  return HyperPolynomial(ring, {}, bound);
}

Element HyperPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : ring_->zero();
}

ElementSet HyperPolynomial::evaluate(Element t) const {
  if (coeffs_.empty()) return ring_->singleton(ring_->zero());
  std::vector<Element> terms;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    terms.push_back(ring_->mul(coeffs_[i], ring_->pow(t, i)));
  }
  return hyper_sum_fold(*ring_, terms);
}

std::string HyperPolynomial::to_string() const {
  if (coeffs_.empty()) return ring_->label(ring_->zero());
  std::string out;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    if (coeffs_[k] == ring_->zero()) continue;
    if (!out.empty()) out += " + ";
    out += ring_->label(coeffs_[k]);
    if (k >= 1) out += "*x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

std::strong_ordering HyperPolynomial::operator<=>(
    const HyperPolynomial& other) const {
  if (auto c = coeffs_.size() <=> other.coeffs_.size(); c != 0) return c;
  return coeffs_ <=> other.coeffs_;
}

std::vector<HyperPolynomial> poly_add(const HyperPolynomial& f,
                                      const HyperPolynomial& g) {
  require_same_ring(f, g);
  const auto& ring = f.ring();
  auto len = std::max(f.coefficients().size(), g.coefficients().size());
  std::vector<ElementSet> cells;
  for (std::size_t i = 0; i < len; ++i) {
    cells.push_back(ring.add(f.coefficient(i), g.coefficient(i)));
  }
  return expand(ring, cells, std::min(f.bound(), g.bound()));
}

std::vector<HyperPolynomial> poly_mul(const HyperPolynomial& f,
                                      const HyperPolynomial& g) {
  require_same_ring(f, g);
  const auto& ring = f.ring();
  auto bound = std::min(f.bound(), g.bound());
  if (f.is_zero() || g.is_zero()) return {HyperPolynomial::zero(ring, bound)};
  auto degree = static_cast<std::size_t>(f.degree() + g.degree());
  if (degree > bound) {
    throw PreconditionError("product degree " + std::to_string(degree) +
                            " exceeds the bound " + std::to_string(bound));
  }
  std::vector<ElementSet> cells;
  for (std::size_t k = 0; k <= degree; ++k) {
    std::vector<Element> terms;
    for (std::size_t i = 0; i <= k; ++i) {
      terms.push_back(ring.mul(f.coefficient(i), g.coefficient(k - i)));
    }
    cells.push_back(hyper_sum_fold(ring, terms));
  }
  return expand(ring, cells, bound);
}

}  // namespace hyperring
