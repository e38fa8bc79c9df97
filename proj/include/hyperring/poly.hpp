#pragma once

// Degree-bounded polynomials over a finite Krasner hyperring. Both sum and
// product are set-valued, so these objects are kept apart from
// FiniteHyperring and never passed to verify_axioms.

#include <compare>
#include <string>
#include <vector>

#include "hyperring/kernel.hpp"

namespace hyperring {

inline constexpr std::size_t kDefaultDegreeBound = 8;

class HyperPolynomial {
 public:
  // Coefficients by degree; trailing zeros are trimmed. Throws
  // PreconditionError when the trimmed degree exceeds the bound.
  HyperPolynomial(const FiniteHyperring& ring, std::vector<Element> coefficients,
                  std::size_t bound = kDefaultDegreeBound);
  static HyperPolynomial zero(const FiniteHyperring& ring,
                              std::size_t bound = kDefaultDegreeBound);

  const FiniteHyperring& ring() const noexcept { return *ring_; }
  const std::vector<Element>& coefficients() const noexcept { return coeffs_; }
  std::size_t bound() const noexcept { return bound_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  // Coefficient of x^i, zero beyond the degree.
  Element coefficient(std::size_t i) const;

  // a_0 + a_1 t + ... + a_n t^n as a hyper-sum ({0} for the zero polynomial).
  ElementSet evaluate(Element t) const;

  std::string to_string() const;

  bool operator==(const HyperPolynomial& other) const {
    return ring_ == other.ring_ && coeffs_ == other.coeffs_;
  }
  std::strong_ordering operator<=>(const HyperPolynomial& other) const;

 private:
  const FiniteHyperring* ring_;
  std::vector<Element> coeffs_;
  std::size_t bound_;
};

// {sum c_i x^i : c_i in a_i + b_i}, deduplicated and sorted.
std::vector<HyperPolynomial> poly_add(const HyperPolynomial& f,
                                      const HyperPolynomial& g);
// {sum c_k x^k : c_k in the hyper-sum of a_i b_j over i + j = k}.
// Throws PreconditionError when deg f + deg g exceeds the bound.
std::vector<HyperPolynomial> poly_mul(const HyperPolynomial& f,
                                      const HyperPolynomial& g);

}  // namespace hyperring
