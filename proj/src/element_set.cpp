#include "hyperring/element_set.hpp"

#include <stdexcept>
#include <string>

namespace hyperring {

ElementSet::ElementSet(std::size_t width) : width_(width) {
  if (width > kMaxCarrier) {
    throw std::length_error("carrier of " + std::to_string(width) +
                            " elements exceeds the 64-element cap");
  }
}

ElementSet ElementSet::from_bits(std::size_t width, std::uint64_t bits) {
  ElementSet s(width);
  if ((bits & ~mask(width)) != 0) {
    throw std::out_of_range("bit pattern exceeds carrier width");
  }
  s.bits_ = bits;
  return s;
}

ElementSet ElementSet::singleton(std::size_t width, Element x) {
  ElementSet s(width);
  s.insert(x);
  return s;
}

ElementSet ElementSet::full(std::size_t width) {
  return from_bits(width, mask(width));
}

ElementSet ElementSet::of(std::size_t width, std::initializer_list<Element> xs) {
  ElementSet s(width);
  for (auto x : xs) s.insert(x);
  return s;
}

void ElementSet::insert(Element x) {
  if (x >= width_) {
    throw std::out_of_range("element " + std::to_string(x) +
                            " outside carrier of size " +
                            std::to_string(width_));
  }
  bits_ |= std::uint64_t{1} << x;
}

void ElementSet::erase(Element x) {
  if (x < width_) bits_ &= ~(std::uint64_t{1} << x);
}

bool ElementSet::subset_of(const ElementSet& other) const {
  require_same_width(other);
  return (bits_ & ~other.bits_) == 0;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) {
  require_same_width(other);
  bits_ |= other.bits_;
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) {
  require_same_width(other);
  bits_ &= other.bits_;
  return *this;
}

ElementSet& ElementSet::operator-=(const ElementSet& other) {
  require_same_width(other);
  bits_ &= ~other.bits_;
  return *this;
}

ElementSet ElementSet::complement() const {
  return from_bits(width_, ~bits_ & mask(width_));
}

std::vector<Element> ElementSet::elements() const {
  return std::vector<Element>(begin(), end());
}

std::strong_ordering ElementSet::operator<=>(const ElementSet& other) const {
  if (auto c = width_ <=> other.width_; c != 0) return c;
  if (auto c = size() <=> other.size(); c != 0) return c;
  // Lower elements first: compare bit-reversed patterns.
  auto lhs = bits_, rhs = other.bits_;
  if (lhs == rhs) return std::strong_ordering::equal;
  auto diff = lhs ^ rhs;
  auto low = std::countr_zero(diff);
  return ((lhs >> low) & 1u) ? std::strong_ordering::less
                             : std::strong_ordering::greater;
}

void ElementSet::require_same_width(const ElementSet& other) const {
  if (width_ != other.width_) {
    throw std::invalid_argument("element sets over different carriers (" +
                                std::to_string(width_) + " vs " +
                                std::to_string(other.width_) + ")");
  }
}

}  // namespace hyperring
