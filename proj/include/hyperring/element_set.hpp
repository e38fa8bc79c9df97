#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace hyperring {

// Index of an element in a finite carrier (0..n-1).
using Element = std::size_t;

// Carriers are capped so that every subset fits in one machine word.
inline constexpr std::size_t kMaxCarrier = 64;

// A subset of a finite carrier, stored as a bitset in carrier order.
// Two sets may only be combined when their widths agree.
class ElementSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    const_iterator() = default;
    explicit const_iterator(std::uint64_t rest) : rest_(rest) {}

    Element operator*() const {
      return static_cast<Element>(std::countr_zero(rest_));
    }
    const_iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  ElementSet() = default;
  explicit ElementSet(std::size_t width);

  static ElementSet from_bits(std::size_t width, std::uint64_t bits);
  static ElementSet singleton(std::size_t width, Element x);
  static ElementSet full(std::size_t width);
  static ElementSet of(std::size_t width, std::initializer_list<Element> xs);

  std::size_t width() const noexcept { return width_; }
  std::uint64_t bits() const noexcept { return bits_; }

  bool contains(Element x) const noexcept {
    return x < width_ && ((bits_ >> x) & 1u) != 0;
  }
  bool empty() const noexcept { return bits_ == 0; }
  std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  bool is_full() const noexcept { return bits_ == mask(width_); }

  void insert(Element x);
  void erase(Element x);

  bool subset_of(const ElementSet& other) const;

  ElementSet& operator|=(const ElementSet& other);
  ElementSet& operator&=(const ElementSet& other);
  ElementSet& operator-=(const ElementSet& other);

  friend ElementSet operator|(ElementSet a, const ElementSet& b) {
    return a |= b;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) {
    return a &= b;
  }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) {
    return a -= b;
  }

  ElementSet complement() const;

  const_iterator begin() const { return const_iterator(bits_); }
  const_iterator end() const { return const_iterator(0); }

  std::vector<Element> elements() const;

  bool operator==(const ElementSet&) const = default;

  // Canonical order: by cardinality, then by bit pattern (carrier order).
  std::strong_ordering operator<=>(const ElementSet& other) const;

  static constexpr std::uint64_t mask(std::size_t width) noexcept {
    return width >= 64 ? ~std::uint64_t{0}
                       : ((std::uint64_t{1} << width) - 1);
  }

 private:
  void require_same_width(const ElementSet& other) const;

  std::uint64_t bits_ = 0;
  std::size_t width_ = 0;
};

}  // namespace hyperring
