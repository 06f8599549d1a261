// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RAINBOW_ELEMENT_SET_H_
#define RAINBOW_ELEMENT_SET_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow {

// Ground-set elements are dense 0-based ids. Every structure in this library
// lives inside a universe of at most kMaxElements ids.
using Element = int;
inline constexpr int kMaxElements = 64;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an input exceeds the sizes exhaustive enumeration can handle.
class ScaleLimitError : public Error {
 public:
  using Error::Error;
};

// A finite set of elements, stored as a 64-bit membership mask.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}
  ElementSet(std::initializer_list<Element> elements) {
    for (Element x : elements) insert(x);
  }
  static ElementSet from_vector(const std::vector<Element>& elements) {
    ElementSet s;
    for (Element x : elements) s.insert(x);
    return s;
  }
  // {0, ..., n-1}.
  static ElementSet range(int n) {
    check(n == 0 ? 0 : n - 1);
    return ElementSet(n == kMaxElements ? ~std::uint64_t{0}
                                        : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  bool contains(Element x) const {
    return x >= 0 && x < kMaxElements && ((bits_ >> x) & 1U) != 0;
  }
  void insert(Element x) {
    check(x);
    bits_ |= std::uint64_t{1} << x;
  }
  void erase(Element x) {
    check(x);
    bits_ &= ~(std::uint64_t{1} << x);
  }
  ElementSet with(Element x) const {
    ElementSet s = *this;
    s.insert(x);
    return s;
  }
  ElementSet without(Element x) const {
    ElementSet s = *this;
    s.erase(x);
    return s;
  }

  constexpr bool is_subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(ElementSet other) const {
    return (bits_ & other.bits_) != 0;
  }

  // Smallest element; requires a nonempty set.
  Element min() const { return std::countr_zero(bits_); }
  Element max() const { return kMaxElements - 1 - std::countl_zero(bits_); }

  // Position of x among the members in ascending order.
  int index_of(Element x) const {
    return std::popcount(bits_ & ((std::uint64_t{1} << x) - 1));
  }

  std::vector<Element> to_vector() const {
    std::vector<Element> out;
    out.reserve(size());
    for (Element x : *this) out.push_back(x);
    return out;
  }
  // "{0 2 5}"
  std::string to_string() const;

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ | b.bits_);
  }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) {
    return ElementSet(a.bits_ & ~b.bits_);
  }
  ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  ElementSet& operator-=(ElementSet o) {
    bits_ &= ~o.bits_;
    return *this;
  }
  friend constexpr bool operator==(ElementSet, ElementSet) = default;

  class iterator {
   public:
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    Element operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

 private:
  static void check(Element x) {
    if (x < 0 || x >= kMaxElements) {
      throw ScaleLimitError("element id " + std::to_string(x) +
                            " outside the supported range [0, 64)");
    }
  }

  std::uint64_t bits_ = 0;
};

// Graded lexicographic order: by size, then by the sorted element lists.
// This is the canonical output order for circuits, flats, facets and edges.
bool shortlex_less(ElementSet a, ElementSet b);
void sort_shortlex(std::vector<ElementSet>& sets);

// Calls visit(T) for every subset T of s (including the empty set and s).
template <typename Visitor>
void for_each_subset(ElementSet s, Visitor&& visit) {
  const std::uint64_t full = s.bits();
  std::uint64_t sub = 0;
  while (true) {
    visit(ElementSet(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

}  // namespace rainbow

template <>
struct std::hash<rainbow::ElementSet> {
  std::size_t operator()(rainbow::ElementSet s) const noexcept {
    return std::hash<std::uint64_t>{}(s.bits());
  }
};

#endif  // RAINBOW_ELEMENT_SET_H_
