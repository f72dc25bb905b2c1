// Copyright 2026 The combchoice Authors.
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

#ifndef COMBCHOICE_BUNDLE_H_
#define COMBCHOICE_BUNDLE_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>
#include <vector>

namespace combchoice {

// A subset of a ground set of at most 24 elements, stored as a bit vector.
// Element i of the ground set is bit i. The bundle does not know its ground
// set; callers that accept bundles from outside validate against one.
class Bundle {
 public:
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    constexpr Iterator() = default;
    constexpr explicit Iterator(std::uint32_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    constexpr bool operator==(const Iterator&) const = default;

   private:
    std::uint32_t rest_ = 0;
  };

  constexpr Bundle() = default;
  static constexpr Bundle FromBits(std::uint32_t bits) { return Bundle(bits); }
  static constexpr Bundle Singleton(int element) {
    return Bundle(std::uint32_t{1} << element);
  }
  // The bundle {0, ..., n-1}.
  static constexpr Bundle Full(int n) {
    return Bundle(n >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool Contains(int element) const {
    return (bits_ >> element) & 1U;
  }
  constexpr bool IsSubsetOf(Bundle other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr Bundle With(int element) const {
    return Bundle(bits_ | (std::uint32_t{1} << element));
  }
  constexpr Bundle Without(int element) const {
    return Bundle(bits_ & ~(std::uint32_t{1} << element));
  }

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }
  std::vector<int> Members() const { return {begin(), end()}; }

  friend constexpr Bundle operator|(Bundle a, Bundle b) {
    return Bundle(a.bits_ | b.bits_);
  }
  friend constexpr Bundle operator&(Bundle a, Bundle b) {
    return Bundle(a.bits_ & b.bits_);
  }
  // Set difference.
  friend constexpr Bundle operator-(Bundle a, Bundle b) {
    return Bundle(a.bits_ & ~b.bits_);
  }
  constexpr Bundle& operator|=(Bundle b) {
    bits_ |= b.bits_;
    return *this;
  }
  constexpr Bundle& operator&=(Bundle b) {
    bits_ &= b.bits_;
    return *this;
  }
  constexpr Bundle& operator-=(Bundle b) {
    bits_ &= ~b.bits_;
    return *this;
  }
  friend constexpr bool operator==(Bundle, Bundle) = default;
  friend constexpr auto operator<=>(Bundle a, Bundle b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  constexpr explicit Bundle(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

// Calls f(T) for every T ⊆ set, in increasing bit order (∅ first, set last).
template <typename F>
void ForEachSubset(Bundle set, F&& f) {
  const std::uint32_t s = set.bits();
  std::uint32_t t = 0;
  while (true) {
    f(Bundle::FromBits(t));
    if (t == s) break;
    t = (t - s) & s;
  }
}

// Calls f(S) for every S ⊆ {0..n-1} in increasing bit order.
template <typename F>
void ForEachBundle(int n, F&& f) {
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    f(Bundle::FromBits(static_cast<std::uint32_t>(bits)));
  }
}

}  // namespace combchoice

#endif  // COMBCHOICE_BUNDLE_H_
