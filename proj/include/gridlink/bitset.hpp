// Copyright 2026 The Gridlink Authors
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

#ifndef GRIDLINK_BITSET_HPP_
#define GRIDLINK_BITSET_HPP_

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

namespace gridlink {

// Fixed-capacity bit set with word access. Used for edge sets (keyed by
// canonical edge index) and vertex sets (keyed by vertex id).
template <std::size_t Words>
class FixedBitSet {
 public:
  static constexpr int kCapacity = static_cast<int>(Words * 64);

  constexpr FixedBitSet() = default;

  constexpr void set(int i) { words_[i >> 6] |= bit(i); }
  constexpr void reset(int i) { words_[i >> 6] &= ~bit(i); }
  constexpr void flip(int i) { words_[i >> 6] ^= bit(i); }
  constexpr bool test(int i) const { return (words_[i >> 6] & bit(i)) != 0; }
  constexpr void clear() { words_ = {}; }

  constexpr int count() const {
    int n = 0;
    for (auto w : words_) n += std::popcount(w);
    return n;
  }
  constexpr bool empty() const {
    for (auto w : words_) {
      if (w != 0) return false;
    }
    return true;
  }
  constexpr bool any() const { return !empty(); }

  // Lowest member, or -1 when empty.
  constexpr int first() const {
    for (std::size_t k = 0; k < Words; ++k) {
      if (words_[k] != 0) {
        return static_cast<int>(k * 64) + std::countr_zero(words_[k]);
      }
    }
    return -1;
  }

  constexpr bool intersects(const FixedBitSet& o) const {
    for (std::size_t k = 0; k < Words; ++k) {
      if ((words_[k] & o.words_[k]) != 0) return true;
    }
    return false;
  }
  constexpr bool subset_of(const FixedBitSet& o) const {
    for (std::size_t k = 0; k < Words; ++k) {
      if ((words_[k] & ~o.words_[k]) != 0) return false;
    }
    return true;
  }

  constexpr FixedBitSet& operator|=(const FixedBitSet& o) {
    for (std::size_t k = 0; k < Words; ++k) words_[k] |= o.words_[k];
    return *this;
  }
  constexpr FixedBitSet& operator&=(const FixedBitSet& o) {
    for (std::size_t k = 0; k < Words; ++k) words_[k] &= o.words_[k];
    return *this;
  }
  constexpr FixedBitSet& operator^=(const FixedBitSet& o) {
    for (std::size_t k = 0; k < Words; ++k) words_[k] ^= o.words_[k];
    return *this;
  }
  // Set difference.
  constexpr FixedBitSet& operator-=(const FixedBitSet& o) {
    for (std::size_t k = 0; k < Words; ++k) words_[k] &= ~o.words_[k];
    return *this;
  }

  friend constexpr FixedBitSet operator|(FixedBitSet a, const FixedBitSet& b) { return a |= b; }
  friend constexpr FixedBitSet operator&(FixedBitSet a, const FixedBitSet& b) { return a &= b; }
  friend constexpr FixedBitSet operator^(FixedBitSet a, const FixedBitSet& b) { return a ^= b; }
  friend constexpr FixedBitSet operator-(FixedBitSet a, const FixedBitSet& b) { return a -= b; }
  friend constexpr bool operator==(const FixedBitSet&, const FixedBitSet&) = default;

  constexpr std::uint64_t word(std::size_t k) const { return words_[k]; }

  // Calls f(i) for every member in increasing order.
  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::size_t k = 0; k < Words; ++k) {
      std::uint64_t w = words_[k];
      while (w != 0) {
        const int b = std::countr_zero(w);
        f(static_cast<int>(k * 64) + b);
        w &= w - 1;
      }
    }
  }

 private:
  static constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << (i & 63); }

  std::array<std::uint64_t, Words> words_{};
};

}  // namespace gridlink

#endif  // GRIDLINK_BITSET_HPP_
