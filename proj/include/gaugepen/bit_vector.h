// Copyright 2026 The gaugepen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gaugepen {

/// Fixed-length vector over GF(2), packed into 64-bit words.
///
/// Bits beyond size() in the last word are always zero, so word-level
/// comparisons and popcounts need no masking.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {}

  /// Parses a string of '0'/'1' characters; bit i is character i.
  static BitVector from_string(std::string_view bits);

  size_t size() const { return num_bits_; }
  std::span<const uint64_t> words() const { return words_; }
  std::span<uint64_t> mutable_words() { return words_; }

  bool get(size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(size_t i, bool value = true) {
    uint64_t mask = uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }
  void flip(size_t i) { words_[i >> 6] ^= uint64_t{1} << (i & 63); }

  BitVector &operator^=(const BitVector &other);
  BitVector &operator&=(const BitVector &other);
  BitVector &operator|=(const BitVector &other);
  friend BitVector operator^(BitVector a, const BitVector &b) { return a ^= b; }
  friend BitVector operator&(BitVector a, const BitVector &b) { return a &= b; }
  friend BitVector operator|(BitVector a, const BitVector &b) { return a |= b; }

  size_t popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
      total += std::popcount(w);
    }
    return total;
  }
  bool any() const {
    for (uint64_t w : words_) {
      if (w) {
        return true;
      }
    }
    return false;
  }
  /// Parity of the overlap, i.e. the GF(2) dot product.
  bool dot(const BitVector &other) const;
  /// Index of the lowest set bit, or size() if none.
  size_t first_set() const;

  void clear();
  /// Copies `other` into bits [offset, offset + other.size()).
  void assign_range(size_t offset, const BitVector &other);
  BitVector slice(size_t offset, size_t length) const;
  std::vector<size_t> set_bits() const;

  std::string str() const;

  bool operator==(const BitVector &other) const = default;
  std::strong_ordering operator<=>(const BitVector &other) const;

 private:
  size_t num_bits_ = 0;
  std::vector<uint64_t> words_;
};

struct BitVectorHash {
  size_t operator()(const BitVector &v) const;
};

}  // namespace gaugepen
