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

#include "gaugepen/bit_vector.h"

#include <stdexcept>

namespace gaugepen {

namespace {

void require_same_size(const BitVector &a, const BitVector &b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(
        "bit vector size mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
  }
}

}  // namespace

BitVector BitVector::from_string(std::string_view bits) {
  BitVector result(bits.size());
  for (size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      result.set(i);
    } else if (bits[i] != '0') {
      throw std::invalid_argument("bit string may only contain '0' and '1', got '" + std::string(bits) + "'");
    }
  }
  return result;
}

BitVector &BitVector::operator^=(const BitVector &other) {
  require_same_size(*this, other);
  for (size_t w = 0; w < words_.size(); ++w) {
    words_[w] ^= other.words_[w];
  }
  return *this;
}

BitVector &BitVector::operator&=(const BitVector &other) {
  require_same_size(*this, other);
  for (size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= other.words_[w];
  }
  return *this;
}

BitVector &BitVector::operator|=(const BitVector &other) {
  require_same_size(*this, other);
  for (size_t w = 0; w < words_.size(); ++w) {
    words_[w] |= other.words_[w];
  }
  return *this;
}

bool BitVector::dot(const BitVector &other) const {
  require_same_size(*this, other);
  uint64_t acc = 0;
  for (size_t w = 0; w < words_.size(); ++w) {
    acc ^= words_[w] & other.words_[w];
  }
  return std::popcount(acc) & 1;
}

size_t BitVector::first_set() const {
  for (size_t w = 0; w < words_.size(); ++w) {
    if (words_[w]) {
      return w * 64 + std::countr_zero(words_[w]);
    }
  }
  return num_bits_;
}

void BitVector::clear() {
  for (auto &w : words_) {
    w = 0;
  }
}

void BitVector::assign_range(size_t offset, const BitVector &other) {
  if (offset + other.size() > num_bits_) {
    throw std::out_of_range("assign_range past the end of the bit vector");
  }
  for (size_t i = 0; i < other.size(); ++i) {
    set(offset + i, other.get(i));
  }
}

BitVector BitVector::slice(size_t offset, size_t length) const {
  if (offset + length > num_bits_) {
    throw std::out_of_range("slice past the end of the bit vector");
  }
  BitVector result(length);
  for (size_t i = 0; i < length; ++i) {
    if (get(offset + i)) {
      result.set(i);
    }
  }
  return result;
}

std::vector<size_t> BitVector::set_bits() const {
  std::vector<size_t> result;
  for (size_t w = 0; w < words_.size(); ++w) {
    uint64_t word = words_[w];
    while (word) {
      result.push_back(w * 64 + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return result;
}

std::string BitVector::str() const {
  std::string result(num_bits_, '0');
  for (size_t i = 0; i < num_bits_; ++i) {
    if (get(i)) {
      result[i] = '1';
    }
  }
  return result;
}

std::strong_ordering BitVector::operator<=>(const BitVector &other) const {
  if (auto c = num_bits_ <=> other.num_bits_; c != 0) {
    return c;
  }
  return words_ <=> other.words_;
}

size_t BitVectorHash::operator()(const BitVector &v) const {
  uint64_t h = 0xcbf29ce484222325ULL ^ v.size();
  for (uint64_t w : v.words()) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return static_cast<size_t>(h);
}

}  // namespace gaugepen
