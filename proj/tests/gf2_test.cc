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

#include "gaugepen/gf2.h"

#include <set>

#include <gtest/gtest.h>

#include "gaugepen/bit_vector.h"
#include "test_util.h"

using namespace gaugepen;
using gaugepen::testing::random_bits;
using gaugepen::testing::random_matrix;

namespace {

/// Every vector in the row space, by brute force over all row subsets.
std::set<BitVector> brute_span(const BinaryMatrix &m) {
  std::set<BitVector> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << m.rows()); ++mask) {
    BitVector v(m.cols());
    for (size_t r = 0; r < m.rows(); ++r) {
      if ((mask >> r) & 1) {
        v ^= m.row(r);
      }
    }
    out.insert(v);
  }
  return out;
}

}  // namespace

TEST(bit_vector, basic_ops) {
  BitVector v = BitVector::from_string("0110100001");
  EXPECT_EQ(v.size(), 10u);
  EXPECT_EQ(v.popcount(), 4u);
  EXPECT_EQ(v.first_set(), 1u);
  EXPECT_EQ(v.str(), "0110100001");
  EXPECT_EQ(v.set_bits(), (std::vector<size_t>{1, 2, 4, 9}));
  v.flip(9);
  EXPECT_FALSE(v.get(9));
  EXPECT_EQ(v.slice(1, 4).str(), "1101");
  BitVector w(10);
  EXPECT_FALSE(w.any());
  EXPECT_EQ(w.first_set(), 10u);
  w.assign_range(3, BitVector::from_string("11"));
  EXPECT_EQ(w.str(), "0001100000");
}

TEST(bit_vector, multiword_dot_matches_popcount_parity) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    BitVector a = random_bits(150, rng);
    BitVector b = random_bits(150, rng);
    EXPECT_EQ(a.dot(b), ((a & b).popcount() & 1) == 1);
    EXPECT_EQ((a ^ b).popcount(), a.popcount() + b.popcount() - 2 * (a & b).popcount());
    EXPECT_EQ((a | b).popcount(), a.popcount() + b.popcount() - (a & b).popcount());
  }
}

TEST(bit_vector, ordering_and_hash_consistent_with_equality) {
  BitVector a = BitVector::from_string("1010");
  BitVector b = BitVector::from_string("1010");
  BitVector c = BitVector::from_string("1011");
  EXPECT_EQ(a, b);
  EXPECT_EQ(BitVectorHash{}(a), BitVectorHash{}(b));
  EXPECT_NE(a <=> c, std::strong_ordering::equal);
}

TEST(binary_matrix, parse_and_format_round_trip) {
  BinaryMatrix m = BinaryMatrix::parse("101\n011\n");
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 3u);
  EXPECT_EQ(BinaryMatrix::parse(m.format()), m);
  EXPECT_THROW(BinaryMatrix::parse("10\n1\n"), std::invalid_argument);
  EXPECT_THROW(BinaryMatrix::parse("1x1\n"), std::invalid_argument);
  EXPECT_THROW(BinaryMatrix::parse(""), std::invalid_argument);
}

TEST(binary_matrix, transpose_and_multiply) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    BinaryMatrix a = random_matrix(4, 5, rng);
    BinaryMatrix b = random_matrix(5, 3, rng);
    EXPECT_EQ(a.transpose().transpose(), a);
    BinaryMatrix ab = a.multiply(b);
    for (size_t r = 0; r < 4; ++r) {
      for (size_t c = 0; c < 3; ++c) {
        bool s = false;
        for (size_t i = 0; i < 5; ++i) {
          s ^= a.get(r, i) && b.get(i, c);
        }
        EXPECT_EQ(ab.get(r, c), s);
      }
    }
    EXPECT_EQ(a.multiply(b).transpose(), b.transpose().multiply(a.transpose()));
  }
}

TEST(gf2, rank_matches_brute_force_span_size) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    size_t rows = 1 + rng() % 7;
    size_t cols = 1 + rng() % 7;
    BinaryMatrix m = random_matrix(rows, cols, rng);
    size_t rank = f2_rank(m);
    EXPECT_EQ(uint64_t{1} << rank, brute_span(m).size());
    EXPECT_EQ(rank, f2_rank(m.transpose()));
  }
}

TEST(gf2, min_weight_matches_brute_force) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    BinaryMatrix m = random_matrix(1 + rng() % 6, 1 + rng() % 8, rng);
    if (m.is_zero()) {
      EXPECT_THROW(min_weight_in_span(m), EmptySpan);
      continue;
    }
    size_t best = m.cols();
    for (const auto &v : brute_span(m)) {
      if (v.any()) {
        best = std::min(best, v.popcount());
      }
    }
    EXPECT_EQ(min_weight_in_span(m), best);
  }
}

TEST(gf2, span_reduce_is_canonical) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    BinaryMatrix m = random_matrix(4, 9, rng);
    F2Span span(9);
    for (const auto &r : m.row_vectors()) {
      span.insert(r);
    }
    EXPECT_EQ(span.dimension(), f2_rank(m));
    BitVector v = random_bits(9, rng);
    for (const auto &s : brute_span(m)) {
      EXPECT_EQ(span.reduce(v), span.reduce(v ^ s));
      EXPECT_TRUE(span.contains(s));
    }
  }
}

TEST(gf2, membership_coefficients_reconstruct_vector) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    BinaryMatrix m = random_matrix(5, 7, rng);
    BitVector v = random_bits(7, rng);
    auto coef = f2_membership(v, m);
    bool in_span = brute_span(m).count(v) != 0;
    ASSERT_EQ(coef.has_value(), in_span);
    if (coef) {
      BitVector sum(7);
      for (size_t r = 0; r < 5; ++r) {
        if (coef->get(r)) {
          sum ^= m.row(r);
        }
      }
      EXPECT_EQ(sum, v);
    }
  }
}

TEST(gf2, kernel_has_complementary_dimension) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    BinaryMatrix m = random_matrix(1 + rng() % 6, 1 + rng() % 8, rng);
    BinaryMatrix k = f2_kernel(m);
    EXPECT_EQ(k.rows(), m.cols() - f2_rank(m));
    if (k.rows() > 0) {
      EXPECT_EQ(f2_rank(k), k.rows());
    }
    for (const auto &row : k.row_vectors()) {
      EXPECT_FALSE(m.multiply(row).any());
    }
  }
}

TEST(gf2, inverse) {
  std::mt19937_64 rng(10);
  int inverted = 0;
  for (int trial = 0; trial < 60; ++trial) {
    BinaryMatrix m = random_matrix(5, 5, rng);
    if (f2_rank(m) < 5) {
      EXPECT_THROW(f2_inverse(m), std::invalid_argument);
      continue;
    }
    ++inverted;
    EXPECT_EQ(m.multiply(f2_inverse(m)), BinaryMatrix::identity(5));
  }
  EXPECT_GT(inverted, 0);
}
