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

#include "gaugepen/pauli.h"

#include <gtest/gtest.h>

#include "gaugepen/pauli_sum.h"
#include "test_util.h"

using namespace gaugepen;
using gaugepen::testing::kron_matrix;
using gaugepen::testing::random_pauli;

TEST(pauli, parse_and_str) {
  PauliOp p = PauliOp::parse("X0 Z3 Y5", 6);
  EXPECT_EQ(p.axis(0), 'X');
  EXPECT_EQ(p.axis(1), 'I');
  EXPECT_EQ(p.axis(3), 'Z');
  EXPECT_EQ(p.axis(5), 'Y');
  EXPECT_EQ(p.phase(), 0);
  EXPECT_EQ(PauliOp::parse(p.str(), 6), p);
  PauliOp q = PauliOp::parse("-i X1", 2);
  EXPECT_EQ(q.phase(), 3);
  EXPECT_EQ(PauliOp::parse(q.str(), 2), q);
  EXPECT_TRUE(PauliOp::parse("I", 3).is_identity());
  EXPECT_TRUE(PauliOp::parse("", 3).is_identity());
  EXPECT_THROW(PauliOp::parse("X0 Z0", 2), std::invalid_argument);
  EXPECT_THROW(PauliOp::parse("X7", 2), std::invalid_argument);
  EXPECT_THROW(PauliOp::parse("Q1", 2), std::invalid_argument);
}

TEST(pauli, single_qubit_products) {
  PauliOp x = PauliOp::single(1, 0, 'X');
  PauliOp y = PauliOp::single(1, 0, 'Y');
  PauliOp z = PauliOp::single(1, 0, 'Z');
  // X Z = -i Y, Z X = i Y, X Y = i Z.
  EXPECT_EQ(x * z, y.with_phase(3));
  EXPECT_EQ(z * x, y.with_phase(1));
  EXPECT_EQ(x * y, z.with_phase(1));
  EXPECT_EQ(y * z, x.with_phase(1));
  EXPECT_TRUE((x * x).is_identity());
  EXPECT_EQ((y * y).phase(), 0);
}

TEST(pauli, product_is_a_homomorphism_into_dense_matrices) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    size_t n = 1 + rng() % 4;
    PauliOp p = random_pauli(n, rng);
    PauliOp q = random_pauli(n, rng);
    Eigen::MatrixXcd lhs = kron_matrix(p * q);
    Eigen::MatrixXcd rhs = kron_matrix(p) * kron_matrix(q);
    ASSERT_LT((lhs - rhs).norm(), 1e-12) << p.str() << " * " << q.str();
  }
}

TEST(pauli, commutation_matches_dense_commutator) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    size_t n = 1 + rng() % 4;
    PauliOp p = random_pauli(n, rng);
    PauliOp q = random_pauli(n, rng);
    Eigen::MatrixXcd a = kron_matrix(p), b = kron_matrix(q);
    bool dense_commute = (a * b - b * a).norm() < 1e-12;
    EXPECT_EQ(commutes(p, q), dense_commute);
    EXPECT_EQ(symplectic_product(p.symplectic(), q.symplectic()), !dense_commute);
  }
}

TEST(pauli, group_laws) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    size_t n = 1 + rng() % 70;
    PauliOp a = random_pauli(n, rng), b = random_pauli(n, rng), c = random_pauli(n, rng);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a.unsigned_op() * a.unsigned_op()).is_identity());
    EXPECT_EQ((a.unsigned_op() * a.unsigned_op()).phase(), 0);
    // a b = (-1)^<a,b> b a.
    PauliOp ab = a * b, ba = b * a;
    EXPECT_EQ(ab.symplectic(), ba.symplectic());
    EXPECT_EQ((ab.phase() + (commutes(a, b) ? 0 : 2)) % 4, ba.phase());
    EXPECT_EQ(weight(a), a.support().popcount());
  }
}

TEST(pauli, hermiticity_follows_phase_parity) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    PauliOp p = random_pauli(3, rng);
    Eigen::MatrixXcd m = kron_matrix(p);
    EXPECT_EQ(p.is_hermitian(), (m - m.adjoint()).norm() < 1e-12);
  }
}

TEST(pauli, symplectic_round_trip) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    PauliOp p = random_pauli(9, rng);
    EXPECT_EQ(PauliOp::from_symplectic(p.symplectic()), p.unsigned_op());
  }
}

TEST(pauli, matrix_builder_matches_kron_oracle) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    PauliOp p = random_pauli(1 + rng() % 5, rng);
    EXPECT_LT((pauli_matrix(p) - kron_matrix(p)).norm(), 1e-12) << p.str();
  }
}
