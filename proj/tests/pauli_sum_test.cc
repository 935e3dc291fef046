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

#include "gaugepen/pauli_sum.h"

#include <gtest/gtest.h>

#include "test_util.h"

using namespace gaugepen;
using gaugepen::testing::kron_matrix;
using gaugepen::testing::random_pauli;

namespace {

PauliSum random_sum(size_t n, size_t terms, std::mt19937_64 &rng) {
  std::uniform_real_distribution<double> u(-1, 1);
  PauliSum h(n);
  for (size_t i = 0; i < terms; ++i) {
    h.add(u(rng), random_pauli(n, rng, false));
  }
  return h;
}

Eigen::MatrixXcd oracle(const PauliSum &h) {
  size_t dim = size_t{1} << h.num_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto &t : h.terms()) {
    m += t.coefficient * kron_matrix(t.op);
  }
  return m;
}

}  // namespace

TEST(pauli_sum, merges_and_cancels) {
  PauliSum h(3);
  h.add(1.5, PauliOp::parse("X0 Z1", 3));
  h.add(0.5, PauliOp::parse("X0 Z1", 3));
  h.add(2.0, PauliOp::parse("-Y2", 3));
  EXPECT_EQ(h.size(), 2u);
  EXPECT_DOUBLE_EQ(h.coefficient_of(PauliOp::parse("X0 Z1", 3)), 2.0);
  EXPECT_DOUBLE_EQ(h.coefficient_of(PauliOp::parse("Y2", 3)), -2.0);
  EXPECT_DOUBLE_EQ(h.coefficient_of(PauliOp::parse("-Y2", 3)), 2.0);
  h.add(-2.0, PauliOp::parse("X0 Z1", 3));
  EXPECT_EQ(h.size(), 1u);
  EXPECT_DOUBLE_EQ(h.coefficient_of(PauliOp::parse("X0 Z1", 3)), 0.0);
  EXPECT_THROW(h.add(1.0, PauliOp::parse("i X0", 3)), std::invalid_argument);
  EXPECT_THROW(h.add(1.0, PauliOp::parse("X0", 2)), std::invalid_argument);
}

TEST(pauli_sum, dense_matrix_matches_kron_oracle) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 30; ++trial) {
    size_t n = 1 + rng() % 5;
    PauliSum h = random_sum(n, 1 + rng() % 8, rng);
    Eigen::MatrixXcd m = to_matrix(h);
    EXPECT_LT((m - oracle(h)).norm(), 1e-12);
    EXPECT_LT((m - m.adjoint()).norm(), 1e-12);
  }
}

TEST(pauli_sum, matrix_free_apply_matches_dense) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    size_t n = 1 + rng() % 6;
    PauliSum h = random_sum(n, 6, rng);
    Eigen::MatrixXcd v = Eigen::MatrixXcd::Random(size_t{1} << n, 3);
    EXPECT_LT((gaugepen::apply(h, v) - to_matrix(h) * v).norm(), 1e-10);
    PauliOp p = random_pauli(n, rng);
    EXPECT_LT((gaugepen::apply(p, v) - kron_matrix(p) * v).norm(), 1e-10);
  }
}

TEST(pauli_sum, real_matrix_only_without_odd_y) {
  PauliSum h(2);
  h.add(1.0, PauliOp::parse("Y0 Y1", 2));
  h.add(0.5, PauliOp::parse("X0", 2));
  EXPECT_FALSE(h.has_imaginary_entries());
  Eigen::MatrixXd r = to_real_matrix(h);
  EXPECT_LT((r.cast<Complex>() - oracle(h)).norm(), 1e-12);
  h.add(1.0, PauliOp::parse("Y1", 2));
  EXPECT_TRUE(h.has_imaginary_entries());
  EXPECT_THROW(to_real_matrix(h), std::invalid_argument);
}

TEST(pauli_sum, embedding_is_identity_tensor_product) {
  std::mt19937_64 rng(3);
  PauliSum h = random_sum(2, 4, rng);
  PauliSum e = h.embedded(4, 1);
  Eigen::MatrixXcd expected =
      Eigen::kroneckerProduct(Eigen::Matrix2cd::Identity(), Eigen::kroneckerProduct(to_matrix(h), Eigen::Matrix2cd::Identity()).eval())
          .eval();
  EXPECT_LT((to_matrix(e) - expected).norm(), 1e-12);
  EXPECT_THROW(h.embedded(2, 1), std::invalid_argument);
}

TEST(pauli_sum, linear_operations) {
  std::mt19937_64 rng(4);
  PauliSum a = random_sum(3, 5, rng), b = random_sum(3, 5, rng);
  EXPECT_LT((to_matrix(a + b) - to_matrix(a) - to_matrix(b)).norm(), 1e-12);
  EXPECT_LT((to_matrix(a.scaled(-2.5)) + 2.5 * to_matrix(a)).norm(), 1e-12);
  EXPECT_TRUE((a + a.scaled(-1)).empty());
}

TEST(pauli_sum, dense_cap_is_enforced) {
  PauliSum h(20);
  h.add(1.0, PauliOp::single(20, 3, 'Z'));
  EXPECT_THROW(to_matrix(h), DenseCapExceeded);
  EXPECT_THROW(to_matrix(h, 19), DenseCapExceeded);
  try {
    to_matrix(h);
  } catch (const DenseCapExceeded &e) {
    EXPECT_NE(std::string(e.what()).find("14"), std::string::npos);
  }
}
