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

#include "gaugepen/bacon_shor.h"

#include <gtest/gtest.h>

#include "test_util.h"

using namespace gaugepen;
using gaugepen::testing::random_matrix;

namespace {

F2Span span_of(const SubsystemCodeSpec &code) { return gauge_span(code); }

bool same_span(const SubsystemCodeSpec &a, const SubsystemCodeSpec &b) {
  F2Span sa = span_of(a), sb = span_of(b);
  if (sa.dimension() != sb.dimension()) return false;
  for (const auto &v : sb.basis()) {
    if (!sa.contains(v)) return false;
  }
  return true;
}

}  // namespace

TEST(bacon_shor, matrix_layout_is_row_major) {
  BinaryMatrix a = BinaryMatrix::parse("101\n010\n");
  MatrixLayout layout = matrix_layout(a);
  ASSERT_EQ(layout.num_qubits(), 3u);
  EXPECT_EQ(layout.cell_of_qubit[0], std::make_pair(size_t{0}, size_t{0}));
  EXPECT_EQ(layout.cell_of_qubit[1], std::make_pair(size_t{0}, size_t{2}));
  EXPECT_EQ(layout.cell_of_qubit[2], std::make_pair(size_t{1}, size_t{1}));
  EXPECT_EQ(layout.qubit_of_cell.at({1, 1}), 2u);
}

TEST(bacon_shor, generators_follow_rows_and_columns) {
  SubsystemCodeSpec code = code_from_matrix(BinaryMatrix::parse("11\n11\n"));
  // Qubits 0 1 / 2 3: XX on rows, ZZ on columns.
  std::vector<PauliOp> expected = {PauliOp::parse("X0 X1", 4), PauliOp::parse("X2 X3", 4),
                                   PauliOp::parse("Z0 Z2", 4), PauliOp::parse("Z1 Z3", 4)};
  EXPECT_EQ(code.gauge_generators.size(), expected.size());
  for (const auto &g : expected) {
    EXPECT_TRUE(in_gauge_group(code, g)) << g.str();
  }
  EXPECT_THROW(code_from_matrix(BinaryMatrix(2, 2)), std::invalid_argument);
}

TEST(bacon_shor, params_formula_matches_structure) {
  std::mt19937_64 rng(1);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    BinaryMatrix a = random_matrix(2 + rng() % 3, 2 + rng() % 3, rng);
    if (a.is_zero()) continue;
    CodeParams p = code_params(a);
    SubsystemCodeSpec code = code_from_matrix(a);
    CodeStructure s = derive_structure(code);
    EXPECT_EQ(p.n, code.n);
    EXPECT_EQ(p.n, a.hamming_weight());
    EXPECT_EQ(p.k, s.num_logical) << a.format();
    if (p.k > 0) {
      EXPECT_EQ(p.d, code_distance(code, code.n)) << a.format();
      ++checked;
    }
  }
  EXPECT_GT(checked, 10);
}

TEST(bacon_shor, family_matrix_shape) {
  BinaryMatrix a = family_matrix(1);
  EXPECT_EQ(a, BinaryMatrix::parse("110\n101\n011\n"));
  for (size_t k = 1; k <= 4; ++k) {
    BinaryMatrix m = family_matrix(k);
    EXPECT_EQ(m.rows(), 2 * k + 1);
    EXPECT_EQ(m.hamming_weight(), 6 * k);
  }
  EXPECT_THROW(family_matrix(0), std::invalid_argument);
}

TEST(bacon_shor, family_parameters) {
  for (size_t k = 1; k <= 4; ++k) {
    EXPECT_EQ(code_params(family_matrix(k)), (CodeParams{6 * k, 2 * k, 2}));
    SubsystemCodeSpec code = family_code(k);
    CodeStructure s = derive_structure(code);
    EXPECT_EQ(code.gauge_generators.size(), 8 * k - 2);
    EXPECT_EQ(s.num_logical, 2 * k);
    EXPECT_EQ(s.num_stabilizers, 2u);
    EXPECT_EQ(s.num_gauge, 4 * k - 2);
    EXPECT_TRUE(is_css_two_local(code));
  }
}

TEST(bacon_shor, family_code_matches_matrix_construction) {
  for (size_t k = 1; k <= 4; ++k) {
    EXPECT_TRUE(same_span(family_code(k), code_from_matrix(family_matrix(k)))) << "k=" << k;
  }
}

TEST(bacon_shor, family_layout_labels) {
  FamilyLayout layout(2);
  auto labels = layout.labels();
  EXPECT_EQ(labels.at(layout.r(0)), "R1");
  EXPECT_EQ(labels.at(layout.b(3)), "B4");
  EXPECT_EQ(labels.at(layout.l(1)), "L2");
  EXPECT_EQ(labels.size(), 12u);
}

TEST(bacon_shor, family_logicals_are_bare_and_canonical) {
  for (size_t k = 1; k <= 3; ++k) {
    SubsystemCodeSpec code = family_code(k);
    auto logicals = family_logicals(k);
    ASSERT_EQ(logicals.size(), 2 * k);
    for (size_t a = 0; a < logicals.size(); ++a) {
      EXPECT_TRUE(in_centralizer(code, logicals[a].first));
      EXPECT_TRUE(in_centralizer(code, logicals[a].second));
      EXPECT_FALSE(in_gauge_group(code, logicals[a].first));
      EXPECT_EQ(weight(logicals[a].first), 2u);
      EXPECT_EQ(weight(logicals[a].second), 2u);
      for (size_t b = 0; b < logicals.size(); ++b) {
        EXPECT_EQ(commutes(logicals[a].first, logicals[b].second), a != b);
      }
    }
  }
}

TEST(bacon_shor, family_canonical_gauge_pairs) {
  for (size_t k = 1; k <= 4; ++k) {
    SubsystemCodeSpec code = family_code(k);
    auto pairs = family_canonical_gauge_pairs(k);
    ASSERT_EQ(pairs.size(), 4 * k - 2);
    auto logicals = family_logicals(k);
    for (size_t i = 0; i < pairs.size(); ++i) {
      EXPECT_TRUE(in_gauge_group(code, pairs[i].first));
      EXPECT_TRUE(in_gauge_group(code, pairs[i].second));
      EXPECT_FALSE(commutes(pairs[i].first, pairs[i].second));
      for (size_t j = 0; j < pairs.size(); ++j) {
        if (i == j) continue;
        EXPECT_TRUE(commutes(pairs[i].first, pairs[j].first));
        EXPECT_TRUE(commutes(pairs[i].first, pairs[j].second));
        EXPECT_TRUE(commutes(pairs[i].second, pairs[j].second));
      }
      for (const auto &l : logicals) {
        for (const PauliOp &g : {pairs[i].first, pairs[i].second}) {
          EXPECT_TRUE(commutes(g, l.first));
          EXPECT_TRUE(commutes(g, l.second));
        }
      }
    }
  }
}

TEST(bacon_shor, family_stabilizers_are_all_x_and_all_z) {
  for (size_t k = 1; k <= 3; ++k) {
    auto [sx, sz] = family_stabilizers(k);
    EXPECT_EQ(weight(sx), 6 * k);
    EXPECT_TRUE(sx.is_x_type());
    EXPECT_EQ(weight(sz), 6 * k);
    EXPECT_TRUE(sz.is_z_type());
  }
}
