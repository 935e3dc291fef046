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

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gaugepen {

namespace {

PauliOp two_body(size_t n, size_t a, size_t b, char axis) {
  return PauliOp::single(n, a, axis) * PauliOp::single(n, b, axis);
}

PauliOp product_of(size_t n, const std::vector<size_t> &qubits, char axis) {
  PauliOp op(n);
  for (size_t q : qubits) {
    op = op * PauliOp::single(n, q, axis);
  }
  return op;
}

void require_positive_k(size_t k) {
  if (k < 1) {
    throw std::invalid_argument("family size k must be >= 1");
  }
}

}  // namespace

MatrixLayout matrix_layout(const BinaryMatrix &a) {
  MatrixLayout layout;
  layout.matrix = a;
  for (size_t r = 0; r < a.rows(); ++r) {
    for (size_t c = 0; c < a.cols(); ++c) {
      if (a.get(r, c)) {
        layout.qubit_of_cell[{r, c}] = layout.cell_of_qubit.size();
        layout.cell_of_qubit.emplace_back(r, c);
      }
    }
  }
  return layout;
}

SubsystemCodeSpec code_from_matrix(const BinaryMatrix &a) {
  if (a.is_zero()) {
    throw std::invalid_argument("code_from_matrix needs a nonzero matrix");
  }
  MatrixLayout layout = matrix_layout(a);
  SubsystemCodeSpec code;
  code.n = layout.num_qubits();
  for (size_t r = 0; r < a.rows(); ++r) {
    std::vector<size_t> cells;
    for (size_t c = 0; c < a.cols(); ++c) {
      if (a.get(r, c)) {
        cells.push_back(layout.qubit_of_cell.at({r, c}));
      }
    }
    for (size_t i = 0; i + 1 < cells.size(); ++i) {
      code.gauge_generators.push_back(two_body(code.n, cells[i], cells[i + 1], 'X'));
    }
  }
  for (size_t c = 0; c < a.cols(); ++c) {
    std::vector<size_t> cells;
    for (size_t r = 0; r < a.rows(); ++r) {
      if (a.get(r, c)) {
        cells.push_back(layout.qubit_of_cell.at({r, c}));
      }
    }
    for (size_t i = 0; i + 1 < cells.size(); ++i) {
      code.gauge_generators.push_back(two_body(code.n, cells[i], cells[i + 1], 'Z'));
    }
  }
  for (size_t q = 0; q < code.n; ++q) {
    auto [r, c] = layout.cell_of_qubit[q];
    code.labels[q] = "(" + std::to_string(r) + "," + std::to_string(c) + ")";
  }
  return code;
}

CodeParams code_params(const BinaryMatrix &a) {
  if (a.is_zero()) {
    throw std::invalid_argument("code_params needs a nonzero matrix");
  }
  CodeParams p;
  p.n = a.hamming_weight();
  p.k = f2_rank(a);
  p.d = std::min(min_weight_in_span(a), min_weight_in_span(a.transpose()));
  return p;
}

BinaryMatrix family_matrix(size_t k) {
  require_positive_k(k);
  size_t size = 2 * k + 1;
  BinaryMatrix a(size, size);
  for (size_t row = 0; row < 2 * k; ++row) {
    a.set(row, 0);
    a.set(row, row + 1);
  }
  for (size_t col = 1; col < size; ++col) {
    a.set(2 * k, col);
  }
  return a;
}

FamilyLayout::FamilyLayout(size_t k) : k_(k) { require_positive_k(k); }

std::map<size_t, std::string> FamilyLayout::labels() const {
  std::map<size_t, std::string> out;
  for (size_t a = 0; a < num_logical(); ++a) {
    out[b(a)] = "B" + std::to_string(a + 1);
    out[l(a)] = "L" + std::to_string(a + 1);
    out[r(a)] = "R" + std::to_string(a + 1);
  }
  return out;
}

SubsystemCodeSpec family_code(size_t k) {
  FamilyLayout lay(k);
  size_t n = lay.num_qubits();
  size_t m = lay.num_logical();
  SubsystemCodeSpec code;
  code.n = n;
  code.labels = lay.labels();
  for (size_t a = 0; a < m; ++a) {
    code.gauge_generators.push_back(two_body(n, lay.b(a), lay.r(a), 'X'));
  }
  for (size_t a = 0; a + 1 < m; ++a) {
    code.gauge_generators.push_back(two_body(n, lay.l(a), lay.l(a + 1), 'X'));
  }
  for (size_t a = 0; a < m; ++a) {
    code.gauge_generators.push_back(two_body(n, lay.b(a), lay.l(a), 'Z'));
  }
  for (size_t a = 0; a + 1 < m; ++a) {
    code.gauge_generators.push_back(two_body(n, lay.r(a), lay.r(a + 1), 'Z'));
  }
  return code;
}

std::vector<PauliPair> family_logicals(size_t k) {
  FamilyLayout lay(k);
  size_t n = lay.num_qubits();
  std::vector<PauliPair> out;
  for (size_t a = 0; a < lay.num_logical(); ++a) {
    out.push_back({two_body(n, lay.b(a), lay.l(a), 'X'), two_body(n, lay.b(a), lay.r(a), 'Z')});
  }
  return out;
}

std::vector<PauliPair> family_canonical_gauge_pairs(size_t k) {
  FamilyLayout lay(k);
  size_t n = lay.num_qubits();
  size_t m = lay.num_logical();
  std::vector<PauliPair> out;
  // i is the 1-based index of the formula.
  for (size_t i = 1; i < m; ++i) {
    std::vector<size_t> z_support;
    for (size_t j = 1; j <= i; ++j) {
      z_support.push_back(lay.l(j - 1));
      z_support.push_back(lay.b(j - 1));
    }
    out.push_back({two_body(n, lay.l(i - 1), lay.l(i), 'X'), product_of(n, z_support, 'Z')});
  }
  for (size_t i = 1; i < m; ++i) {
    PauliOp x_part(n);
    if (i % 2 == 1) {
      x_part = PauliOp::single(n, lay.l(m - 1), 'X');
    }
    for (size_t j = i + 1; j <= m; ++j) {
      x_part = x_part * product_of(n, {lay.l(j - 1), lay.b(j - 1), lay.r(j - 1)}, 'X');
    }
    out.push_back({two_body(n, lay.r(i - 1), lay.r(i), 'Z'), x_part});
  }
  return out;
}

std::pair<PauliOp, PauliOp> family_stabilizers(size_t k) {
  FamilyLayout lay(k);
  size_t n = lay.num_qubits();
  std::vector<size_t> all(n);
  for (size_t q = 0; q < n; ++q) {
    all[q] = q;
  }
  PauliOp sx = product_of(n, all, 'X');
  PauliOp sz = product_of(n, all, 'Z');
  SubsystemCodeSpec code = family_code(k);
  for (const auto &s : {sx, sz}) {
    if (!in_gauge_group(code, s) || !in_centralizer(code, s)) {
      throw std::logic_error("expected stabilizer " + s.str() + " is not in G intersect C(G)");
    }
  }
  return {sx, sz};
}

}  // namespace gaugepen
