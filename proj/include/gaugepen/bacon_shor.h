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

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "gaugepen/gf2.h"
#include "gaugepen/subsystem_code.h"

namespace gaugepen {

// ---------------------------------------------------------------------------
// Generalized Bacon-Shor codes from a binary matrix A: one qubit per nonzero
// cell, XX gauge terms along rows and ZZ gauge terms along columns.
// ---------------------------------------------------------------------------

/// Qubit numbering of a matrix code: row-major over the nonzero cells.
struct MatrixLayout {
  BinaryMatrix matrix;
  std::vector<std::pair<size_t, size_t>> cell_of_qubit;
  std::map<std::pair<size_t, size_t>, size_t> qubit_of_cell;

  size_t num_qubits() const { return cell_of_qubit.size(); }
};

MatrixLayout matrix_layout(const BinaryMatrix &a);

/// Gauge generators are XX on consecutive nonzero cells of each row and ZZ on
/// consecutive nonzero cells of each column. Throws on an all-zero matrix.
SubsystemCodeSpec code_from_matrix(const BinaryMatrix &a);

struct CodeParams {
  size_t n = 0;
  size_t k = 0;
  size_t d = 0;
  bool operator==(const CodeParams &) const = default;
};

/// n = |A|, k = rank(A) over GF(2), d = min over nonzero vectors of the row and column spaces.
CodeParams code_params(const BinaryMatrix &a);

// ---------------------------------------------------------------------------
// The [[6k, 2k, 2]] two-local family. Logical index a runs over 0..2k-1 and
// is printed 1-based in labels (B1, L1, R1, ...).
// ---------------------------------------------------------------------------

/// (2k+1) x (2k+1) matrix: row a < 2k has ones in column 0 and column a+1;
/// the last row has ones everywhere except column 0.
BinaryMatrix family_matrix(size_t k);

/// Qubit indices of the family in the row-major layout of family_matrix(k).
class FamilyLayout {
 public:
  explicit FamilyLayout(size_t k);

  size_t k() const { return k_; }
  size_t num_qubits() const { return 6 * k_; }
  size_t num_logical() const { return 2 * k_; }
  /// Cell (a, 0): first column.
  size_t r(size_t a) const { return 2 * a; }
  /// Cell (a, a+1).
  size_t b(size_t a) const { return 2 * a + 1; }
  /// Cell (2k, a+1): last row.
  size_t l(size_t a) const { return 4 * k_ + a; }

  std::map<size_t, std::string> labels() const;

 private:
  size_t k_;
};

/// Generators X_B X_R, X_L X_L (chain), Z_B Z_L, Z_R Z_R (chain); 8k-2 in total.
SubsystemCodeSpec family_code(size_t k);

/// (X_B X_L, Z_B Z_R) for every logical qubit.
std::vector<PauliPair> family_logicals(size_t k);

/// The 4k-2 canonical gauge pairs. For a = 1..2k-1 (1-based):
///   (X_La X_La+1, prod_{j<=a} Z_Lj Z_Bj) and
///   (Z_Ra Z_Ra+1, X_L2k^(a mod 2) prod_{j>a} X_Lj X_Bj X_Rj).
std::vector<PauliPair> family_canonical_gauge_pairs(size_t k);

/// X and Z on every qubit. Throws std::logic_error if either fails to be a
/// stabilizer of family_code(k).
std::pair<PauliOp, PauliOp> family_stabilizers(size_t k);

}  // namespace gaugepen
