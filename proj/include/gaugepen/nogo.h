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
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaugepen/bacon_shor.h"
#include "gaugepen/subsystem_code.h"

namespace gaugepen {

/// How qualifying operators are counted; embedded in every report.
extern const char *const kNogoCountingNote;

/// Paulis of the given type ('X' or 'Z') with weight 1..w_cap that commute
/// with every gauge generator and lie outside the gauge group, in order of
/// increasing weight. With dedup, only the first operator of each class
/// modulo the stabilizer group is kept. Throws std::invalid_argument for
/// codes that are not CSS two-local or for w_cap < 2.
std::vector<PauliOp> enumerate_bare_logicals(const SubsystemCodeSpec &code, size_t w_cap, char type,
                                             bool dedup_mod_stabilizer = true);

struct NogoRow {
  size_t logical = 0;
  /// Type of the representative whose weight is bounded ('X' or 'Z'); the
  /// counted operators have the opposite type.
  char type = 'X';
  /// Empty when no representative has weight <= w_cap.
  std::optional<size_t> min_weight;
  PauliOp representative;
  /// Distinct two-local bare logicals of the opposite type acting on this logical qubit.
  size_t count = 0;
  std::vector<PauliOp> witnesses;
  /// False only when the bound is resolved and violated.
  bool bound_satisfied = true;
  /// False when min_weight exceeds w_cap and count > w_cap.
  bool resolved = true;
};

struct NogoReport {
  std::vector<NogoRow> rows;
  /// Same-type two-local bare logicals have pairwise disjoint supports.
  bool supports_disjoint = true;
  std::optional<std::pair<PauliOp, PauliOp>> overlap_witness;
  std::string note = kNogoCountingNote;

  bool has_counterexample() const;
  size_t unresolved_rows() const;
};

/// Weight bound of bare logicals against the number of opposite-type two-local
/// bare logicals, for every logical qubit and both types.
NogoReport check_weight_bound(const SubsystemCodeSpec &code, size_t w_cap = 4);

struct ScanInstance {
  uint64_t index = 0;
  BinaryMatrix matrix;
  CodeParams params;
  NogoReport report;
};

struct ScanReport {
  std::vector<ScanInstance> instances;
  size_t rejected = 0;
  size_t counterexample_rows = 0;
  size_t unresolved_rows = 0;
  size_t overlapping_instances = 0;
  /// (min weight, count) -> number of resolved rows.
  std::map<std::pair<size_t, size_t>, size_t> distribution;

  bool passed() const { return counterexample_rows == 0 && overlapping_instances == 0; }
};

constexpr size_t kMaxScanSize = 6;

/// Random square matrices with side in [2, size_max] and cells set with
/// probability 1/2, resampled until the code distance is at least 2.
/// Throws std::invalid_argument when size_max is outside [2, 6].
ScanReport scan_matrices(size_t size_max, size_t count, uint64_t seed, size_t w_cap = 4);

/// Runs the weight-bound check on a fixed list of matrices.
ScanReport scan_fixed(const std::vector<BinaryMatrix> &matrices, size_t w_cap = 4);

}  // namespace gaugepen
