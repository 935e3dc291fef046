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
#include <string>
#include <utility>
#include <vector>

#include "gaugepen/gf2.h"
#include "gaugepen/pauli.h"

namespace gaugepen {

/// A subsystem code given by a (not necessarily independent) list of gauge
/// generators. Labels are cosmetic and only used in reports.
struct SubsystemCodeSpec {
  size_t n = 0;
  std::vector<PauliOp> gauge_generators;
  std::map<size_t, std::string> labels;

  /// Throws std::invalid_argument if any generator has the wrong length.
  void validate() const;
  /// Label of qubit q, or "q<index>" when none was given.
  std::string label(size_t q) const;
  /// Pauli rendered with qubit labels, e.g. "X_B1 X_L1".
  std::string describe(const PauliOp &op) const;
};

/// Two operators that anticommute with each other and commute with every
/// other pair in the same list.
struct PauliPair {
  PauliOp first;
  PauliOp second;
};

struct CodeStructure {
  std::vector<PauliOp> stabilizers;
  /// (X-bar, Z-bar) pairs of bare logical operators.
  std::vector<PauliPair> logical_pairs;
  /// Canonical pairs of the gauge subsystem.
  std::vector<PauliPair> gauge_pairs;
  size_t num_logical = 0;
  size_t num_stabilizers = 0;
  size_t num_gauge = 0;
  /// Rank of the generator list; less than num_generators when dependent.
  size_t generator_rank = 0;
  size_t num_generators = 0;

  bool generators_independent() const { return generator_rank == num_generators; }
};

/// Result of a symplectic Gram-Schmidt pass over a list of symplectic vectors.
struct SymplecticSplit {
  std::vector<std::pair<BitVector, BitVector>> pairs;
  /// Nonzero leftovers; they commute with everything in the input span.
  std::vector<BitVector> isotropic;
};

/// Processes vectors in input order, pairing each one with the first later
/// vector it anticommutes with and orthogonalizing the rest against the pair.
SymplecticSplit symplectic_gram_schmidt(std::vector<BitVector> vectors);

/// Span of the generators' symplectic vectors (phases ignored).
F2Span gauge_span(const SubsystemCodeSpec &code);
bool in_gauge_group(const SubsystemCodeSpec &code, const PauliOp &op);
/// True iff op commutes with every gauge generator.
bool in_centralizer(const SubsystemCodeSpec &code, const PauliOp &op);

/// Basis (modulo phase) of all Paulis commuting with every gauge generator.
std::vector<PauliOp> centralizer_basis(const SubsystemCodeSpec &code);

CodeStructure derive_structure(const SubsystemCodeSpec &code);

/// Minimum weight of a Pauli that commutes with every stabilizer but is not
/// in the gauge group. Throws SearchCapExceeded if none has weight <= w_max.
size_t code_distance(const SubsystemCodeSpec &code, size_t w_max = 4);

/// Every generator has weight <= 2 and is purely X-type or purely Z-type.
bool is_css_two_local(const SubsystemCodeSpec &code);

/// Lightest element of the coset logical * S (phase dropped). The logical
/// must commute with all gauge generators.
PauliOp min_weight_bare_representative(const SubsystemCodeSpec &code, const PauliOp &logical, size_t w_max = 4);
/// Lightest element of the coset logical * G (phase dropped).
PauliOp min_weight_dressed_representative(const SubsystemCodeSpec &code, const PauliOp &logical,
                                          size_t w_max = 4);

/// Logical basis of a CSS code with X-type X-bars and Z-type Z-bars,
/// paired so that x_logicals[a] anticommutes with z_logicals[b] iff a == b.
struct CssLogicals {
  std::vector<PauliOp> x_logicals;
  std::vector<PauliOp> z_logicals;
  std::vector<PauliOp> x_stabilizers;
  std::vector<PauliOp> z_stabilizers;
};

/// Throws std::invalid_argument if a generator is neither X-type nor Z-type.
CssLogicals css_logical_pairs(const SubsystemCodeSpec &code);

}  // namespace gaugepen
