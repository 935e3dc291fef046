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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "gaugepen/pauli.h"

namespace gaugepen {

using Complex = std::complex<double>;

constexpr size_t kDefaultDenseCap = 14;

/// Raised when a dense 2^n matrix is requested above the configured qubit cap.
class DenseCapExceeded : public std::runtime_error {
 public:
  explicit DenseCapExceeded(const std::string &message) : std::runtime_error(message) {}
};

struct PauliTerm {
  double coefficient;
  PauliOp op;
};

/// Real linear combination of Hermitian Paulis. Every stored op has phase 0;
/// no two terms share the same Pauli.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(size_t n) : n_(n) {}

  size_t num_qubits() const { return n_; }
  const std::vector<PauliTerm> &terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Adds coefficient * op. A phase of 2 (a minus sign) is folded into the
  /// coefficient; odd phases are rejected. Terms that cancel are removed.
  void add(double coefficient, const PauliOp &op);
  PauliSum &operator+=(const PauliSum &other);
  PauliSum scaled(double factor) const;

  /// Coefficient of op's Pauli (0 when absent), signed by op's phase.
  double coefficient_of(const PauliOp &op) const;

  /// Copy acting on `total` qubits with qubit q mapped to q + offset.
  PauliSum embedded(size_t total, size_t offset) const;

  /// True if some term has an odd number of Y factors (complex matrix entries).
  bool has_imaginary_entries() const;

  std::string str() const;

 private:
  void rebuild_index();

  size_t n_ = 0;
  std::vector<PauliTerm> terms_;
  std::unordered_map<BitVector, size_t, BitVectorHash> index_;
};

PauliSum operator+(PauliSum a, const PauliSum &b);

/// Basis convention: qubit q is bit q of the basis index, so
/// P|b> = i^(phase + #Y) (-1)^popcount(b & z) |b ^ x>.
struct PauliAction {
  uint64_t x_mask;
  uint64_t z_mask;
  /// i^(phase + #Y).
  Complex prefactor;

  explicit PauliAction(const PauliOp &op);
  Complex sign(uint64_t basis) const;
};

/// Dense matrix of one Pauli operator.
Eigen::MatrixXcd pauli_matrix(const PauliOp &op, size_t dense_cap = kDefaultDenseCap);

/// Dense 2^n x 2^n matrix. Throws DenseCapExceeded above dense_cap qubits;
/// use apply() for larger sums.
Eigen::MatrixXcd to_matrix(const PauliSum &h, size_t dense_cap = kDefaultDenseCap);
/// Same as to_matrix for sums without imaginary entries; throws std::invalid_argument otherwise.
Eigen::MatrixXd to_real_matrix(const PauliSum &h, size_t dense_cap = kDefaultDenseCap);

/// Matrix-free products P * v and H * v over the columns of v.
Eigen::MatrixXcd apply(const PauliOp &op, const Eigen::MatrixXcd &v);
Eigen::MatrixXcd apply(const PauliSum &h, const Eigen::MatrixXcd &v);

}  // namespace gaugepen
