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
#include <string>
#include <string_view>

#include "gaugepen/bit_vector.h"

namespace gaugepen {

/// An n-qubit Pauli operator i^phase * (sigma_0 (x) ... (x) sigma_{n-1}).
///
/// Qubit j carries I, X, Z or Y for (x_j, z_j) = (0,0), (1,0), (0,1), (1,1).
/// Products follow X Z = -i Y. The operator is Hermitian iff phase is even.
class PauliOp {
 public:
  PauliOp() = default;
  /// Identity on n qubits.
  explicit PauliOp(size_t n) : x_(n), z_(n) {}
  PauliOp(BitVector x_bits, BitVector z_bits, uint8_t phase = 0);

  /// Parses whitespace-separated tokens such as "X0 Z3 Y5" (0-based indices).
  /// An optional leading sign "+", "-", "+i", "-i" sets the phase; "I" or an
  /// empty string is the identity. Repeated qubit indices are rejected.
  static PauliOp parse(std::string_view text, size_t n);
  static PauliOp single(size_t n, size_t qubit, char axis);
  /// Hermitian, phase-0 operator from a symplectic vector [x | z] of length 2n.
  static PauliOp from_symplectic(const BitVector &xz);

  size_t num_qubits() const { return x_.size(); }
  const BitVector &x_bits() const { return x_; }
  const BitVector &z_bits() const { return z_; }
  uint8_t phase() const { return phase_; }

  /// 'I', 'X', 'Y' or 'Z'.
  char axis(size_t qubit) const;
  /// Concatenation [x | z]; phase is dropped.
  BitVector symplectic() const;
  BitVector support() const { return x_ | z_; }

  bool is_identity() const { return !x_.any() && !z_.any(); }
  bool is_hermitian() const { return (phase_ & 1) == 0; }
  /// True for operators built only from X (respectively Z) factors; identity counts as both.
  bool is_x_type() const { return !z_.any(); }
  bool is_z_type() const { return !x_.any(); }

  /// The operator with phase reset to zero.
  PauliOp unsigned_op() const { return PauliOp(x_, z_, 0); }
  PauliOp with_phase(uint8_t phase) const { return PauliOp(x_, z_, phase); }

  /// Tokens as accepted by parse(), prefixed by the sign when phase != 0.
  std::string str() const;

  bool operator==(const PauliOp &other) const = default;
  auto operator<=>(const PauliOp &other) const = default;

 private:
  BitVector x_;
  BitVector z_;
  uint8_t phase_ = 0;
};

/// Exact operator product p * q.
PauliOp pauli_mul(const PauliOp &p, const PauliOp &q);
inline PauliOp operator*(const PauliOp &p, const PauliOp &q) { return pauli_mul(p, q); }

/// Symplectic inner product <p.x, q.z> + <p.z, q.x> mod 2 of two length-2n vectors.
bool symplectic_product(const BitVector &a, const BitVector &b);

bool commutes(const PauliOp &p, const PauliOp &q);
size_t weight(const PauliOp &p);

}  // namespace gaugepen
