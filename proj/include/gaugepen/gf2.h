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
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gaugepen/bit_vector.h"

namespace gaugepen {

/// Raised by exhaustive searches that would exceed their configured budget.
class SearchCapExceeded : public std::runtime_error {
 public:
  explicit SearchCapExceeded(const std::string &message) : std::runtime_error(message) {}
};

/// Raised when a minimum over the nonzero elements of an empty span is requested.
class EmptySpan : public std::invalid_argument {
 public:
  explicit EmptySpan(const std::string &message) : std::invalid_argument(message) {}
};

/// Dense matrix over GF(2), stored as one BitVector per row.
class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  BinaryMatrix(size_t rows, size_t cols);
  BinaryMatrix(std::initializer_list<std::initializer_list<int>> rows);
  static BinaryMatrix from_rows(std::vector<BitVector> rows, size_t cols);
  static BinaryMatrix identity(size_t n);

  /// Text format: one line per row of '0'/'1' characters. Ragged rows,
  /// stray characters and empty input are rejected.
  static BinaryMatrix parse(std::string_view text);
  std::string format() const;

  size_t rows() const { return rows_.size(); }
  size_t cols() const { return cols_; }
  bool get(size_t r, size_t c) const { return rows_[r].get(c); }
  void set(size_t r, size_t c, bool value = true) { rows_[r].set(c, value); }
  const BitVector &row(size_t r) const { return rows_[r]; }
  const std::vector<BitVector> &row_vectors() const { return rows_; }

  size_t hamming_weight() const;
  bool is_zero() const { return hamming_weight() == 0; }
  BinaryMatrix transpose() const;
  /// Matrix-vector product over GF(2); v has length cols().
  BitVector multiply(const BitVector &v) const;
  BinaryMatrix multiply(const BinaryMatrix &other) const;

  bool operator==(const BinaryMatrix &other) const = default;

 private:
  size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Incrementally built row space with a fully reduced echelon basis.
///
/// Every basis vector owns a pivot column and all other basis vectors are
/// zero there, so reduce() returns a canonical coset representative.
class F2Span {
 public:
  explicit F2Span(size_t width) : width_(width) {}

  /// Adds v; returns false if it was already in the span.
  bool insert(const BitVector &v);
  bool contains(const BitVector &v) const { return !reduce(v).any(); }
  /// Canonical representative of v modulo the span (zero on every pivot column).
  BitVector reduce(BitVector v) const;
  /// Combination of inserted vectors (by insertion index) producing v, if any.
  std::optional<BitVector> coefficients(const BitVector &v) const;

  size_t dimension() const { return basis_.size(); }
  size_t width() const { return width_; }
  size_t num_inserted() const { return num_inserted_; }
  const std::vector<BitVector> &basis() const { return basis_; }

 private:
  size_t width_;
  size_t num_inserted_ = 0;
  std::vector<BitVector> basis_;
  std::vector<size_t> pivots_;
  // combos_[i] records which inserted vectors sum to basis_[i]; grows with num_inserted_.
  std::vector<std::vector<size_t>> combos_;
};

size_t f2_rank(const BinaryMatrix &m);

/// Minimum Hamming weight over the row space. With exclude_zero the zero
/// vector is skipped and an all-zero matrix raises EmptySpan. Enumeration is
/// exhaustive over an independent basis; more than max_combinations
/// combinations raises SearchCapExceeded.
size_t min_weight_in_span(const BinaryMatrix &m, bool exclude_zero = true,
                          uint64_t max_combinations = uint64_t{1} << 24);

/// Coefficients c with sum_i c_i * basis.row(i) == v, or nullopt.
std::optional<BitVector> f2_membership(const BitVector &v, const BinaryMatrix &basis);

/// Basis (as rows) of {x : m x = 0}.
BinaryMatrix f2_kernel(const BinaryMatrix &m);

/// Inverse of a square invertible matrix; throws std::invalid_argument if singular.
BinaryMatrix f2_inverse(const BinaryMatrix &m);

}  // namespace gaugepen
