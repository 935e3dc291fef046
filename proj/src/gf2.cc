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

#include "gaugepen/gf2.h"

#include <algorithm>
#include <bit>
#include <iterator>
#include <sstream>

namespace gaugepen {

namespace {

std::vector<size_t> symmetric_difference(const std::vector<size_t> &a, const std::vector<size_t> &b) {
  std::vector<size_t> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

BinaryMatrix::BinaryMatrix(size_t rows, size_t cols) : cols_(cols), rows_(rows, BitVector(cols)) {}

BinaryMatrix::BinaryMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  cols_ = rows.size() == 0 ? 0 : rows.begin()->size();
  for (const auto &r : rows) {
    if (r.size() != cols_) {
      throw std::invalid_argument("ragged BinaryMatrix initializer");
    }
    BitVector bits(cols_);
    size_t c = 0;
    for (int v : r) {
      if (v != 0 && v != 1) {
        throw std::invalid_argument("BinaryMatrix entries must be 0 or 1");
      }
      bits.set(c++, v == 1);
    }
    rows_.push_back(std::move(bits));
  }
}

BinaryMatrix BinaryMatrix::from_rows(std::vector<BitVector> rows, size_t cols) {
  BinaryMatrix m;
  m.cols_ = cols;
  for (const auto &r : rows) {
    if (r.size() != cols) {
      throw std::invalid_argument("row length does not match column count");
    }
  }
  m.rows_ = std::move(rows);
  return m;
}

BinaryMatrix BinaryMatrix::identity(size_t n) {
  BinaryMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) {
    m.set(i, i);
  }
  return m;
}

BinaryMatrix BinaryMatrix::parse(std::string_view text) {
  std::vector<BitVector> rows;
  size_t cols = 0;
  size_t line_no = 0;
  size_t start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    if (line.empty()) {
      // Only a trailing blank line is tolerated.
      if (start < text.size()) {
        throw std::invalid_argument("empty row at line " + std::to_string(line_no));
      }
      continue;
    }
    if (rows.empty()) {
      cols = line.size();
    } else if (line.size() != cols) {
      throw std::invalid_argument("ragged row at line " + std::to_string(line_no) + ": expected " +
                                  std::to_string(cols) + " columns, got " + std::to_string(line.size()));
    }
    try {
      rows.push_back(BitVector::from_string(line));
    } catch (const std::invalid_argument &) {
      throw std::invalid_argument("invalid character at line " + std::to_string(line_no));
    }
  }
  if (rows.empty()) {
    throw std::invalid_argument("matrix text contains no rows");
  }
  return from_rows(std::move(rows), cols);
}

std::string BinaryMatrix::format() const {
  std::string out;
  for (const auto &r : rows_) {
    out += r.str();
    out += '\n';
  }
  return out;
}

size_t BinaryMatrix::hamming_weight() const {
  size_t total = 0;
  for (const auto &r : rows_) {
    total += r.popcount();
  }
  return total;
}

BinaryMatrix BinaryMatrix::transpose() const {
  BinaryMatrix t(cols_, rows());
  for (size_t r = 0; r < rows(); ++r) {
    for (size_t c : rows_[r].set_bits()) {
      t.set(c, r);
    }
  }
  return t;
}

BitVector BinaryMatrix::multiply(const BitVector &v) const {
  if (v.size() != cols_) {
    throw std::invalid_argument("matrix-vector dimension mismatch");
  }
  BitVector out(rows());
  for (size_t r = 0; r < rows(); ++r) {
    out.set(r, rows_[r].dot(v));
  }
  return out;
}

BinaryMatrix BinaryMatrix::multiply(const BinaryMatrix &other) const {
  if (other.rows() != cols_) {
    throw std::invalid_argument("matrix-matrix dimension mismatch");
  }
  BinaryMatrix out(rows(), other.cols());
  for (size_t r = 0; r < rows(); ++r) {
    BitVector acc(other.cols());
    for (size_t c : rows_[r].set_bits()) {
      acc ^= other.row(c);
    }
    out.rows_[r] = std::move(acc);
  }
  return out;
}

bool F2Span::insert(const BitVector &v) {
  if (v.size() != width_) {
    throw std::invalid_argument("F2Span width mismatch");
  }
  size_t index = num_inserted_++;
  BitVector rem = v;
  std::vector<size_t> combo{index};
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (rem.get(pivots_[i])) {
      rem ^= basis_[i];
      combo = symmetric_difference(combo, combos_[i]);
    }
  }
  if (!rem.any()) {
    return false;
  }
  size_t pivot = rem.first_set();
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (basis_[i].get(pivot)) {
      basis_[i] ^= rem;
      combos_[i] = symmetric_difference(combos_[i], combo);
    }
  }
  basis_.push_back(std::move(rem));
  pivots_.push_back(pivot);
  combos_.push_back(std::move(combo));
  return true;
}

BitVector F2Span::reduce(BitVector v) const {
  if (v.size() != width_) {
    throw std::invalid_argument("F2Span width mismatch");
  }
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (v.get(pivots_[i])) {
      v ^= basis_[i];
    }
  }
  return v;
}

std::optional<BitVector> F2Span::coefficients(const BitVector &v) const {
  BitVector rem = v;
  std::vector<size_t> combo;
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (rem.get(pivots_[i])) {
      rem ^= basis_[i];
      combo = symmetric_difference(combo, combos_[i]);
    }
  }
  if (rem.any()) {
    return std::nullopt;
  }
  BitVector out(num_inserted_);
  for (size_t i : combo) {
    out.set(i);
  }
  return out;
}

size_t f2_rank(const BinaryMatrix &m) {
  F2Span span(m.cols());
  for (const auto &r : m.row_vectors()) {
    span.insert(r);
  }
  return span.dimension();
}

size_t min_weight_in_span(const BinaryMatrix &m, bool exclude_zero, uint64_t max_combinations) {
  F2Span span(m.cols());
  for (const auto &r : m.row_vectors()) {
    span.insert(r);
  }
  if (!exclude_zero) {
    return 0;
  }
  const auto &basis = span.basis();
  if (basis.empty()) {
    throw EmptySpan("row space of an all-zero matrix has no nonzero vector");
  }
  if (basis.size() >= 64 || (uint64_t{1} << basis.size()) > max_combinations) {
    throw SearchCapExceeded("min_weight_in_span: 2^" + std::to_string(basis.size()) +
                            " combinations exceed the cap of " + std::to_string(max_combinations));
  }
  // Gray-code walk: consecutive combinations differ by one basis vector.
  BitVector current(m.cols());
  size_t best = m.cols() + 1;
  uint64_t total = uint64_t{1} << basis.size();
  for (uint64_t g = 1; g < total; ++g) {
    current ^= basis[std::countr_zero(g)];
    best = std::min(best, current.popcount());
  }
  return best;
}

std::optional<BitVector> f2_membership(const BitVector &v, const BinaryMatrix &basis) {
  if (v.size() != basis.cols()) {
    throw std::invalid_argument("f2_membership width mismatch");
  }
  F2Span span(basis.cols());
  for (const auto &r : basis.row_vectors()) {
    span.insert(r);
  }
  return span.coefficients(v);
}

BinaryMatrix f2_kernel(const BinaryMatrix &m) {
  // Row-reduce [m^T | I]: rows of I whose m^T part vanishes span the kernel.
  size_t n = m.cols();
  BinaryMatrix mt = m.transpose();
  std::vector<BitVector> aug;
  aug.reserve(n);
  for (size_t i = 0; i < n; ++i) {
    BitVector row(m.rows() + n);
    row.assign_range(0, mt.row(i));
    row.set(m.rows() + i);
    aug.push_back(std::move(row));
  }
  size_t rank = 0;
  for (size_t col = 0; col < m.rows() && rank < aug.size(); ++col) {
    size_t pivot = rank;
    while (pivot < aug.size() && !aug[pivot].get(col)) {
      ++pivot;
    }
    if (pivot == aug.size()) {
      continue;
    }
    std::swap(aug[rank], aug[pivot]);
    for (size_t r = 0; r < aug.size(); ++r) {
      if (r != rank && aug[r].get(col)) {
        aug[r] ^= aug[rank];
      }
    }
    ++rank;
  }
  std::vector<BitVector> kernel;
  for (size_t r = rank; r < aug.size(); ++r) {
    kernel.push_back(aug[r].slice(m.rows(), n));
  }
  return BinaryMatrix::from_rows(std::move(kernel), n);
}

BinaryMatrix f2_inverse(const BinaryMatrix &m) {
  size_t n = m.rows();
  if (m.cols() != n) {
    throw std::invalid_argument("f2_inverse requires a square matrix");
  }
  std::vector<BitVector> aug;
  for (size_t i = 0; i < n; ++i) {
    BitVector row(2 * n);
    row.assign_range(0, m.row(i));
    row.set(n + i);
    aug.push_back(std::move(row));
  }
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && !aug[pivot].get(col)) {
      ++pivot;
    }
    if (pivot == n) {
      throw std::invalid_argument("matrix is singular over GF(2)");
    }
    std::swap(aug[col], aug[pivot]);
    for (size_t r = 0; r < n; ++r) {
      if (r != col && aug[r].get(col)) {
        aug[r] ^= aug[col];
      }
    }
  }
  std::vector<BitVector> inv;
  for (auto &row : aug) {
    inv.push_back(row.slice(n, n));
  }
  return BinaryMatrix::from_rows(std::move(inv), n);
}

}  // namespace gaugepen
