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

#include <bit>
#include <sstream>

namespace gaugepen {

namespace {

uint64_t low_word(const BitVector &v) {
  if (v.size() > 63) {
    throw std::invalid_argument("state-vector operations support at most 63 qubits");
  }
  return v.size() == 0 ? 0 : v.words()[0];
}

void check_cap(size_t n, size_t dense_cap) {
  if (n > dense_cap) {
    throw DenseCapExceeded("dense matrix on " + std::to_string(n) + " qubits exceeds the dense cap of " +
                           std::to_string(dense_cap) + " qubits; use the matrix-free apply() path instead");
  }
}

constexpr Complex kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

void PauliSum::add(double coefficient, const PauliOp &op) {
  if (op.num_qubits() != n_) {
    throw std::invalid_argument("term " + op.str() + " acts on " + std::to_string(op.num_qubits()) +
                                " qubits, sum has " + std::to_string(n_));
  }
  if (!op.is_hermitian()) {
    throw std::invalid_argument("term " + op.str() + " is not Hermitian");
  }
  if (op.phase() == 2) {
    coefficient = -coefficient;
  }
  if (coefficient == 0.0) {
    return;
  }
  BitVector key = op.symplectic();
  auto it = index_.find(key);
  if (it == index_.end()) {
    index_.emplace(std::move(key), terms_.size());
    terms_.push_back({coefficient, op.unsigned_op()});
    return;
  }
  terms_[it->second].coefficient += coefficient;
  if (terms_[it->second].coefficient == 0.0) {
    terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(it->second));
    rebuild_index();
  }
}

void PauliSum::rebuild_index() {
  index_.clear();
  for (size_t i = 0; i < terms_.size(); ++i) {
    index_.emplace(terms_[i].op.symplectic(), i);
  }
}

PauliSum &PauliSum::operator+=(const PauliSum &other) {
  if (other.n_ != n_) {
    throw std::invalid_argument("cannot add sums on different qubit counts");
  }
  for (const auto &t : other.terms_) {
    add(t.coefficient, t.op);
  }
  return *this;
}

PauliSum operator+(PauliSum a, const PauliSum &b) {
  a += b;
  return a;
}

PauliSum PauliSum::scaled(double factor) const {
  PauliSum out(n_);
  for (const auto &t : terms_) {
    out.add(factor * t.coefficient, t.op);
  }
  return out;
}

double PauliSum::coefficient_of(const PauliOp &op) const {
  auto it = index_.find(op.symplectic());
  if (it == index_.end()) {
    return 0.0;
  }
  double c = terms_[it->second].coefficient;
  return op.phase() == 2 ? -c : c;
}

PauliSum PauliSum::embedded(size_t total, size_t offset) const {
  if (offset + n_ > total) {
    throw std::invalid_argument("embedding does not fit");
  }
  PauliSum out(total);
  for (const auto &t : terms_) {
    BitVector x(total), z(total);
    x.assign_range(offset, t.op.x_bits());
    z.assign_range(offset, t.op.z_bits());
    out.add(t.coefficient, PauliOp(std::move(x), std::move(z)));
  }
  return out;
}

bool PauliSum::has_imaginary_entries() const {
  for (const auto &t : terms_) {
    if (((t.op.x_bits() & t.op.z_bits()).popcount() & 1) != 0) {
      return true;
    }
  }
  return false;
}

std::string PauliSum::str() const {
  if (terms_.empty()) {
    return "0";
  }
  std::ostringstream out;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i > 0) {
      out << " + ";
    }
    out << terms_[i].coefficient << "*(" << terms_[i].op.str() << ")";
  }
  return out.str();
}

PauliAction::PauliAction(const PauliOp &op)
    : x_mask(low_word(op.x_bits())),
      z_mask(low_word(op.z_bits())),
      prefactor(kIPowers[(op.phase() + std::popcount(x_mask & z_mask)) & 3]) {}

Complex PauliAction::sign(uint64_t basis) const {
  return (std::popcount(basis & z_mask) & 1) ? -prefactor : prefactor;
}

Eigen::MatrixXcd pauli_matrix(const PauliOp &op, size_t dense_cap) {
  check_cap(op.num_qubits(), dense_cap);
  size_t dim = size_t{1} << op.num_qubits();
  PauliAction act(op);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (uint64_t b = 0; b < dim; ++b) {
    m(b ^ act.x_mask, b) = act.sign(b);
  }
  return m;
}

Eigen::MatrixXcd to_matrix(const PauliSum &h, size_t dense_cap) {
  check_cap(h.num_qubits(), dense_cap);
  size_t dim = size_t{1} << h.num_qubits();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto &t : h.terms()) {
    PauliAction act(t.op);
    for (uint64_t b = 0; b < dim; ++b) {
      m(b ^ act.x_mask, b) += t.coefficient * act.sign(b);
    }
  }
  return m;
}

Eigen::MatrixXd to_real_matrix(const PauliSum &h, size_t dense_cap) {
  check_cap(h.num_qubits(), dense_cap);
  if (h.has_imaginary_entries()) {
    throw std::invalid_argument("sum has terms with an odd number of Y factors; use to_matrix");
  }
  size_t dim = size_t{1} << h.num_qubits();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto &t : h.terms()) {
    PauliAction act(t.op);
    for (uint64_t b = 0; b < dim; ++b) {
      m(b ^ act.x_mask, b) += t.coefficient * act.sign(b).real();
    }
  }
  return m;
}

Eigen::MatrixXcd apply(const PauliOp &op, const Eigen::MatrixXcd &v) {
  size_t dim = size_t{1} << op.num_qubits();
  if (static_cast<size_t>(v.rows()) != dim) {
    throw std::invalid_argument("state dimension does not match the operator");
  }
  PauliAction act(op);
  Eigen::MatrixXcd out(v.rows(), v.cols());
  for (uint64_t b = 0; b < dim; ++b) {
    out.row(b ^ act.x_mask) = act.sign(b) * v.row(b);
  }
  return out;
}

Eigen::MatrixXcd apply(const PauliSum &h, const Eigen::MatrixXcd &v) {
  size_t dim = size_t{1} << h.num_qubits();
  if (static_cast<size_t>(v.rows()) != dim) {
    throw std::invalid_argument("state dimension does not match the operator");
  }
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(v.rows(), v.cols());
  for (const auto &t : h.terms()) {
    PauliAction act(t.op);
    for (uint64_t b = 0; b < dim; ++b) {
      out.row(b ^ act.x_mask) += (t.coefficient * act.sign(b)) * v.row(b);
    }
  }
  return out;
}

}  // namespace gaugepen
