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

#include "gaugepen/pauli.h"

#include <bit>
#include <cctype>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace gaugepen {

namespace {

void require_same_qubits(const PauliOp &p, const PauliOp &q) {
  if (p.num_qubits() != q.num_qubits()) {
    throw std::invalid_argument("Pauli qubit count mismatch: " + std::to_string(p.num_qubits()) + " vs " +
                                std::to_string(q.num_qubits()));
  }
}

}  // namespace

PauliOp::PauliOp(BitVector x_bits, BitVector z_bits, uint8_t phase)
    : x_(std::move(x_bits)), z_(std::move(z_bits)), phase_(phase & 3) {
  if (x_.size() != z_.size()) {
    throw std::invalid_argument("x and z parts of a Pauli must have equal length");
  }
}

PauliOp PauliOp::parse(std::string_view text, size_t n) {
  PauliOp result(n);
  size_t pos = 0;
  auto skip_space = [&]() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  };
  skip_space();
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    result.phase_ = text[pos] == '-' ? 2 : 0;
    ++pos;
    if (pos < text.size() && text[pos] == 'i') {
      result.phase_ = (result.phase_ + 1) & 3;
      ++pos;
    }
  }
  std::vector<bool> seen(n, false);
  while (true) {
    skip_space();
    if (pos >= text.size()) {
      break;
    }
    char letter = text[pos++];
    if (letter == 'I') {
      // Bare identity token; an indexed "I3" is accepted and ignored too.
      size_t end = pos;
      while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) {
        ++end;
      }
      pos = end;
      continue;
    }
    if (letter != 'X' && letter != 'Y' && letter != 'Z') {
      throw std::invalid_argument("bad Pauli token in '" + std::string(text) + "'");
    }
    size_t index = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), index);
    if (ec != std::errc() || ptr == text.data() + pos) {
      throw std::invalid_argument("Pauli token missing qubit index in '" + std::string(text) + "'");
    }
    pos = static_cast<size_t>(ptr - text.data());
    if (index >= n) {
      throw std::invalid_argument("qubit index " + std::to_string(index) + " out of range for n=" +
                                  std::to_string(n));
    }
    if (seen[index]) {
      throw std::invalid_argument("repeated qubit index " + std::to_string(index) + " in '" + std::string(text) +
                                  "'");
    }
    seen[index] = true;
    if (letter != 'Z') {
      result.x_.set(index);
    }
    if (letter != 'X') {
      result.z_.set(index);
    }
  }
  return result;
}

PauliOp PauliOp::single(size_t n, size_t qubit, char axis) {
  if (qubit >= n) {
    throw std::invalid_argument("qubit index out of range");
  }
  PauliOp result(n);
  switch (axis) {
    case 'X':
      result.x_.set(qubit);
      break;
    case 'Y':
      result.x_.set(qubit);
      result.z_.set(qubit);
      break;
    case 'Z':
      result.z_.set(qubit);
      break;
    case 'I':
      break;
    default:
      throw std::invalid_argument(std::string("unknown Pauli axis '") + axis + "'");
  }
  return result;
}

PauliOp PauliOp::from_symplectic(const BitVector &xz) {
  if (xz.size() % 2 != 0) {
    throw std::invalid_argument("symplectic vector must have even length");
  }
  size_t n = xz.size() / 2;
  return PauliOp(xz.slice(0, n), xz.slice(n, n), 0);
}

char PauliOp::axis(size_t qubit) const {
  bool x = x_.get(qubit);
  bool z = z_.get(qubit);
  if (x && z) {
    return 'Y';
  }
  if (x) {
    return 'X';
  }
  return z ? 'Z' : 'I';
}

BitVector PauliOp::symplectic() const {
  size_t n = num_qubits();
  BitVector out(2 * n);
  out.assign_range(0, x_);
  out.assign_range(n, z_);
  return out;
}

std::string PauliOp::str() const {
  static constexpr const char *kSigns[4] = {"", "+i", "-", "-i"};
  std::string out = kSigns[phase_];
  bool first = true;
  for (size_t q : support().set_bits()) {
    if (!first) {
      out += ' ';
    }
    first = false;
    out += axis(q);
    out += std::to_string(q);
  }
  if (first) {
    out += 'I';
  }
  return out;
}

PauliOp pauli_mul(const PauliOp &p, const PauliOp &q) {
  require_same_qubits(p, q);
  // Per-qubit factors: X Y = iZ, Y Z = iX, Z X = iY contribute +1 to the
  // i-exponent; the reversed orders contribute +3.
  auto px = p.x_bits().words();
  auto pz = p.z_bits().words();
  auto qx = q.x_bits().words();
  auto qz = q.z_bits().words();
  uint64_t plus = 0;
  uint64_t minus = 0;
  for (size_t w = 0; w < px.size(); ++w) {
    uint64_t x1 = px[w], z1 = pz[w], x2 = qx[w], z2 = qz[w];
    uint64_t p_is_x = x1 & ~z1, p_is_y = x1 & z1, p_is_z = ~x1 & z1;
    uint64_t q_is_x = x2 & ~z2, q_is_y = x2 & z2, q_is_z = ~x2 & z2;
    plus += std::popcount((p_is_x & q_is_y) | (p_is_y & q_is_z) | (p_is_z & q_is_x));
    minus += std::popcount((p_is_x & q_is_z) | (p_is_y & q_is_x) | (p_is_z & q_is_y));
  }
  uint8_t phase = static_cast<uint8_t>((p.phase() + q.phase() + plus + 3 * minus) & 3);
  return PauliOp(p.x_bits() ^ q.x_bits(), p.z_bits() ^ q.z_bits(), phase);
}

bool symplectic_product(const BitVector &a, const BitVector &b) {
  if (a.size() != b.size() || a.size() % 2 != 0) {
    throw std::invalid_argument("symplectic_product needs equal even-length vectors");
  }
  size_t n = a.size() / 2;
  bool acc = false;
  for (size_t i = 0; i < n; ++i) {
    acc ^= (a.get(i) && b.get(n + i)) != (a.get(n + i) && b.get(i));
  }
  return acc;
}

bool commutes(const PauliOp &p, const PauliOp &q) {
  require_same_qubits(p, q);
  return p.x_bits().dot(q.z_bits()) == p.z_bits().dot(q.x_bits());
}

size_t weight(const PauliOp &p) { return p.support().popcount(); }

}  // namespace gaugepen
