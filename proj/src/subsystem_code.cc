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

#include "gaugepen/subsystem_code.h"

#include <bit>
#include <stdexcept>

#include "gaugepen/combinatorics.h"

namespace gaugepen {

namespace {

constexpr uint64_t kMaxCosetElements = uint64_t{1} << 22;

std::vector<BitVector> symplectic_vectors(const std::vector<PauliOp> &ops) {
  std::vector<BitVector> out;
  out.reserve(ops.size());
  for (const auto &op : ops) {
    out.push_back(op.symplectic());
  }
  return out;
}

/// Keeps the vectors that are independent of their predecessors, in order.
std::vector<BitVector> independent_prefix_subset(const std::vector<BitVector> &vectors, size_t width) {
  F2Span span(width);
  std::vector<BitVector> out;
  for (const auto &v : vectors) {
    if (span.insert(v)) {
      out.push_back(v);
    }
  }
  return out;
}

/// Enumerates the coset rep + span(basis) and returns its lightest element.
PauliOp lightest_in_coset(const PauliOp &rep, const std::vector<BitVector> &basis, const char *what) {
  if (basis.size() >= 63 || (uint64_t{1} << basis.size()) > kMaxCosetElements) {
    throw SearchCapExceeded(std::string(what) + ": coset of 2^" + std::to_string(basis.size()) +
                            " elements is too large to enumerate");
  }
  BitVector current = rep.symplectic();
  BitVector best = current;
  size_t best_weight = weight(rep);
  uint64_t total = uint64_t{1} << basis.size();
  for (uint64_t g = 1; g < total; ++g) {
    current ^= basis[std::countr_zero(g)];
    size_t w = PauliOp::from_symplectic(current).support().popcount();
    if (w < best_weight) {
      best_weight = w;
      best = current;
    }
  }
  return PauliOp::from_symplectic(best);
}

}  // namespace

void SubsystemCodeSpec::validate() const {
  if (n == 0) {
    throw std::invalid_argument("a code needs at least one qubit");
  }
  for (size_t i = 0; i < gauge_generators.size(); ++i) {
    if (gauge_generators[i].num_qubits() != n) {
      throw std::invalid_argument("gauge generator " + std::to_string(i) + " acts on " +
                                  std::to_string(gauge_generators[i].num_qubits()) + " qubits, expected " +
                                  std::to_string(n));
    }
  }
  for (const auto &[q, _] : labels) {
    if (q >= n) {
      throw std::invalid_argument("label for qubit " + std::to_string(q) + " out of range");
    }
  }
}

std::string SubsystemCodeSpec::label(size_t q) const {
  auto it = labels.find(q);
  return it == labels.end() ? "q" + std::to_string(q) : it->second;
}

std::string SubsystemCodeSpec::describe(const PauliOp &op) const {
  std::string out;
  for (size_t q : op.support().set_bits()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += op.axis(q);
    out += '_';
    out += label(q);
  }
  return out.empty() ? "I" : out;
}

SymplecticSplit symplectic_gram_schmidt(std::vector<BitVector> vectors) {
  SymplecticSplit split;
  size_t head = 0;
  while (head < vectors.size()) {
    BitVector u = vectors[head];
    if (!u.any()) {
      ++head;
      continue;
    }
    size_t partner = head + 1;
    while (partner < vectors.size() && !symplectic_product(u, vectors[partner])) {
      ++partner;
    }
    if (partner == vectors.size()) {
      split.isotropic.push_back(u);
      ++head;
      continue;
    }
    BitVector w = vectors[partner];
    vectors.erase(vectors.begin() + static_cast<std::ptrdiff_t>(partner));
    ++head;
    for (size_t i = head; i < vectors.size(); ++i) {
      bool with_w = symplectic_product(vectors[i], w);
      bool with_u = symplectic_product(vectors[i], u);
      if (with_w) {
        vectors[i] ^= u;
      }
      if (with_u) {
        vectors[i] ^= w;
      }
    }
    split.pairs.emplace_back(std::move(u), std::move(w));
  }
  return split;
}

F2Span gauge_span(const SubsystemCodeSpec &code) {
  F2Span span(2 * code.n);
  for (const auto &g : code.gauge_generators) {
    span.insert(g.symplectic());
  }
  return span;
}

bool in_gauge_group(const SubsystemCodeSpec &code, const PauliOp &op) {
  return gauge_span(code).contains(op.symplectic());
}

bool in_centralizer(const SubsystemCodeSpec &code, const PauliOp &op) {
  for (const auto &g : code.gauge_generators) {
    if (!commutes(g, op)) {
      return false;
    }
  }
  return true;
}

std::vector<PauliOp> centralizer_basis(const SubsystemCodeSpec &code) {
  code.validate();
  size_t n = code.n;
  // Row for generator g is [g.z | g.x], so row . [v.x | v.z] is the symplectic product.
  std::vector<BitVector> rows;
  for (const auto &g : code.gauge_generators) {
    BitVector row(2 * n);
    row.assign_range(0, g.z_bits());
    row.assign_range(n, g.x_bits());
    rows.push_back(std::move(row));
  }
  BinaryMatrix constraints = BinaryMatrix::from_rows(std::move(rows), 2 * n);
  BinaryMatrix kernel = f2_kernel(constraints);
  std::vector<PauliOp> basis;
  for (const auto &v : kernel.row_vectors()) {
    basis.push_back(PauliOp::from_symplectic(v));
  }
  return basis;
}

CodeStructure derive_structure(const SubsystemCodeSpec &code) {
  code.validate();
  size_t width = 2 * code.n;
  CodeStructure out;
  out.num_generators = code.gauge_generators.size();

  std::vector<BitVector> gauge = independent_prefix_subset(symplectic_vectors(code.gauge_generators), width);
  out.generator_rank = gauge.size();
  SymplecticSplit gauge_split = symplectic_gram_schmidt(gauge);
  F2Span stabilizer_span(width);
  for (const auto &s : gauge_split.isotropic) {
    stabilizer_span.insert(s);
    out.stabilizers.push_back(PauliOp::from_symplectic(s));
  }
  for (const auto &[a, b] : gauge_split.pairs) {
    out.gauge_pairs.push_back({PauliOp::from_symplectic(a), PauliOp::from_symplectic(b)});
  }

  SymplecticSplit centralizer_split = symplectic_gram_schmidt(symplectic_vectors(centralizer_basis(code)));
  for (const auto &[a, b] : centralizer_split.pairs) {
    out.logical_pairs.push_back({PauliOp::from_symplectic(stabilizer_span.reduce(a)),
                                 PauliOp::from_symplectic(stabilizer_span.reduce(b))});
  }

  out.num_stabilizers = out.stabilizers.size();
  out.num_gauge = out.gauge_pairs.size();
  out.num_logical = out.logical_pairs.size();
  if (centralizer_split.isotropic.size() != out.num_stabilizers ||
      out.num_logical + out.num_stabilizers + out.num_gauge != code.n) {
    throw std::logic_error("inconsistent code structure: k=" + std::to_string(out.num_logical) +
                           " s=" + std::to_string(out.num_stabilizers) + " g=" + std::to_string(out.num_gauge) +
                           " n=" + std::to_string(code.n));
  }
  return out;
}

size_t code_distance(const SubsystemCodeSpec &code, size_t w_max) {
  if (w_max < 1) {
    throw std::invalid_argument("code_distance needs w_max >= 1");
  }
  CodeStructure structure = derive_structure(code);
  if (structure.num_logical == 0) {
    throw std::invalid_argument("code encodes no logical qubits; distance is undefined");
  }
  F2Span gauge = gauge_span(code);
  size_t n = code.n;
  static constexpr char kAxes[3] = {'X', 'Y', 'Z'};
  for (size_t w = 1; w <= std::min(w_max, n); ++w) {
    bool found = false;
    for_each_subset(n, w, [&](const std::vector<size_t> &support) {
      size_t combos = 1;
      for (size_t i = 0; i < w; ++i) {
        combos *= 3;
      }
      for (size_t c = 0; c < combos && !found; ++c) {
        size_t code_word = c;
        BitVector x(n), z(n);
        for (size_t i = 0; i < w; ++i) {
          char a = kAxes[code_word % 3];
          code_word /= 3;
          if (a != 'Z') {
            x.set(support[i]);
          }
          if (a != 'X') {
            z.set(support[i]);
          }
        }
        PauliOp p(std::move(x), std::move(z));
        bool preserves = true;
        for (const auto &s : structure.stabilizers) {
          if (!commutes(s, p)) {
            preserves = false;
            break;
          }
        }
        if (preserves && !gauge.contains(p.symplectic())) {
          found = true;
        }
      }
      return !found;
    });
    if (found) {
      return w;
    }
  }
  throw SearchCapExceeded("code distance exceeds w_max=" + std::to_string(w_max));
}

bool is_css_two_local(const SubsystemCodeSpec &code) {
  for (const auto &g : code.gauge_generators) {
    if (weight(g) > 2) {
      return false;
    }
    if (!g.is_x_type() && !g.is_z_type()) {
      return false;
    }
  }
  return true;
}

PauliOp min_weight_bare_representative(const SubsystemCodeSpec &code, const PauliOp &logical, size_t w_max) {
  if (logical.num_qubits() != code.n) {
    throw std::invalid_argument("logical operator has the wrong qubit count");
  }
  if (!in_centralizer(code, logical)) {
    throw std::invalid_argument("operator " + logical.str() + " does not commute with the gauge group");
  }
  CodeStructure structure = derive_structure(code);
  PauliOp best = lightest_in_coset(logical, symplectic_vectors(structure.stabilizers), "bare representative");
  if (weight(best) > w_max) {
    throw SearchCapExceeded("lightest bare representative has weight " + std::to_string(weight(best)) +
                            " > w_max=" + std::to_string(w_max));
  }
  return best;
}

PauliOp min_weight_dressed_representative(const SubsystemCodeSpec &code, const PauliOp &logical,
                                          size_t w_max) {
  if (logical.num_qubits() != code.n) {
    throw std::invalid_argument("logical operator has the wrong qubit count");
  }
  auto basis = independent_prefix_subset(symplectic_vectors(code.gauge_generators), 2 * code.n);
  PauliOp best = lightest_in_coset(logical, basis, "dressed representative");
  if (weight(best) > w_max) {
    throw SearchCapExceeded("lightest dressed representative has weight " + std::to_string(weight(best)) +
                            " > w_max=" + std::to_string(w_max));
  }
  return best;
}

namespace {

struct TypedSplit {
  std::vector<BitVector> stabilizers;
  std::vector<BitVector> logicals;
};

/// For one Pauli type: the stabilizers of that type are span(same) intersected
/// with ker(other); logicals complete them to a basis of ker(other).
TypedSplit split_one_type(const std::vector<BitVector> &same, const std::vector<BitVector> &other, size_t n) {
  BinaryMatrix other_m = BinaryMatrix::from_rows(other, n);
  TypedSplit out;
  F2Span stab(n);
  if (!same.empty()) {
    BinaryMatrix same_m = BinaryMatrix::from_rows(same, n);
    // c in ker(other * same^T) <=> sum_j c_j same_j commutes with every `other` row.
    BinaryMatrix gram = other_m.multiply(same_m.transpose());
    BinaryMatrix coeffs = f2_kernel(gram);
    for (const auto &c : coeffs.row_vectors()) {
      BitVector v(n);
      for (size_t j : c.set_bits()) {
        v ^= same[j];
      }
      if (stab.insert(v)) {
        out.stabilizers.push_back(v);
      }
    }
  }
  BinaryMatrix centralizer = f2_kernel(other_m);
  for (const auto &v : centralizer.row_vectors()) {
    if (stab.insert(v)) {
      out.logicals.push_back(v);
    }
  }
  return out;
}

}  // namespace

CssLogicals css_logical_pairs(const SubsystemCodeSpec &code) {
  code.validate();
  size_t n = code.n;
  std::vector<BitVector> xs, zs;
  for (const auto &g : code.gauge_generators) {
    if (g.is_identity()) {
      continue;
    }
    if (g.is_x_type()) {
      xs.push_back(g.x_bits());
    } else if (g.is_z_type()) {
      zs.push_back(g.z_bits());
    } else {
      throw std::invalid_argument("generator " + g.str() + " is neither X-type nor Z-type");
    }
  }
  TypedSplit x_split = split_one_type(xs, zs, n);
  TypedSplit z_split = split_one_type(zs, xs, n);
  if (x_split.logicals.size() != z_split.logicals.size()) {
    throw std::logic_error("CSS split produced unequal X and Z logical counts");
  }
  size_t k = x_split.logicals.size();
  BinaryMatrix gram(k, k);
  for (size_t a = 0; a < k; ++a) {
    for (size_t b = 0; b < k; ++b) {
      gram.set(a, b, x_split.logicals[a].dot(z_split.logicals[b]));
    }
  }
  BinaryMatrix inv = f2_inverse(gram);
  CssLogicals out;
  BitVector zero(n);
  for (size_t a = 0; a < k; ++a) {
    BitVector x(n);
    for (size_t c : inv.row(a).set_bits()) {
      x ^= x_split.logicals[c];
    }
    out.x_logicals.emplace_back(x, zero);
    out.z_logicals.emplace_back(zero, z_split.logicals[a]);
  }
  for (const auto &s : x_split.stabilizers) {
    out.x_stabilizers.emplace_back(s, zero);
  }
  for (const auto &s : z_split.stabilizers) {
    out.z_stabilizers.emplace_back(zero, s);
  }
  return out;
}

}  // namespace gaugepen
