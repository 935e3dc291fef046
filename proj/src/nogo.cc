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

#include "gaugepen/nogo.h"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

#include "gaugepen/combinatorics.h"

namespace gaugepen {

const char *const kNogoCountingNote =
    "count = distinct two-local bare logicals of the opposite type (not reduced modulo stabilizers) that "
    "anticommute with the single-qubit logical of the bounded type on this logical qubit; min_weight = lightest "
    "same-type bare representative of that logical, by weight-increasing search up to w_cap";

namespace {

PauliOp typed_op(const BitVector &bits, char type) {
  BitVector zero(bits.size());
  return type == 'X' ? PauliOp(bits, zero) : PauliOp(zero, bits);
}

const BitVector &typed_bits(const PauliOp &op, char type) { return type == 'X' ? op.x_bits() : op.z_bits(); }

char opposite(char type) { return type == 'X' ? 'Z' : 'X'; }

void require_css_two_local(const SubsystemCodeSpec &code) {
  code.validate();
  if (!is_css_two_local(code)) {
    throw std::invalid_argument("the weight-bound check needs a code generated by two-local X-type and Z-type terms");
  }
}

/// Type-`type` operators of weight 1..w_max commuting with all gauge generators.
template <typename Fn>
void for_each_typed_centralizer_element(const SubsystemCodeSpec &code, size_t w_max, char type, Fn &&fn) {
  std::vector<BitVector> constraints;
  for (const auto &g : code.gauge_generators) {
    const BitVector &other = typed_bits(g, opposite(type));
    if (other.any()) {
      constraints.push_back(other);
    }
  }
  size_t n = code.n;
  for (size_t w = 1; w <= std::min(w_max, n); ++w) {
    bool go_on = for_each_subset(n, w, [&](const std::vector<size_t> &support) {
      BitVector bits(n);
      for (size_t q : support) {
        bits.set(q);
      }
      for (const auto &c : constraints) {
        if (bits.dot(c)) {
          return true;
        }
      }
      return fn(bits);
    });
    if (!go_on) {
      return;
    }
  }
}

}  // namespace

std::vector<PauliOp> enumerate_bare_logicals(const SubsystemCodeSpec &code, size_t w_cap, char type,
                                             bool dedup_mod_stabilizer) {
  require_css_two_local(code);
  if (w_cap < 2) {
    throw std::invalid_argument("w_cap must be at least 2");
  }
  if (type != 'X' && type != 'Z') {
    throw std::invalid_argument("bare logical type must be 'X' or 'Z'");
  }
  F2Span gauge = gauge_span(code);
  F2Span stabilizers(2 * code.n);
  if (dedup_mod_stabilizer) {
    for (const auto &s : derive_structure(code).stabilizers) {
      stabilizers.insert(s.symplectic());
    }
  }
  std::vector<PauliOp> out;
  std::set<BitVector> seen;
  for_each_typed_centralizer_element(code, w_cap, type, [&](const BitVector &bits) {
    PauliOp op = typed_op(bits, type);
    BitVector xz = op.symplectic();
    if (gauge.contains(xz)) {
      return true;
    }
    if (dedup_mod_stabilizer && !seen.insert(stabilizers.reduce(xz)).second) {
      return true;
    }
    out.push_back(std::move(op));
    return true;
  });
  return out;
}

bool NogoReport::has_counterexample() const {
  return std::any_of(rows.begin(), rows.end(), [](const NogoRow &r) { return r.resolved && !r.bound_satisfied; });
}

size_t NogoReport::unresolved_rows() const {
  return static_cast<size_t>(std::count_if(rows.begin(), rows.end(), [](const NogoRow &r) { return !r.resolved; }));
}

NogoReport check_weight_bound(const SubsystemCodeSpec &code, size_t w_cap) {
  require_css_two_local(code);
  if (w_cap < 2) {
    throw std::invalid_argument("w_cap must be at least 2");
  }
  CssLogicals css = css_logical_pairs(code);
  F2Span gauge = gauge_span(code);
  NogoReport report;

  std::map<char, std::vector<PauliOp>> two_local;
  for (char type : {'X', 'Z'}) {
    two_local[type] = enumerate_bare_logicals(code, 2, type, false);
    const auto &ops = two_local[type];
    for (size_t i = 0; i < ops.size() && report.supports_disjoint; ++i) {
      for (size_t j = i + 1; j < ops.size(); ++j) {
        if ((ops[i].support() & ops[j].support()).any()) {
          report.supports_disjoint = false;
          report.overlap_witness = std::make_pair(ops[i], ops[j]);
          break;
        }
      }
    }
  }

  size_t k = css.x_logicals.size();
  for (char type : {'X', 'Z'}) {
    const auto &same = type == 'X' ? css.x_logicals : css.z_logicals;
    for (size_t a = 0; a < k; ++a) {
      NogoRow row;
      row.logical = a;
      row.type = type;
      row.representative = same[a];
      for (const auto &op : two_local[opposite(type)]) {
        if (!commutes(op, same[a])) {
          row.witnesses.push_back(op);
        }
      }
      row.count = row.witnesses.size();

      // op and same[a] differ by a stabilizer iff op + same[a] lies in the gauge span
      // (both already commute with every generator).
      const BitVector &target = typed_bits(same[a], type);
      for_each_typed_centralizer_element(code, w_cap, type, [&](const BitVector &bits) {
        BitVector diff = bits;
        diff ^= target;
        if (!gauge.contains(typed_op(diff, type).symplectic())) {
          return true;
        }
        row.min_weight = bits.popcount();
        row.representative = typed_op(bits, type);
        return false;
      });
      if (row.min_weight) {
        row.bound_satisfied = *row.min_weight >= row.count;
      } else {
        // Every representative is heavier than w_cap.
        row.resolved = row.count <= w_cap;
        row.bound_satisfied = true;
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

namespace {

void add_instance(ScanReport &scan, ScanInstance instance) {
  for (const auto &row : instance.report.rows) {
    if (!row.resolved) {
      ++scan.unresolved_rows;
      continue;
    }
    if (!row.bound_satisfied) {
      ++scan.counterexample_rows;
    }
    if (row.min_weight) {
      ++scan.distribution[{*row.min_weight, row.count}];
    }
  }
  if (!instance.report.supports_disjoint) {
    ++scan.overlapping_instances;
  }
  scan.instances.push_back(std::move(instance));
}

}  // namespace

ScanReport scan_fixed(const std::vector<BinaryMatrix> &matrices, size_t w_cap) {
  ScanReport scan;
  for (size_t i = 0; i < matrices.size(); ++i) {
    ScanInstance inst;
    inst.index = i;
    inst.matrix = matrices[i];
    inst.params = code_params(matrices[i]);
    inst.report = check_weight_bound(code_from_matrix(matrices[i]), w_cap);
    add_instance(scan, std::move(inst));
  }
  return scan;
}

ScanReport scan_matrices(size_t size_max, size_t count, uint64_t seed, size_t w_cap) {
  if (size_max < 2 || size_max > kMaxScanSize) {
    throw std::invalid_argument("size_max must be between 2 and " + std::to_string(kMaxScanSize));
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<size_t> side(2, size_max);
  std::bernoulli_distribution cell(0.5);
  ScanReport scan;
  for (size_t i = 0; i < count; ++i) {
    ScanInstance inst;
    inst.index = i;
    while (true) {
      size_t s = side(rng);
      BinaryMatrix m(s, s);
      for (size_t r = 0; r < s; ++r) {
        for (size_t c = 0; c < s; ++c) {
          m.set(r, c, cell(rng));
        }
      }
      if (!m.is_zero()) {
        CodeParams p = code_params(m);
        if (p.d >= 2) {
          inst.matrix = std::move(m);
          inst.params = p;
          break;
        }
      }
      ++scan.rejected;
    }
    inst.report = check_weight_bound(code_from_matrix(inst.matrix), w_cap);
    add_instance(scan, std::move(inst));
  }
  return scan;
}

}  // namespace gaugepen
