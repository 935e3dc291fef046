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

#include "gaugepen/spectral.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <numeric>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include "gaugepen/bacon_shor.h"
#include "gaugepen/hamiltonian.h"

namespace gaugepen {

namespace {

void check_info(lapack_int info, const char *routine) {
  if (info != 0) {
    throw std::runtime_error(std::string(routine) + " failed with info=" + std::to_string(info));
  }
}

F2Span span_of(const std::vector<PauliOp> &ops, size_t n) {
  F2Span span(2 * n);
  for (const auto &op : ops) {
    span.insert(op.symplectic());
  }
  return span;
}

uint64_t mask_of(const BitVector &v) { return v.size() == 0 ? 0 : v.words()[0]; }

int parity_sign(uint64_t basis, uint64_t mask) { return (std::popcount(basis & mask) & 1) ? -1 : 1; }

/// Union-find over block-local indices.
class DisjointSets {
 public:
  explicit DisjointSets(size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), size_t{0}); }
  size_t find(size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }
  void unite(size_t a, size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<size_t> parent_;
};

/// Residual of a few eigenpairs against the input. Some OpenBLAS kernel
/// selections return non-orthogonal vectors without reporting an error.
template <typename Matrix>
void check_eigenpairs(const Matrix &input, const Eigen::VectorXd &values, const Matrix &vectors) {
  Eigen::Index n = input.rows();
  if (n == 0) {
    return;
  }
  double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
  Eigen::Index probes = std::min<Eigen::Index>(n, 8);
  for (Eigen::Index p = 0; p < probes; ++p) {
    Eigen::Index col = probes == 1 ? 0 : p * (n - 1) / (probes - 1);
    auto v = vectors.col(col);
    double residual = (input * v - values(col) * v).norm();
    if (!(residual < 1e-8 * scale * std::sqrt(static_cast<double>(n))) || std::abs(v.norm() - 1.0) > 1e-8) {
      throw std::runtime_error("LAPACK returned an inaccurate eigenpair (residual " + std::to_string(residual) +
                               "); with OpenBLAS, try setting OPENBLAS_CORETYPE=Haswell");
    }
  }
}

}  // namespace

Eigensystem hermitian_eigensolve(Eigen::MatrixXd m, bool want_vectors) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("eigensolve needs a square matrix");
  }
  lapack_int n = static_cast<lapack_int>(m.rows());
  Eigensystem out;
  out.values.resize(n);
  if (n == 0) {
    return out;
  }
  Eigen::MatrixXd input = want_vectors ? m : Eigen::MatrixXd();
  check_info(LAPACKE_dsyevd(LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', 'L', n, m.data(), n, out.values.data()),
             "dsyevd");
  if (want_vectors) {
    check_eigenpairs(input, out.values, m);
    input.resize(0, 0);
    out.vectors = m.cast<Complex>();
  }
  return out;
}

Eigensystem hermitian_eigensolve(const Eigen::MatrixXcd &m, bool want_vectors) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("eigensolve needs a square matrix");
  }
  if (m.imag().isZero(0.0)) {
    return hermitian_eigensolve(Eigen::MatrixXd(m.real()), want_vectors);
  }
  lapack_int n = static_cast<lapack_int>(m.rows());
  Eigensystem out;
  out.values.resize(n);
  Eigen::MatrixXcd a = m;
  check_info(LAPACKE_zheevd(LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', 'L', n, a.data(), n, out.values.data()),
             "zheevd");
  if (want_vectors) {
    check_eigenpairs(m, out.values, a);
    out.vectors = std::move(a);
  }
  return out;
}

double operator_norm(const Eigen::MatrixXcd &m) {
  if (m.size() == 0) {
    return 0.0;
  }
  Eigen::BDCSVD<Eigen::MatrixXcd> svd(m);
  return svd.singularValues()(0);
}

SpectralResult diagonalize(const PauliSum &h, const DiagonalizeOptions &options) {
  SpectralResult r;
  r.num_qubits = h.num_qubits();
  Eigensystem es = h.has_imaginary_entries() ? hermitian_eigensolve(to_matrix(h, options.dense_cap))
                                             : hermitian_eigensolve(to_real_matrix(h, options.dense_cap));
  r.eigenvalues = es.values;
  Eigen::Index dim = es.values.size();
  double range = es.values(dim - 1) - es.values(0);
  r.tolerance = range > 0 ? options.degeneracy_tol * range : options.degeneracy_tol;
  r.ground_energy = es.values(0);
  Eigen::Index deg = 1;
  while (deg < dim && es.values(deg) - r.ground_energy <= r.tolerance) {
    ++deg;
  }
  r.ground_degeneracy = static_cast<size_t>(deg);
  r.gap = deg < dim ? es.values(deg) - r.ground_energy : 0.0;
  r.ambiguous_gap = deg < dim && r.gap < 10 * r.tolerance;
  r.ground_basis = es.vectors.leftCols(deg);
  if (options.keep_eigenvectors) {
    r.eigenvectors = std::move(es.vectors);
  }
  return r;
}

std::vector<EigenLevel> eigen_levels(const SpectralResult &result) {
  if (!result.eigenvectors) {
    throw std::invalid_argument("eigen_levels needs a result diagonalized with keep_eigenvectors");
  }
  std::vector<EigenLevel> levels;
  Eigen::Index dim = result.eigenvalues.size();
  Eigen::Index start = 0;
  while (start < dim) {
    Eigen::Index end = start + 1;
    while (end < dim && result.eigenvalues(end) - result.eigenvalues(start) <= result.tolerance) {
      ++end;
    }
    levels.push_back({result.eigenvalues.segment(start, end - start).mean(),
                      result.eigenvectors->middleCols(start, end - start)});
    start = end;
  }
  return levels;
}

Eigen::MatrixXcd ground_block(const SpectralResult &result, const PauliOp &op) {
  if (op.num_qubits() != result.num_qubits) {
    throw std::invalid_argument("operator " + op.str() + " acts on the wrong number of qubits");
  }
  return result.ground_basis.adjoint() * apply(op, result.ground_basis);
}

double ground_restricted_norm(const SpectralResult &result, const PauliOp &op) {
  return operator_norm(ground_block(result, op));
}

bool GroundSpaceReport::stabilizers_fix_ground_space() const {
  return std::all_of(stabilizers.begin(), stabilizers.end(),
                     [&](const OperatorResidual &r) { return r.residual < tolerance; });
}

bool GroundSpaceReport::generators_proportional() const {
  return std::all_of(generators.begin(), generators.end(),
                     [&](const OperatorResidual &r) { return r.residual < tolerance; });
}

void GroundSpaceReport::require() const {
  for (const auto &s : stabilizers) {
    if (!(s.residual < tolerance)) {
      throw VerificationFailure("stabilizer " + s.op.str() + " does not fix the ground space (residual " +
                                std::to_string(s.residual) + ")");
    }
  }
  if (!degeneracy_matches()) {
    throw VerificationFailure("ground degeneracy " + std::to_string(degeneracy) + ", expected " +
                              std::to_string(expected_degeneracy));
  }
  for (const auto &g : generators) {
    if (!(g.residual < tolerance)) {
      throw VerificationFailure("generator " + g.op.str() + " is not proportional to the ground projector (residual " +
                                std::to_string(g.residual) + ")");
    }
  }
}

GroundSpaceReport verify_ground_space(const SubsystemCodeSpec &code, const PauliSum &penalty,
                                      const SpectralResult &result, double tol) {
  if (penalty.num_qubits() != code.n || result.num_qubits != code.n) {
    throw std::invalid_argument("code, penalty and spectrum disagree on the qubit count");
  }
  CodeStructure structure = derive_structure(code);
  GroundSpaceReport report;
  report.tolerance = tol;

  F2Span gauge = gauge_span(code);
  std::vector<PauliOp> penalty_ops;
  bool terms_ok = true;
  for (const auto &t : penalty.terms()) {
    penalty_ops.push_back(t.op);
    terms_ok = terms_ok && (t.op.is_x_type() || t.op.is_z_type()) && gauge.contains(t.op.symplectic());
  }
  report.hypothesis_holds = terms_ok && span_of(penalty_ops, code.n).dimension() == gauge.dimension();

  Eigen::Index deg = result.ground_basis.cols();
  for (const auto &s : structure.stabilizers) {
    Eigen::MatrixXcd diff = apply(s, result.ground_basis) - result.ground_basis;
    report.stabilizers.push_back({s, 1.0, operator_norm(diff)});
  }
  report.degeneracy = result.ground_degeneracy;
  report.expected_degeneracy = size_t{1} << structure.num_logical;
  for (const auto &g : code.gauge_generators) {
    Eigen::MatrixXcd block = ground_block(result, g);
    double alpha = block.trace().real() / static_cast<double>(deg);
    Eigen::MatrixXcd residual = block - alpha * Eigen::MatrixXcd::Identity(deg, deg);
    report.generators.push_back({g, alpha, operator_norm(residual)});
  }
  return report;
}

PenaltyCalibration calibrate(const SubsystemCodeSpec &code, const SpectralResult &result,
                             const std::vector<PauliOp> &requested, double alpha_floor, double tol) {
  F2Span gauge = gauge_span(code);
  PenaltyCalibration cal;
  Eigen::Index deg = result.ground_basis.cols();
  for (const auto &g : requested) {
    if (g.num_qubits() != code.n || !gauge.contains(g.symplectic())) {
      throw std::invalid_argument(g.str() + " is not an element of the gauge group");
    }
    if (!g.is_hermitian()) {
      throw std::invalid_argument(g.str() + " is not Hermitian");
    }
    Eigen::MatrixXcd block = ground_block(result, g.unsigned_op());
    double alpha = block.trace().real() / static_cast<double>(deg);
    double residual = operator_norm(block - alpha * Eigen::MatrixXcd::Identity(deg, deg));
    if (!(residual < tol)) {
      throw VerificationFailure(g.str() + " is not proportional to the ground projector (residual " +
                                std::to_string(residual) + ")");
    }
    if (!(std::abs(alpha) >= alpha_floor)) {
      throw CalibrationError("alpha for " + g.str() + " vanishes (" + std::to_string(alpha) + ")");
    }
    cal.set(g, alpha);
    cal.max_residual = std::max(cal.max_residual, residual);
  }
  return cal;
}

std::vector<PauliOp> family_calibration_targets(size_t k) {
  std::vector<PauliOp> out = family_code(k).gauge_generators;
  size_t m = 2 * k;
  for (char type : {'X', 'Z', 'Y'}) {
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = i + 1; j < m; ++j) {
        out.push_back(coupling_residue(k, i, j, type).residue);
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void ErrorDetectionReport::require() const {
  if (!passed()) {
    throw VerificationFailure("one-local error " + worst.str() + " is not detected: ||P0 sigma P0|| = " +
                              std::to_string(max_residual));
  }
}

ErrorDetectionReport error_detection_check(const SpectralResult &result, size_t n, double tol) {
  if (n > result.num_qubits) {
    throw std::invalid_argument("more error qubits than the spectrum has");
  }
  ErrorDetectionReport report;
  report.tolerance = tol;
  report.worst = PauliOp(result.num_qubits);
  for (size_t q = 0; q < n; ++q) {
    for (char axis : {'X', 'Y', 'Z'}) {
      PauliOp sigma = PauliOp::single(result.num_qubits, q, axis);
      double value = ground_restricted_norm(result, sigma);
      report.entries.push_back({sigma, value, value});
      if (value > report.max_residual || report.entries.size() == 1) {
        report.max_residual = value;
        report.worst = sigma;
      }
    }
  }
  return report;
}

SectorReport sector_analysis(const SubsystemCodeSpec &code, const PauliSum &penalty, size_t dense_cap,
                             double tol) {
  if (penalty.num_qubits() != code.n) {
    throw std::invalid_argument("penalty and code disagree on the qubit count");
  }
  CssLogicals css = css_logical_pairs(code);
  Eigen::MatrixXd h = to_real_matrix(penalty, dense_cap);
  uint64_t dim = uint64_t{1} << code.n;

  std::vector<uint64_t> z_masks, s_masks;
  for (const auto &z : css.z_logicals) {
    z_masks.push_back(mask_of(z.z_bits()));
  }
  for (const auto &s : css.z_stabilizers) {
    s_masks.push_back(mask_of(s.z_bits()));
  }
  size_t nz = z_masks.size();
  size_t ns = s_masks.size();
  // Sector id: bit a set when z_a = -1, bit nz + b set when s_b = -1.
  auto sector_of = [&](uint64_t basis) {
    uint64_t id = 0;
    for (size_t a = 0; a < nz; ++a) {
      id |= uint64_t(parity_sign(basis, z_masks[a]) < 0) << a;
    }
    for (size_t b = 0; b < ns; ++b) {
      id |= uint64_t(parity_sign(basis, s_masks[b]) < 0) << (nz + b);
    }
    return id;
  };
  size_t num_sectors = size_t{1} << (nz + ns);
  std::vector<std::vector<uint64_t>> members(num_sectors);
  std::vector<uint64_t> sector(dim);
  for (uint64_t b = 0; b < dim; ++b) {
    sector[b] = sector_of(b);
    members[sector[b]].push_back(b);
  }

  SectorReport report;
  report.block_diagonal = true;
  for (uint64_t r = 0; r < dim && report.block_diagonal; ++r) {
    for (uint64_t c = 0; c < dim; ++c) {
      if (sector[r] != sector[c] && h(r, c) != 0.0) {
        report.block_diagonal = false;
        break;
      }
    }
  }

  report.non_positive_off_diagonal = true;
  report.irreducible = true;
  report.unique_positive_ground_states = true;
  std::vector<Eigen::MatrixXd> blocks(num_sectors);
  std::vector<Eigen::VectorXd> spectra(num_sectors);
  for (size_t id = 0; id < num_sectors; ++id) {
    const auto &idx = members[id];
    size_t d = idx.size();
    SectorInfo info;
    for (size_t a = 0; a < nz; ++a) {
      info.z.push_back((id >> a) & 1 ? -1 : 1);
    }
    for (size_t b = 0; b < ns; ++b) {
      info.s.push_back((id >> (nz + b)) & 1 ? -1 : 1);
    }
    info.dimension = d;
    if (d == 0) {
      report.sectors.push_back(info);
      continue;
    }
    Eigen::MatrixXd block(d, d);
    DisjointSets sets(d);
    info.non_positive_off_diagonal = true;
    for (size_t i = 0; i < d; ++i) {
      for (size_t j = 0; j < d; ++j) {
        block(i, j) = h(idx[i], idx[j]);
        if (i != j && block(i, j) != 0.0) {
          info.non_positive_off_diagonal = info.non_positive_off_diagonal && block(i, j) < 0.0;
          sets.unite(i, j);
        }
      }
    }
    info.irreducible = true;
    for (size_t i = 1; i < d; ++i) {
      info.irreducible = info.irreducible && sets.find(i) == sets.find(0);
    }
    Eigensystem es = hermitian_eigensolve(block);
    info.ground_energy = es.values(0);
    double range = es.values(d - 1) - es.values(0);
    double level_tol = range > 0 ? tol * range : tol;
    bool unique = d == 1 || es.values(1) - es.values(0) > level_tol;
    Eigen::VectorXd v = es.vectors.col(0).real();
    if (v.sum() < 0) {
      v = -v;
    }
    info.unique_positive_ground_state = unique && (v.array() > 1e-12).all();
    blocks[id] = std::move(block);
    spectra[id] = es.values;

    report.non_positive_off_diagonal = report.non_positive_off_diagonal && info.non_positive_off_diagonal;
    report.irreducible = report.irreducible && info.irreducible;
    report.unique_positive_ground_states = report.unique_positive_ground_states && info.unique_positive_ground_state;
    report.sectors.push_back(info);
  }

  // Ground states live in s = +1, and s = +1 is strictly lowest for each z.
  double global = std::numeric_limits<double>::infinity();
  for (const auto &info : report.sectors) {
    if (info.dimension > 0) {
      global = std::min(global, info.ground_energy);
    }
  }
  report.global_ground_energy = global;
  double energy_tol = tol * std::max(1.0, std::abs(global));
  report.ground_in_trivial_syndrome = true;
  for (size_t id = 0; id < num_sectors; ++id) {
    const auto &info = report.sectors[id];
    bool trivial = (id >> nz) == 0;
    if (info.dimension == 0) {
      report.ground_in_trivial_syndrome = report.ground_in_trivial_syndrome && !trivial;
      continue;
    }
    if (!trivial && info.ground_energy <= global + energy_tol) {
      report.ground_in_trivial_syndrome = false;
    }
    if (!trivial) {
      size_t partner = id & ((size_t{1} << nz) - 1);
      const auto &base = report.sectors[partner];
      if (base.dimension == 0 || !(base.ground_energy < info.ground_energy - energy_tol)) {
        report.ground_in_trivial_syndrome = false;
      }
    }
  }

  // X-bar_a flips z_a, keeps s, and commutes with the penalty; compare block
  // (z, s) with the relabeled block (0, s).
  std::vector<uint64_t> x_masks;
  for (const auto &x : css.x_logicals) {
    x_masks.push_back(mask_of(x.x_bits()));
  }
  report.identical_across_z = true;
  for (size_t s_bits = 0; s_bits < (size_t{1} << ns); ++s_bits) {
    size_t base_id = s_bits << nz;
    const auto &base = members[base_id];
    for (size_t z_bits = 1; z_bits < (size_t{1} << nz); ++z_bits) {
      size_t id = base_id | z_bits;
      uint64_t flip = 0;
      for (size_t a = 0; a < nz; ++a) {
        if ((z_bits >> a) & 1) {
          flip ^= x_masks[a];
        }
      }
      const auto &target = members[id];
      if (target.size() != base.size()) {
        report.identical_across_z = false;
        continue;
      }
      for (size_t i = 0; i < base.size() && report.identical_across_z; ++i) {
        if (sector[base[i] ^ flip] != id) {
          report.identical_across_z = false;
          break;
        }
        for (size_t j = 0; j < base.size(); ++j) {
          if (h(base[i] ^ flip, base[j] ^ flip) != h(base[i], base[j])) {
            report.identical_across_z = false;
            break;
          }
        }
      }
      if (!base.empty() && (spectra[id] - spectra[base_id]).cwiseAbs().maxCoeff() > energy_tol) {
        report.identical_across_z = false;
      }
    }
  }
  return report;
}

}  // namespace gaugepen
