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
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gaugepen/calibration.h"
#include "gaugepen/pauli_sum.h"
#include "gaugepen/subsystem_code.h"

namespace gaugepen {

/// Raised when a numerical check of a ground-space property fails.
class VerificationFailure : public std::runtime_error {
 public:
  explicit VerificationFailure(const std::string &message) : std::runtime_error(message) {}
};

struct Eigensystem {
  /// Ascending.
  Eigen::VectorXd values;
  /// Columns are orthonormal eigenvectors; empty when not requested.
  Eigen::MatrixXcd vectors;
};

/// Dense Hermitian eigensolve through LAPACK (dsyevd for real matrices, zheevd otherwise).
Eigensystem hermitian_eigensolve(const Eigen::MatrixXcd &m, bool want_vectors = true);
Eigensystem hermitian_eigensolve(Eigen::MatrixXd m, bool want_vectors = true);

/// Largest singular value.
double operator_norm(const Eigen::MatrixXcd &m);

struct DiagonalizeOptions {
  /// Relative to the spectral range (absolute when the range is zero).
  double degeneracy_tol = 1e-9;
  size_t dense_cap = kDefaultDenseCap;
  /// Keep every eigenvector, not only the ground space.
  bool keep_eigenvectors = false;
};

struct SpectralResult {
  size_t num_qubits = 0;
  Eigen::VectorXd eigenvalues;
  double ground_energy = 0;
  size_t ground_degeneracy = 0;
  /// First excited level minus the ground energy; 0 when the spectrum is flat.
  double gap = 0;
  /// Absolute tolerance used to group levels.
  double tolerance = 0;
  /// Set when the gap is below 10x the tolerance.
  bool ambiguous_gap = false;
  /// Orthonormal basis of the ground space, one column per state.
  Eigen::MatrixXcd ground_basis;
  /// Full eigenvector matrix when keep_eigenvectors was requested.
  std::optional<Eigen::MatrixXcd> eigenvectors;

  Eigen::MatrixXcd ground_projector() const { return ground_basis * ground_basis.adjoint(); }
};

SpectralResult diagonalize(const PauliSum &h, const DiagonalizeOptions &options = {});

/// One eigenvalue cluster with its spectral projector basis.
struct EigenLevel {
  double energy;
  Eigen::MatrixXcd basis;

  Eigen::MatrixXcd projector() const { return basis * basis.adjoint(); }
};

/// Levels grouped by result.tolerance. Requires keep_eigenvectors.
std::vector<EigenLevel> eigen_levels(const SpectralResult &result);

/// Ground-space restriction V^dag P V, where V is the ground basis.
Eigen::MatrixXcd ground_block(const SpectralResult &result, const PauliOp &op);

struct OperatorResidual {
  PauliOp op;
  double value = 0;
  double residual = 0;
};

/// Checks of the penalty ground space: stabilizers fix it, its dimension is
/// 2^k, and every generator acts on it as a multiple of the identity.
struct GroundSpaceReport {
  /// True when the penalty terms are X- or Z-type gauge elements whose span is the whole gauge group.
  bool hypothesis_holds = false;
  std::vector<OperatorResidual> stabilizers;
  size_t degeneracy = 0;
  size_t expected_degeneracy = 0;
  /// value = alpha, residual = ||P0 g P0 - alpha P0||.
  std::vector<OperatorResidual> generators;
  double tolerance = 0;

  bool stabilizers_fix_ground_space() const;
  bool degeneracy_matches() const { return degeneracy == expected_degeneracy; }
  bool generators_proportional() const;
  bool passed() const { return stabilizers_fix_ground_space() && degeneracy_matches() && generators_proportional(); }
  /// Throws VerificationFailure naming the first offending operator.
  void require() const;
};

GroundSpaceReport verify_ground_space(const SubsystemCodeSpec &code, const PauliSum &penalty,
                                      const SpectralResult &result, double tol = 1e-10);

/// Measures alpha = tr(P0 g P0) / tr(P0) for each requested gauge element.
/// Throws std::invalid_argument for non-gauge elements, CalibrationError when
/// |alpha| < alpha_floor and VerificationFailure when the proportionality
/// residual exceeds tol.
PenaltyCalibration calibrate(const SubsystemCodeSpec &code, const SpectralResult &result,
                             const std::vector<PauliOp> &requested, double alpha_floor = 1e-6,
                             double tol = 1e-10);

/// Every generator plus the residue of every X, Z and Y coupling of the [[6k,2k,2]] family.
std::vector<PauliOp> family_calibration_targets(size_t k);

struct ErrorDetectionReport {
  /// value = ||P0 sigma P0||.
  std::vector<OperatorResidual> entries;
  double max_residual = 0;
  PauliOp worst;
  double tolerance = 0;

  bool passed() const { return max_residual < tolerance; }
  void require() const;
};

/// ||P0 sigma P0|| for all 3n one-local Paulis on the first n qubits.
ErrorDetectionReport error_detection_check(const SpectralResult &result, size_t n, double tol = 1e-10);

/// ||P0 P P0|| for a single operator.
double ground_restricted_norm(const SpectralResult &result, const PauliOp &op);

struct SectorInfo {
  /// +1 / -1 eigenvalues of the Z-type logicals and Z-type stabilizers.
  std::vector<int> z;
  std::vector<int> s;
  size_t dimension = 0;
  double ground_energy = 0;
  bool irreducible = false;
  bool non_positive_off_diagonal = false;
  bool unique_positive_ground_state = false;
};

struct SectorReport {
  std::vector<SectorInfo> sectors;
  bool block_diagonal = false;
  bool non_positive_off_diagonal = false;
  bool irreducible = false;
  bool unique_positive_ground_states = false;
  /// Every global ground state lies in s = +1 sectors, and for each z the
  /// s = +1 sector is strictly lowest.
  bool ground_in_trivial_syndrome = false;
  /// At fixed s the blocks coincide after the relabeling by bare X logicals.
  bool identical_across_z = false;
  double global_ground_energy = 0;

  bool passed() const {
    return block_diagonal && non_positive_off_diagonal && irreducible && unique_positive_ground_states &&
           ground_in_trivial_syndrome && identical_across_z;
  }
};

/// Splits the computational basis by the eigenvalues of the Z-type logicals and
/// Z-type stabilizers of a CSS code and checks the block structure of the penalty.
SectorReport sector_analysis(const SubsystemCodeSpec &code, const PauliSum &penalty,
                             size_t dense_cap = kDefaultDenseCap, double tol = 1e-9);

}  // namespace gaugepen
