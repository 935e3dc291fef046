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

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "gaugepen/calibration.h"
#include "gaugepen/hamiltonian.h"
#include "gaugepen/spectral.h"

namespace gaugepen {

/// exp(-i h dt) for Hermitian h.
Eigen::MatrixXcd expm_hermitian(const Eigen::MatrixXcd &h, double dt);

/// Time-ordered product of exp(-i H(t_mid) dt) over `steps` equal segments of [0, T].
Eigen::MatrixXcd evolve(const std::function<Eigen::MatrixXcd(double)> &h, double total_time, size_t steps);
/// Constant h; the segment exponential is computed once.
Eigen::MatrixXcd evolve(const Eigen::MatrixXcd &h, double total_time, size_t steps);
Eigen::MatrixXcd evolve(const PauliSum &h, double total_time, size_t steps, size_t dense_cap = kDefaultDenseCap);

struct EvolutionConfig {
  /// Family size; the system has 6k qubits.
  size_t k = 1;
  double total_time = 1.0;
  size_t steps = 64;
  std::vector<double> ep_values = {5, 10, 20, 40, 80};
  /// Logical problem; a single knot means a time-independent problem.
  Schedule schedule;
  BathSpec bath;
  CouplingScale scale = CouplingScale::kCalibrated;
  uint64_t seed = 1;
  double degeneracy_tol = 1e-9;
  size_t dense_cap = kDefaultDenseCap;

  /// Throws std::invalid_argument on T <= 0, steps == 0, an empty sweep,
  /// non-positive or non-ascending ep values, or a bad schedule.
  void validate() const;
  bool time_dependent() const { return schedule.size() > 1; }
};

/// Inputs of the decoupling bound at one time (or their sup over the grid).
struct BoundInputs {
  /// Distinct penalty eigenvalues.
  std::vector<double> levels;
  double v_norm = 0;
  double w_norm = 0;
  double v_minus_w_norm = 0;
  /// ||[K, H_0]||.
  double commutator_norm = 0;
  double total_time = 0;
  double ep = 0;
};

/// (2 / ep) * sum over ordered pairs of distinct levels of ||V - W|| / |l_a - l_b|.
double k_norm_bound(const std::vector<double> &levels, double v_minus_w_norm, double ep);

/// K_bound + T (||V|| + ||W||) K_bound + T ||[K, H_0]||.
double theorem_bound(const BoundInputs &in);

struct DecouplingRow {
  double ep = 0;
  /// ||(U_V(T) - U_W(T)) P||.
  double lhs = 0;
  double rhs = 0;
  double k_bound = 0;
  /// ||K|| of the reconstructed generator (sup over the grid).
  double k_norm = 0;
  double commutator_norm = 0;
  double v_norm = 0;
  double w_norm = 0;
  /// ||U_W P - P U_W P||.
  double projector_leak = 0;
  /// max ||U^dag U - I|| over both evolutions.
  double unitarity_error = 0;
  /// Alternative, looser bound with 2 ||K|| ||H_0|| in place of the commutator.
  double rhs_loose = 0;
};

struct DecouplingReport {
  std::vector<DecouplingRow> rows;
  /// Penalty gaps lambda_a - lambda_0 for every excited level.
  std::vector<double> penalty_gaps;
  /// Least-squares slope of log(lhs) against log(ep).
  double slope = 0;
  bool monotone = false;
  bool bound_holds = false;
  /// Set when sup_t quantities were taken over the segment midpoints.
  bool grid_approximation = false;
};

/// Compares the evolution under Hs + ep Hp + HB + HSB with the one where V is
/// replaced by W = P0 V P0, from P = P0 (x) I_bath.
DecouplingReport decoupling_experiment(const EvolutionConfig &cfg, const PenaltyCalibration &cal);

struct FidelityRow {
  double ep = 0;
  double infidelity = 0;
};

struct FidelityReport {
  std::vector<FidelityRow> rows;
  /// Each infidelity is at most the previous one (plus 1e-12).
  bool decreasing = false;
};

/// Evolves the same ground-space state under the physical encoding + ep Hp
/// and under the bare encoding + ep Hp, ignoring the bath. Without an
/// explicit state, the normalized projection of the first basis state with
/// nonzero overlap is used. Throws std::invalid_argument when the state is
/// not in the ground space.
FidelityReport encoded_computation_fidelity(const EvolutionConfig &cfg, const PenaltyCalibration &cal,
                                            const std::optional<Eigen::VectorXcd> &initial = std::nullopt);

/// Least-squares slope of log(y) against log(x).
double log_log_slope(const std::vector<double> &x, const std::vector<double> &y);

}  // namespace gaugepen
