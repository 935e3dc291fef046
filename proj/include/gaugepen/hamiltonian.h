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
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "gaugepen/calibration.h"
#include "gaugepen/pauli_sum.h"
#include "gaugepen/subsystem_code.h"

namespace gaugepen {

/// -sum_i g_i over the supplied generators. Throws std::invalid_argument if a
/// generator is neither X-type nor Z-type.
PauliSum penalty_hamiltonian(const SubsystemCodeSpec &code);

/// Logical problem on m qubits:
///   sum_i a_i X_i + b_i Z_i + sum_{i<j} c_ij X_i X_j + d_ij Z_i Z_j [+ yy_ij Y_i Y_j].
/// Couplings are read from the upper triangle of the symmetric matrices.
struct ProblemSpec {
  size_t m = 0;
  Eigen::VectorXd a;
  Eigen::VectorXd b;
  Eigen::MatrixXd c;
  Eigen::MatrixXd d;
  std::optional<Eigen::MatrixXd> yy;

  static ProblemSpec zero(size_t m);
  /// Entries uniform in [-1, 1]; couplings symmetric with zero diagonal.
  static ProblemSpec random(size_t m, std::mt19937_64 &rng, bool with_yy = false);

  /// Throws std::invalid_argument on wrong sizes, asymmetric couplings or a
  /// nonzero diagonal.
  void validate() const;
  bool has_couplings() const;
};

/// Entrywise (1-s)*p + s*q. A missing yy counts as zero.
ProblemSpec interpolate(const ProblemSpec &p, const ProblemSpec &q, double s);

struct ScheduleKnot {
  double t;
  ProblemSpec spec;
};

/// Knots sorted by strictly increasing t.
using Schedule = std::vector<ScheduleKnot>;

void validate_schedule(const Schedule &schedule);
/// Piecewise-linear in t, clamped to the first and last knots.
ProblemSpec problem_at(const Schedule &schedule, double t);

/// Problem written with bare logicals of the [[6k,2k,2]] family (couplings have weight 4).
PauliSum bare_encoded_hamiltonian(const ProblemSpec &p, size_t k);

enum class CouplingScale {
  /// Divide each coupling by the alpha of its gauge residue.
  kCalibrated,
  /// Use the logical coefficients unchanged.
  kNone,
};

/// Two-local physical encoding: X_L X_B and Z_B Z_R for fields, X_B X_B,
/// Z_B Z_B and Y_B Y_B for couplings. Throws CalibrationError when a needed
/// alpha is missing or below alpha_floor in magnitude.
PauliSum physical_encoded_hamiltonian(const ProblemSpec &p, size_t k, const PenaltyCalibration &cal,
                                      CouplingScale scale = CouplingScale::kCalibrated,
                                      double alpha_floor = 1e-6);

/// One coupling term written as physical = bare * residue.
struct GaugeResidue {
  size_t i;
  size_t j;
  /// 'X', 'Y' or 'Z'.
  char type;
  PauliOp physical;
  PauliOp bare;
  PauliOp residue;
};

/// Residue of the (i, j) coupling of the given type for the family code.
/// Throws std::logic_error if the identity or gauge membership fails.
GaugeResidue coupling_residue(size_t k, size_t i, size_t j, char type);
/// Residues of every nonzero coupling of p.
std::vector<GaugeResidue> gauge_residues(const ProblemSpec &p, size_t k);

/// Bath degrees of freedom and one-local system couplings.
struct BathCoupling {
  size_t system_qubit;
  /// 'X', 'Y' or 'Z'.
  char system_axis;
  /// Acts on the bath qubits only.
  PauliOp bath_op;
  double strength;
};

struct BathSpec {
  size_t n_bath = 0;
  PauliSum h_bath;
  std::vector<BathCoupling> couplings;

  static BathSpec none();
  /// One bath qubit with H_B = omega Z_b and, on every system qubit q,
  /// strength * (X_q X_b + Z_q Y_b).
  static BathSpec single_qubit(size_t n_system, double omega = 1.0, double strength = 0.1);

  void validate(size_t n_system) const;
};

/// H_SB on n_system + n_bath qubits.
PauliSum bath_coupling_hamiltonian(const BathSpec &bath, size_t n_system);
/// H_B on n_system + n_bath qubits.
PauliSum bath_hamiltonian(const BathSpec &bath, size_t n_system);

/// system + ep * penalty + H_B + H_SB on n_system + n_bath qubits. System
/// qubits keep their indices; bath qubit j becomes n_system + j.
PauliSum assemble_total(const PauliSum &system, double ep, const PauliSum &penalty, const BathSpec &bath);

}  // namespace gaugepen
