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

#include "gaugepen/dynamics.h"

#include <cmath>

#include <gtest/gtest.h>

#include "gaugepen/bacon_shor.h"
#include "test_util.h"

using namespace gaugepen;
using gaugepen::testing::kron_matrix;
using gaugepen::testing::random_pauli;

namespace {

PenaltyCalibration k1_calibration() {
  SubsystemCodeSpec code = family_code(1);
  SpectralResult r = diagonalize(penalty_hamiltonian(code));
  return calibrate(code, r, family_calibration_targets(1));
}

EvolutionConfig small_config(uint64_t seed, bool bath) {
  EvolutionConfig cfg;
  cfg.k = 1;
  cfg.steps = 16;
  cfg.ep_values = {5, 10, 20, 40};
  cfg.seed = seed;
  std::mt19937_64 rng(seed);
  cfg.schedule = {{0.0, ProblemSpec::random(2, rng)}};
  cfg.bath = bath ? BathSpec::single_qubit(6) : BathSpec::none();
  return cfg;
}

}  // namespace

TEST(dynamics, pauli_exponential_closed_form) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 20; ++trial) {
    PauliOp p = random_pauli(3, rng, false);
    Eigen::MatrixXcd m = kron_matrix(p);
    double theta = 0.1 * trial;
    Eigen::MatrixXcd expected =
        std::cos(theta) * Eigen::MatrixXcd::Identity(8, 8) - Complex(0, std::sin(theta)) * m;
    EXPECT_LT((expm_hermitian(m, theta) - expected).norm(), 1e-10);
  }
}

TEST(dynamics, constant_evolution_composes) {
  std::mt19937_64 rng(2);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Random(8, 8);
  h = (h + h.adjoint()).eval();
  Eigen::MatrixXcd u = evolve(h, 1.3, 10);
  EXPECT_LT((u - expm_hermitian(h, 1.3)).norm(), 1e-9);
  EXPECT_LT((u.adjoint() * u - Eigen::MatrixXcd::Identity(8, 8)).norm(), 1e-10);
  Eigen::MatrixXcd ut = evolve([&](double) { return h; }, 1.3, 7);
  EXPECT_LT((ut - u).norm(), 1e-9);
  EXPECT_THROW(evolve(h, 1.0, 0), std::invalid_argument);
}

TEST(dynamics, time_ordering_uses_later_times_on_the_left) {
  Eigen::MatrixXcd x = kron_matrix(PauliOp::parse("X0", 1));
  Eigen::MatrixXcd z = kron_matrix(PauliOp::parse("Z0", 1));
  auto h = [&](double t) { return t < 0.5 ? x : z; };
  Eigen::MatrixXcd u = evolve(h, 1.0, 2);
  EXPECT_LT((u - expm_hermitian(z, 0.5) * expm_hermitian(x, 0.5)).norm(), 1e-12);
}

TEST(dynamics, bound_formulas) {
  // Levels 0, 2, 4: ordered pairs give 2*(1/2 + 1/4 + 1/2) = 2.5.
  EXPECT_NEAR(k_norm_bound({0, 2, 4}, 3.0, 10.0), 2.0 / 10.0 * 3.0 * 2.5, 1e-12);
  BoundInputs in;
  in.levels = {0, 1};
  in.v_minus_w_norm = 1;
  in.v_norm = 2;
  in.w_norm = 1;
  in.commutator_norm = 0.25;
  in.total_time = 2;
  in.ep = 4;
  double k = k_norm_bound(in.levels, 1, 4);
  EXPECT_NEAR(k, 1.0, 1e-12);
  EXPECT_NEAR(theorem_bound(in), k + 2 * 3 * k + 2 * 0.25, 1e-12);
}

TEST(dynamics, log_log_slope) {
  std::vector<double> x = {1, 2, 4, 8}, y;
  for (double v : x) y.push_back(3.0 / v);
  EXPECT_NEAR(log_log_slope(x, y), -1.0, 1e-12);
  EXPECT_THROW(log_log_slope({1}, {1}), std::invalid_argument);
}

TEST(dynamics, config_validation) {
  EvolutionConfig cfg = small_config(1, false);
  EXPECT_NO_THROW(cfg.validate());
  cfg.ep_values = {0, 5};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.ep_values = {10, 5};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.ep_values = {};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = small_config(1, false);
  cfg.steps = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = small_config(1, false);
  cfg.total_time = -1;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = small_config(1, false);
  cfg.schedule = {{0.0, ProblemSpec::zero(3)}};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(dynamics, decoupling_bound_with_bath) {
  PenaltyCalibration cal = k1_calibration();
  DecouplingReport rep = decoupling_experiment(small_config(4, true), cal);
  ASSERT_EQ(rep.rows.size(), 4u);
  EXPECT_TRUE(rep.bound_holds);
  EXPECT_TRUE(rep.monotone);
  EXPECT_FALSE(rep.grid_approximation);
  for (const auto &row : rep.rows) {
    EXPECT_LE(row.lhs, row.rhs);
    EXPECT_LE(row.rhs, row.rhs_loose);
    EXPECT_LT(row.projector_leak, 1e-9);
    EXPECT_LT(row.unitarity_error, 1e-9);
    EXPECT_LE(row.k_norm, row.k_bound * (1 + 1e-9));
  }
  EXPECT_LT(rep.slope, -0.5);
}

TEST(dynamics, time_dependent_schedule_is_flagged) {
  PenaltyCalibration cal = k1_calibration();
  EvolutionConfig cfg = small_config(5, false);
  std::mt19937_64 rng(50);
  cfg.schedule.push_back({1.0, ProblemSpec::random(2, rng)});
  cfg.ep_values = {10, 20};
  DecouplingReport rep = decoupling_experiment(cfg, cal);
  EXPECT_TRUE(rep.grid_approximation);
  EXPECT_TRUE(rep.bound_holds);
}

TEST(dynamics, encoded_fidelity_improves_with_calibration) {
  PenaltyCalibration cal = k1_calibration();
  EvolutionConfig cfg = small_config(6, false);
  FidelityReport calibrated = encoded_computation_fidelity(cfg, cal);
  EXPECT_TRUE(calibrated.decreasing);
  cfg.scale = CouplingScale::kNone;
  FidelityReport raw = encoded_computation_fidelity(cfg, cal);
  // Without rescaling the effective couplings are off by alpha, which no
  // penalty strength can fix.
  EXPECT_GT(raw.rows.back().infidelity, 10 * calibrated.rows.back().infidelity);
  EXPECT_GT(raw.rows.back().infidelity, 0.5 * raw.rows.front().infidelity);
}

TEST(dynamics, fidelity_rejects_states_outside_ground_space) {
  PenaltyCalibration cal = k1_calibration();
  EvolutionConfig cfg = small_config(7, false);
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(64);
  psi(0) = 1;
  psi(1) = 1;
  EXPECT_THROW(encoded_computation_fidelity(cfg, cal, psi), std::invalid_argument);
  EXPECT_THROW(encoded_computation_fidelity(cfg, cal, Eigen::VectorXcd::Zero(8)), std::invalid_argument);
}
