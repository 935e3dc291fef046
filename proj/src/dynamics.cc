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

#include <algorithm>
#include <cmath>

#include "gaugepen/bacon_shor.h"

namespace gaugepen {

namespace {

/// I_bath (x) m in the index layout where system qubits are the low bits.
Eigen::MatrixXcd embed_system(const Eigen::MatrixXcd &m, size_t n_bath) {
  Eigen::Index d = m.rows();
  Eigen::Index copies = Eigen::Index{1} << n_bath;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d * copies, d * copies);
  for (Eigen::Index c = 0; c < copies; ++c) {
    out.block(c * d, c * d, d, d) = m;
  }
  return out;
}

double unitarity_error(const Eigen::MatrixXcd &u) {
  return operator_norm(u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols()));
}

/// Everything the bound needs at one point of the time grid, with K scaled by ep.
struct GridPoint {
  Eigen::MatrixXcd h0;
  Eigen::MatrixXcd v;
  Eigen::MatrixXcd w;
  Eigen::MatrixXcd k_times_ep;
  double v_norm;
  double w_norm;
  double v_minus_w_norm;
  double h0_norm;
  double commutator_times_ep;
  double k_norm_times_ep;
};

std::vector<double> midpoints(const EvolutionConfig &cfg) {
  std::vector<double> out;
  size_t count = cfg.time_dependent() ? cfg.steps : 1;
  double dt = cfg.total_time / static_cast<double>(count);
  for (size_t s = 0; s < count; ++s) {
    out.push_back((static_cast<double>(s) + 0.5) * dt);
  }
  return out;
}

PauliSum encoded_system(const EvolutionConfig &cfg, const PenaltyCalibration &cal, double t) {
  return physical_encoded_hamiltonian(problem_at(cfg.schedule, t), cfg.k, cal, cfg.scale);
}

/// Product of per-segment exponentials; constant generators reuse one exponential.
Eigen::MatrixXcd evolve_grid(const std::vector<Eigen::MatrixXcd> &segments, double total_time, size_t steps) {
  if (segments.size() == 1) {
    return evolve(segments[0], total_time, steps);
  }
  double dt = total_time / static_cast<double>(segments.size());
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(segments[0].rows(), segments[0].cols());
  for (const auto &h : segments) {
    u = expm_hermitian(h, dt) * u;
  }
  return u;
}

}  // namespace

Eigen::MatrixXcd expm_hermitian(const Eigen::MatrixXcd &h, double dt) {
  Eigensystem es = hermitian_eigensolve(h);
  Eigen::VectorXcd phases(es.values.size());
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    phases(i) = std::exp(Complex(0, -es.values(i) * dt));
  }
  return es.vectors * phases.asDiagonal() * es.vectors.adjoint();
}

Eigen::MatrixXcd evolve(const std::function<Eigen::MatrixXcd(double)> &h, double total_time, size_t steps) {
  if (steps == 0) {
    throw std::invalid_argument("evolve needs at least one step");
  }
  double dt = total_time / static_cast<double>(steps);
  Eigen::MatrixXcd u;
  for (size_t s = 0; s < steps; ++s) {
    Eigen::MatrixXcd segment = expm_hermitian(h((static_cast<double>(s) + 0.5) * dt), dt);
    u = s == 0 ? segment : Eigen::MatrixXcd(segment * u);
  }
  return u;
}

Eigen::MatrixXcd evolve(const Eigen::MatrixXcd &h, double total_time, size_t steps) {
  if (steps == 0) {
    throw std::invalid_argument("evolve needs at least one step");
  }
  Eigen::MatrixXcd segment = expm_hermitian(h, total_time / static_cast<double>(steps));
  Eigen::MatrixXcd u = segment;
  for (size_t s = 1; s < steps; ++s) {
    u = segment * u;
  }
  return u;
}

Eigen::MatrixXcd evolve(const PauliSum &h, double total_time, size_t steps, size_t dense_cap) {
  return evolve(to_matrix(h, dense_cap), total_time, steps);
}

void EvolutionConfig::validate() const {
  if (!(total_time > 0)) {
    throw std::invalid_argument("total time must be positive");
  }
  if (steps == 0) {
    throw std::invalid_argument("steps must be at least 1");
  }
  if (ep_values.empty()) {
    throw std::invalid_argument("the ep sweep is empty");
  }
  for (size_t i = 0; i < ep_values.size(); ++i) {
    if (!(ep_values[i] > 0)) {
      throw std::invalid_argument("ep values must be positive");
    }
    if (i > 0 && !(ep_values[i] > ep_values[i - 1])) {
      throw std::invalid_argument("ep values must be strictly ascending");
    }
  }
  validate_schedule(schedule);
  if (schedule.front().spec.m != 2 * k) {
    throw std::invalid_argument("schedule problems must have m = 2k = " + std::to_string(2 * k));
  }
  bath.validate(6 * k);
}

double k_norm_bound(const std::vector<double> &levels, double v_minus_w_norm, double ep) {
  double sum = 0;
  for (size_t a = 0; a < levels.size(); ++a) {
    for (size_t b = 0; b < levels.size(); ++b) {
      if (a != b) {
        sum += 1.0 / std::abs(levels[a] - levels[b]);
      }
    }
  }
  return 2.0 / ep * v_minus_w_norm * sum;
}

double theorem_bound(const BoundInputs &in) {
  double k = k_norm_bound(in.levels, in.v_minus_w_norm, in.ep);
  return k + in.total_time * (in.v_norm + in.w_norm) * k + in.total_time * in.commutator_norm;
}

double log_log_slope(const std::vector<double> &x, const std::vector<double> &y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("slope needs at least two matching points");
  }
  double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    double lx = std::log(x[i]);
    double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

DecouplingReport decoupling_experiment(const EvolutionConfig &cfg, const PenaltyCalibration &cal) {
  cfg.validate();
  SubsystemCodeSpec code = family_code(cfg.k);
  size_t n_sys = code.n;
  size_t n_bath = cfg.bath.n_bath;
  if (n_sys + n_bath > cfg.dense_cap) {
    throw DenseCapExceeded("decoupling experiment on " + std::to_string(n_sys + n_bath) +
                           " qubits exceeds the dense cap of " + std::to_string(cfg.dense_cap));
  }
  PauliSum penalty = penalty_hamiltonian(code);
  DiagonalizeOptions opts;
  opts.degeneracy_tol = cfg.degeneracy_tol;
  opts.dense_cap = cfg.dense_cap;
  opts.keep_eigenvectors = true;
  SpectralResult spectrum = diagonalize(penalty, opts);
  std::vector<EigenLevel> levels = eigen_levels(spectrum);

  std::vector<double> energies;
  std::vector<Eigen::MatrixXcd> projectors;
  for (const auto &level : levels) {
    energies.push_back(level.energy);
    projectors.push_back(embed_system(level.projector(), n_bath));
  }
  const Eigen::MatrixXcd &p = projectors[0];
  Eigen::MatrixXcd hp = embed_system(to_matrix(penalty, cfg.dense_cap), n_bath);
  Eigen::MatrixXcd h_bath = to_matrix(bath_hamiltonian(cfg.bath, n_sys), cfg.dense_cap);
  Eigen::MatrixXcd h_sb = to_matrix(bath_coupling_hamiltonian(cfg.bath, n_sys), cfg.dense_cap);

  DecouplingReport report;
  report.grid_approximation = cfg.time_dependent();
  for (size_t a = 1; a < energies.size(); ++a) {
    report.penalty_gaps.push_back(energies[a] - energies[0]);
  }

  std::vector<GridPoint> grid;
  for (double t : midpoints(cfg)) {
    Eigen::MatrixXcd hs = embed_system(to_matrix(encoded_system(cfg, cal, t), cfg.dense_cap), n_bath);
    Eigen::MatrixXcd diag_part = Eigen::MatrixXcd::Zero(hs.rows(), hs.cols());
    for (const auto &pa : projectors) {
      diag_part += pa * hs * pa;
    }
    GridPoint g;
    g.h0 = diag_part + h_bath;
    g.v = (hs - diag_part) + h_sb;
    g.w = p * g.v * p;
    if (operator_norm(g.h0 * p - p * g.h0) > 1e-9) {
      throw std::invalid_argument("H_0 does not commute with the initial projector");
    }
    Eigen::MatrixXcd diff = g.v - g.w;
    g.k_times_ep = Eigen::MatrixXcd::Zero(hs.rows(), hs.cols());
    for (size_t a = 0; a < projectors.size(); ++a) {
      for (size_t b = 0; b < projectors.size(); ++b) {
        if (a != b) {
          g.k_times_ep += projectors[a] * diff * projectors[b] / (energies[a] - energies[b]);
        }
      }
    }
    g.v_norm = operator_norm(g.v);
    g.w_norm = operator_norm(g.w);
    g.v_minus_w_norm = operator_norm(diff);
    g.h0_norm = operator_norm(g.h0);
    g.commutator_times_ep = operator_norm(g.k_times_ep * g.h0 - g.h0 * g.k_times_ep);
    g.k_norm_times_ep = operator_norm(g.k_times_ep);
    grid.push_back(std::move(g));
  }

  BoundInputs sup;
  sup.levels = energies;
  sup.total_time = cfg.total_time;
  double sup_commutator_times_ep = 0, sup_k_times_ep = 0, sup_h0 = 0;
  for (const auto &g : grid) {
    sup.v_norm = std::max(sup.v_norm, g.v_norm);
    sup.w_norm = std::max(sup.w_norm, g.w_norm);
    sup.v_minus_w_norm = std::max(sup.v_minus_w_norm, g.v_minus_w_norm);
    sup_commutator_times_ep = std::max(sup_commutator_times_ep, g.commutator_times_ep);
    sup_k_times_ep = std::max(sup_k_times_ep, g.k_norm_times_ep);
    sup_h0 = std::max(sup_h0, g.h0_norm);
  }

  report.bound_holds = true;
  report.monotone = true;
  for (double ep : cfg.ep_values) {
    std::vector<Eigen::MatrixXcd> hv, hw;
    for (const auto &g : grid) {
      hv.push_back(g.h0 + ep * hp + g.v);
      hw.push_back(g.h0 + ep * hp + g.w);
    }
    Eigen::MatrixXcd uv = evolve_grid(hv, cfg.total_time, cfg.steps);
    Eigen::MatrixXcd uw = evolve_grid(hw, cfg.total_time, cfg.steps);

    DecouplingRow row;
    row.ep = ep;
    row.lhs = operator_norm((uv - uw) * p);
    BoundInputs in = sup;
    in.ep = ep;
    in.commutator_norm = sup_commutator_times_ep / ep;
    row.k_bound = k_norm_bound(energies, sup.v_minus_w_norm, ep);
    row.rhs = theorem_bound(in);
    row.k_norm = sup_k_times_ep / ep;
    row.commutator_norm = in.commutator_norm;
    row.v_norm = sup.v_norm;
    row.w_norm = sup.w_norm;
    row.projector_leak = operator_norm(uw * p - p * uw * p);
    row.unitarity_error = std::max(unitarity_error(uv), unitarity_error(uw));
    row.rhs_loose = row.k_bound + cfg.total_time * (sup.v_norm + sup.w_norm) * row.k_bound +
                    cfg.total_time * 2 * row.k_bound * sup_h0;
    if (!(row.lhs <= row.rhs)) {
      report.bound_holds = false;
    }
    if (!report.rows.empty() && !(row.lhs <= report.rows.back().lhs + 1e-12)) {
      report.monotone = false;
    }
    report.rows.push_back(row);
  }

  std::vector<double> eps, lhs;
  for (const auto &row : report.rows) {
    if (row.lhs > 0) {
      eps.push_back(row.ep);
      lhs.push_back(row.lhs);
    }
  }
  report.slope = eps.size() >= 2 ? log_log_slope(eps, lhs) : 0.0;
  return report;
}

FidelityReport encoded_computation_fidelity(const EvolutionConfig &cfg, const PenaltyCalibration &cal,
                                            const std::optional<Eigen::VectorXcd> &initial) {
  cfg.validate();
  SubsystemCodeSpec code = family_code(cfg.k);
  PauliSum penalty = penalty_hamiltonian(code);
  DiagonalizeOptions opts;
  opts.degeneracy_tol = cfg.degeneracy_tol;
  opts.dense_cap = cfg.dense_cap;
  SpectralResult spectrum = diagonalize(penalty, opts);
  const Eigen::MatrixXcd &basis = spectrum.ground_basis;

  Eigen::VectorXcd psi;
  if (initial) {
    if (initial->size() != basis.rows() || initial->norm() == 0) {
      throw std::invalid_argument("initial state has the wrong dimension or is zero");
    }
    psi = initial->normalized();
    Eigen::VectorXcd projected = basis * (basis.adjoint() * psi);
    if ((projected - psi).norm() > 1e-9) {
      throw std::invalid_argument("initial state is not in the ground space of the penalty");
    }
  } else {
    for (Eigen::Index b = 0; b < basis.rows(); ++b) {
      Eigen::VectorXcd projected = basis * basis.row(b).adjoint();
      if (projected.norm() > 1e-8) {
        psi = projected.normalized();
        break;
      }
    }
  }

  Eigen::MatrixXcd hp = to_matrix(penalty, cfg.dense_cap);
  std::vector<double> times = midpoints(cfg);
  std::vector<Eigen::MatrixXcd> physical, bare;
  for (double t : times) {
    ProblemSpec spec = problem_at(cfg.schedule, t);
    physical.push_back(to_matrix(physical_encoded_hamiltonian(spec, cfg.k, cal, cfg.scale), cfg.dense_cap));
    bare.push_back(to_matrix(bare_encoded_hamiltonian(spec, cfg.k), cfg.dense_cap));
  }

  FidelityReport report;
  report.decreasing = true;
  for (double ep : cfg.ep_values) {
    std::vector<Eigen::MatrixXcd> h1, h2;
    for (size_t i = 0; i < times.size(); ++i) {
      h1.push_back(physical[i] + ep * hp);
      h2.push_back(bare[i] + ep * hp);
    }
    Eigen::VectorXcd out1 = evolve_grid(h1, cfg.total_time, cfg.steps) * psi;
    Eigen::VectorXcd out2 = evolve_grid(h2, cfg.total_time, cfg.steps) * psi;
    double overlap = std::abs(out2.dot(out1));
    FidelityRow row{ep, std::max(0.0, 1.0 - overlap * overlap)};
    if (!report.rows.empty() && !(row.infidelity <= report.rows.back().infidelity + 1e-12)) {
      report.decreasing = false;
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace gaugepen
