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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any selected criterion fails. `--criterion N` runs one.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gaugepen/bacon_shor.h"
#include "gaugepen/dynamics.h"
#include "gaugepen/hamiltonian.h"
#include "gaugepen/nogo.h"
#include "gaugepen/spectral.h"
#include "gaugepen/subsystem_code.h"

using namespace gaugepen;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  std::string failures;

  void check(bool ok, const std::string &what) {
    if (!ok) {
      pass = false;
      failures += failures.empty() ? what : ", " + what;
    }
  }
};

struct Criterion {
  int id;
  const char *title;
  double budget_seconds;
  std::function<void(Outcome &)> run;
};

SpectralResult penalty_spectrum(size_t k) {
  return diagonalize(penalty_hamiltonian(family_code(k)));
}

void code_parameters(Outcome &o) {
  for (size_t k = 1; k <= 4; ++k) {
    CodeParams p = code_params(family_matrix(k));
    o.check(p == CodeParams{6 * k, 2 * k, 2}, "params k=" + std::to_string(k));
    SubsystemCodeSpec code = family_code(k);
    CodeStructure s = derive_structure(code);
    o.check(s.num_stabilizers == 2 && s.num_logical == 2 * k, "structure k=" + std::to_string(k));
    F2Span direct = gauge_span(code), from_matrix = gauge_span(code_from_matrix(family_matrix(k)));
    bool same = direct.dimension() == from_matrix.dimension();
    for (const auto &v : from_matrix.basis()) same = same && direct.contains(v);
    o.check(same, "matrix span k=" + std::to_string(k));
  }
  for (size_t k = 1; k <= 2; ++k) {
    o.check(code_distance(family_code(k)) == 2, "enumerated distance k=" + std::to_string(k));
  }
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<size_t> side(1, 5);
  std::bernoulli_distribution cell(0.5);
  size_t agreed = 0, capped = 0;
  for (int i = 0; i < 50; ++i) {
    BinaryMatrix a;
    do {
      a = BinaryMatrix(side(rng), side(rng));
      for (size_t r = 0; r < a.rows(); ++r)
        for (size_t c = 0; c < a.cols(); ++c) a.set(r, c, cell(rng));
    } while (a.is_zero());
    size_t formula = code_params(a).d;
    try {
      size_t enumerated = code_distance(code_from_matrix(a), 4);
      o.check(enumerated == formula, "random matrix distance\n" + a.format());
      ++agreed;
    } catch (const SearchCapExceeded &) {
      ++capped;
    }
  }
  o.detail << "k=1..4 give (6k,2k,2), s=2; enumerated d=2 for k=1,2; random matrices: " << agreed
           << " agree, " << capped << " beyond w_max=4";
}

void ground_space(Outcome &o) {
  for (size_t k : {1, 2}) {
    SubsystemCodeSpec code = family_code(k);
    PauliSum hp = penalty_hamiltonian(code);
    SpectralResult r = diagonalize(hp);
    GroundSpaceReport rep = verify_ground_space(code, hp, r, 1e-10);
    double worst_stab = 0, worst_gen = 0;
    for (const auto &s : rep.stabilizers) worst_stab = std::max(worst_stab, s.residual);
    for (const auto &g : rep.generators) worst_gen = std::max(worst_gen, g.residual);
    size_t expected = k == 1 ? 4 : 16;
    o.check(r.ground_degeneracy == expected, "degeneracy k=" + std::to_string(k));
    o.check(worst_stab < 1e-10, "stabilizer residual k=" + std::to_string(k));
    o.check(worst_gen < 1e-10, "generator residual k=" + std::to_string(k));
    o.detail << "k=" << k << ": degeneracy " << r.ground_degeneracy << ", stabilizer residual " << worst_stab
             << ", generator residual " << worst_gen << "; ";
  }
}

void calibration_value(Outcome &o) {
  SubsystemCodeSpec code = family_code(1);
  SpectralResult r = penalty_spectrum(1);
  PenaltyCalibration cal = calibrate(code, r, code.gauge_generators);
  double lo = 1, hi = 0;
  for (const auto &g : code.gauge_generators) {
    double a = cal.alpha(g);
    lo = std::min(lo, a);
    hi = std::max(hi, a);
    o.check(std::abs(a - 0.6667) <= 1e-3, "alpha of " + code.describe(g));
  }
  o.detail << "alpha over the " << code.gauge_generators.size() << " generators in [" << lo << ", " << hi << "]";
}

void error_detection(Outcome &o) {
  for (size_t k : {1, 2}) {
    SpectralResult r = penalty_spectrum(k);
    ErrorDetectionReport rep = error_detection_check(r, 6 * k, 1e-10);
    o.check(rep.max_residual < 1e-10, "k=" + std::to_string(k));
    o.detail << "k=" << k << ": max ||P0 s P0|| = " << rep.max_residual << " over " << rep.entries.size()
             << " one-local Paulis; ";
  }
}

void effective_hamiltonian(Outcome &o) {
  SubsystemCodeSpec code = family_code(1);
  SpectralResult r = penalty_spectrum(1);
  PenaltyCalibration cal = calibrate(code, r, family_calibration_targets(1));
  Eigen::MatrixXcd p0 = r.ground_projector();
  double worst_calibrated = 0, best_ablation = 0;
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    std::mt19937_64 rng(seed);
    ProblemSpec spec = ProblemSpec::random(2, rng, true);
    Eigen::MatrixXcd bare = p0 * to_matrix(bare_encoded_hamiltonian(spec, 1)) * p0;
    Eigen::MatrixXcd phys = p0 * to_matrix(physical_encoded_hamiltonian(spec, 1, cal)) * p0;
    Eigen::MatrixXcd raw = p0 * to_matrix(physical_encoded_hamiltonian(spec, 1, cal, CouplingScale::kNone)) * p0;
    worst_calibrated = std::max(worst_calibrated, operator_norm(phys - bare));
    best_ablation = std::max(best_ablation, operator_norm(raw - bare));
  }
  o.check(worst_calibrated < 1e-8, "calibrated difference");
  o.check(best_ablation >= 1e-2, "ablation difference");
  o.detail << "10 specs: max calibrated difference " << worst_calibrated << ", largest unscaled difference "
           << best_ablation;
}

void decoupling(Outcome &o) {
  SubsystemCodeSpec code = family_code(1);
  PenaltyCalibration cal = calibrate(code, penalty_spectrum(1), family_calibration_targets(1));
  for (uint64_t seed : {1, 2, 3}) {
    EvolutionConfig cfg;
    cfg.k = 1;
    cfg.total_time = 1;
    cfg.steps = 64;
    cfg.ep_values = {5, 10, 20, 40, 80};
    cfg.seed = seed;
    std::mt19937_64 rng(seed);
    cfg.schedule = {{0.0, ProblemSpec::random(2, rng)}};
    cfg.bath = BathSpec::single_qubit(6);
    DecouplingReport rep = decoupling_experiment(cfg, cal);
    std::string tag = "seed " + std::to_string(seed);
    o.check(rep.monotone, tag + " monotone");
    o.check(rep.slope >= -1.3 && rep.slope <= -0.7, tag + " slope");
    o.check(rep.bound_holds, tag + " bound");
    double worst_ratio = 0;
    for (const auto &row : rep.rows) worst_ratio = std::max(worst_ratio, row.lhs / row.rhs);
    o.detail << tag << ": slope " << rep.slope << ", max lhs/rhs " << worst_ratio << "; ";
  }
}

void sectors(Outcome &o) {
  SubsystemCodeSpec code = family_code(1);
  SectorReport rep = sector_analysis(code, penalty_hamiltonian(code));
  o.check(rep.block_diagonal, "block diagonal");
  o.check(rep.non_positive_off_diagonal, "non-positive off-diagonal");
  o.check(rep.irreducible, "irreducible");
  o.check(rep.unique_positive_ground_states, "unique positive ground states");
  o.check(rep.ground_in_trivial_syndrome, "s=+1 minimal");
  o.check(rep.identical_across_z, "identical across z");
  o.detail << rep.sectors.size() << " sectors, global ground energy " << rep.global_ground_energy;
}

void nogo_scan(Outcome &o) {
  ScanReport scan = scan_matrices(5, 200, 7, 4);
  o.check(scan.instances.size() == 200, "instance count");
  o.check(scan.counterexample_rows == 0, "counterexample rows");
  o.check(scan.overlapping_instances == 0, "overlapping supports");
  o.detail << scan.instances.size() << " codes (" << scan.rejected << " samples rejected), "
           << scan.counterexample_rows << " counterexample rows, " << scan.unresolved_rows << " unresolved rows, "
           << scan.overlapping_instances << " overlapping instances";
}

/// Exhaustive search over all 4^n Paulis for the lightest element of logical * span.
size_t exhaustive_coset_weight(size_t n, const PauliOp &logical, const F2Span &span) {
  size_t best = n + 1;
  for (uint64_t xs = 0; xs < (uint64_t{1} << n); ++xs) {
    for (uint64_t zs = 0; zs < (uint64_t{1} << n); ++zs) {
      BitVector x(n), z(n);
      for (size_t q = 0; q < n; ++q) {
        x.set(q, (xs >> q) & 1);
        z.set(q, (zs >> q) & 1);
      }
      PauliOp p(x, z);
      if (span.contains(p.symplectic() ^ logical.symplectic())) best = std::min(best, weight(p));
    }
  }
  return best;
}

void dressed_vs_bare(Outcome &o) {
  SubsystemCodeSpec code = family_code(1);
  auto logicals = family_logicals(1);
  PauliOp xx = logicals[0].first * logicals[1].first;
  F2Span stab(2 * code.n);
  for (const auto &s : derive_structure(code).stabilizers) stab.insert(s.symplectic());
  F2Span gauge = gauge_span(code);
  size_t dressed = exhaustive_coset_weight(code.n, xx, gauge);
  size_t bare = exhaustive_coset_weight(code.n, xx, stab);
  PauliOp bare_rep = min_weight_bare_representative(code, xx, code.n);
  PauliOp dressed_rep = min_weight_dressed_representative(code, xx, code.n);
  o.check(weight(dressed_rep) == dressed && weight(bare_rep) == bare, "search agreement");
  o.check(dressed == 2, "dressed weight 2");
  o.check(bare == 4, "bare weight 4");
  o.detail << "k=1 X1X2: dressed weight " << dressed << " (" << code.describe(dressed_rep) << "), bare weight "
           << bare << " (" << code.describe(bare_rep) << ")";
  // Informational: the same logical at k=2.
  SubsystemCodeSpec code2 = family_code(2);
  auto logicals2 = family_logicals(2);
  PauliOp xx2 = logicals2[0].first * logicals2[1].first;
  o.detail << "; k=2 X1X2: dressed weight " << weight(min_weight_dressed_representative(code2, xx2, 6))
           << ", bare weight " << weight(min_weight_bare_representative(code2, xx2, 6));
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"gaugepen acceptance suite"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-9)")->check(CLI::Range(1, 9));
  CLI11_PARSE(app, argc, argv);

  std::vector<Criterion> criteria = {
      {1, "code parameters", 1, code_parameters},
      {2, "penalty ground space at k=1,2", 60, ground_space},
      {3, "calibration value at k=1", 1, calibration_value},
      {4, "one-local error detection at k=1,2", 60, error_detection},
      {5, "effective Hamiltonian at k=1", 10, effective_hamiltonian},
      {6, "decoupling sweep with bath", 120, decoupling},
      {7, "sector structure at k=1", 5, sectors},
      {8, "weight-bound scan", 300, nogo_scan},
      {9, "dressed vs bare weight at k=1", 5, dressed_vs_bare},
  };

  bool all_pass = true;
  for (auto &c : criteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception &e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.check(secs <= c.budget_seconds, "time budget " + std::to_string(c.budget_seconds) + " s");
    all_pass = all_pass && o.pass;
    std::printf("criterion %d %s: %s (%.2f s) %s\n", c.id, c.title, o.pass ? "PASS" : "FAIL", secs,
                o.detail.str().c_str());
    if (!o.pass) {
      std::printf("  failed checks: %s\n", o.failures.c_str());
    }
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
