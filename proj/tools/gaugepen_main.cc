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

// gaugepen: build codes, diagonalize penalties, calibrate alpha, run the
// decoupling sweep and scan the weight bound. Every command writes JSON
// reports plus manifest.json into --out.
//
// Exit codes: 0 success, 1 a numerical check failed, 2 usage or config error.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gaugepen/bacon_shor.h"
#include "gaugepen/dynamics.h"
#include "gaugepen/hamiltonian.h"
#include "gaugepen/io.h"
#include "gaugepen/nogo.h"
#include "gaugepen/spectral.h"
#include "gaugepen/subsystem_code.h"

#ifndef GAUGEPEN_VERSION
#define GAUGEPEN_VERSION "0.0.0"
#endif

namespace fs = std::filesystem;
using namespace gaugepen;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

/// Raised for bad flag combinations found after parsing.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Globals {
  fs::path out = "gaugepen-out";
  uint64_t seed = 1;
  size_t dense_cap = kDefaultDenseCap;
  double tol = 1e-10;
};

/// Collects outputs and writes the run manifest.
class Run {
 public:
  Run(std::string command, const Globals &g) : command_(std::move(command)), globals_(g) {
    start_ = std::chrono::steady_clock::now();
  }

  void write_json(const std::string &name, const Json &j) {
    fs::path p = globals_.out / name;
    write_json_file(p, j);
    outputs_.push_back(p.string());
  }

  void write_text(const std::string &name, const std::string &text) {
    fs::path p = globals_.out / name;
    write_text_file(p, text);
    outputs_.push_back(p.string());
  }

  Json &config() { return config_; }
  void add_seed(uint64_t s) { seeds_.push_back(s); }

  void finish(int exit_code) {
    double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    Json manifest = {
        {"command", command_},
        {"config", config_},
        {"versions", {{"gaugepen", GAUGEPEN_VERSION}, {"report_format", 1}}},
        {"seeds", seeds_},
        {"outputs", outputs_},
        {"exit_code", exit_code},
        {"wall_clock_seconds", wall},
    };
    write_json_file(globals_.out / "manifest.json", manifest);
  }

 private:
  std::string command_;
  Globals globals_;
  Json config_ = Json::object();
  std::vector<uint64_t> seeds_;
  std::vector<std::string> outputs_;
  std::chrono::steady_clock::time_point start_;
};

struct CodeSource {
  std::optional<size_t> k;
  std::string matrix_file;

  void add_options(CLI::App *cmd) {
    auto *k_opt = cmd->add_option("--k", k, "Member of the [[6k,2k,2]] family (k >= 1)");
    auto *m_opt = cmd->add_option("--matrix", matrix_file, "Binary matrix file, one row of 0/1 per line")
                      ->check(CLI::ExistingFile);
    k_opt->excludes(m_opt);
    m_opt->excludes(k_opt);
  }

  void validate() const {
    if (!k && matrix_file.empty()) {
      throw UsageError("one of --k or --matrix is required");
    }
    if (k && *k < 1) {
      throw UsageError("--k must be at least 1");
    }
  }

  BinaryMatrix matrix() const { return k ? family_matrix(*k) : BinaryMatrix::parse(read_text_file(matrix_file)); }

  SubsystemCodeSpec code() const {
    if (k) {
      return family_code(*k);
    }
    return code_from_matrix(matrix());
  }

  std::string id() const { return k ? "family-k" + std::to_string(*k) : "matrix:" + fs::path(matrix_file).filename().string(); }

  Json describe() const {
    Json j = Json::object();
    if (k) {
      j["k"] = *k;
    } else {
      j["matrix"] = matrix_file;
    }
    return j;
  }
};

Json params_json(const CodeParams &p) { return {{"n", p.n}, {"k", p.k}, {"d", p.d}}; }

int cmd_code(const Globals &g, const CodeSource &src, size_t w_max) {
  src.validate();
  Run run("code", g);
  run.config() = src.describe();
  run.config()["w_max"] = w_max;

  BinaryMatrix a = src.matrix();
  SubsystemCodeSpec code = src.code();
  CodeStructure s = derive_structure(code);
  CodeParams p = code_params(a);

  Json structure = structure_to_json(code, s);
  structure["d"] = p.d;
  structure["params"] = params_json(p);
  try {
    structure["d_enumerated"] = code_distance(code, w_max);
  } catch (const SearchCapExceeded &) {
    structure["d_enumerated"] = nullptr;
  }
  std::string listing;
  for (const auto &gen : code.gauge_generators) {
    listing += gen.str() + "    # " + code.describe(gen) + "\n";
  }

  run.write_json("code.json", code_to_json(code));
  run.write_json("structure.json", structure);
  run.write_text("generators.txt", listing);
  std::printf("[[%zu,%zu,%zu]] s=%zu g=%zu generators=%zu\n", p.n, p.k, p.d, s.num_stabilizers, s.num_gauge,
              s.num_generators);
  bool consistent = p.k == s.num_logical && (structure["d_enumerated"].is_null() || structure["d_enumerated"] == p.d);
  int rc = consistent ? kExitOk : kExitCheckFailed;
  if (!consistent) {
    std::fprintf(stderr, "matrix formula and code structure disagree\n");
  }
  run.finish(rc);
  return rc;
}

int cmd_params(const Globals &g, const CodeSource &src) {
  src.validate();
  Run run("params", g);
  run.config() = src.describe();
  CodeParams p = code_params(src.matrix());
  run.write_json("params.json", params_json(p));
  std::printf("[[%zu,%zu,%zu]]\n", p.n, p.k, p.d);
  run.finish(kExitOk);
  return kExitOk;
}

int cmd_calibrate(const Globals &g, const CodeSource &src, bool sectors) {
  src.validate();
  Run run("calibrate", g);
  run.config() = src.describe();
  run.config()["dense_cap"] = g.dense_cap;
  run.config()["tol"] = g.tol;

  SubsystemCodeSpec code = src.code();
  PauliSum penalty = penalty_hamiltonian(code);
  DiagonalizeOptions opts;
  opts.dense_cap = g.dense_cap;
  SpectralResult spectrum = diagonalize(penalty, opts);

  GroundSpaceReport ground = verify_ground_space(code, penalty, spectrum, g.tol);
  ErrorDetectionReport detection = error_detection_check(spectrum, code.n, g.tol);
  std::vector<PauliOp> targets = src.k ? family_calibration_targets(*src.k) : code.gauge_generators;
  PenaltyCalibration cal = calibrate(code, spectrum, targets, 1e-6, g.tol);
  cal.code_id = src.id();

  run.write_json("spectrum.json", spectrum_to_json(spectrum));
  run.write_json("ground_space.json", ground_space_report_to_json(ground));
  run.write_json("error_detection.json", error_detection_to_json(detection));
  run.write_json("calibration.json", calibration_to_json(cal));
  bool ok = ground.passed() && detection.passed();
  if (sectors) {
    SectorReport sr = sector_analysis(code, penalty, g.dense_cap);
    run.write_json("sectors.json", sector_report_to_json(sr));
    ok = ok && sr.passed();
    std::printf("sectors: %zu, all checks %s\n", sr.sectors.size(), sr.passed() ? "pass" : "FAIL");
  }

  std::printf("ground energy %.12g, degeneracy %zu (expected %zu), gap %.6g\n", spectrum.ground_energy,
              spectrum.ground_degeneracy, ground.expected_degeneracy, spectrum.gap);
  for (const auto &r : ground.generators) {
    std::printf("  alpha %-16s = %.6f  residual %.2e\n", code.describe(r.op).c_str(), r.value, r.residual);
  }
  std::printf("max one-local ||P0 s P0|| = %.2e (%s)\n", detection.max_residual,
              code.describe(detection.worst).c_str());
  int rc = ok ? kExitOk : kExitCheckFailed;
  if (!ok) {
    std::fprintf(stderr, "ground-space verification failed; see %s\n", (g.out / "ground_space.json").c_str());
  }
  run.finish(rc);
  return rc;
}

struct EvolveFlags {
  std::string config_file;
  std::string calibration_file;
  std::string problem_file;
  std::optional<size_t> k;
  std::vector<double> ep;
  std::optional<size_t> steps;
  std::optional<double> total_time;
  bool no_rescale = false;
  bool no_bath = false;
  bool emit_csv = false;
  bool seed_given = false;
};

int cmd_evolve(const Globals &g, const EvolveFlags &f) {
  Json cj = f.config_file.empty() ? Json::object() : read_json_file(f.config_file);
  if (f.k) cj["k"] = *f.k;
  if (!f.ep.empty()) cj["ep_values"] = f.ep;
  if (f.steps) cj["steps"] = *f.steps;
  if (f.total_time) cj["total_time"] = *f.total_time;
  if (f.no_rescale) cj["rescale"] = false;
  if (f.no_bath) cj["bath"] = "none";
  if (f.seed_given || !cj.contains("seed")) cj["seed"] = g.seed;
  if (!f.problem_file.empty()) {
    cj.erase("schedule");
    cj["problem"] = read_json_file(f.problem_file);
  }
  cj["dense_cap"] = g.dense_cap;
  EvolutionConfig cfg = evolution_config_from_json(cj);

  Run run("evolve", g);
  run.add_seed(cfg.seed);
  run.config() = evolution_config_to_json(cfg);

  PenaltyCalibration cal;
  if (!f.calibration_file.empty()) {
    cal = calibration_from_json(read_json_file(f.calibration_file));
    run.config()["calibration"] = f.calibration_file;
  } else {
    SubsystemCodeSpec code = family_code(cfg.k);
    DiagonalizeOptions opts;
    opts.dense_cap = g.dense_cap;
    SpectralResult spectrum = diagonalize(penalty_hamiltonian(code), opts);
    cal = calibrate(code, spectrum, family_calibration_targets(cfg.k), 1e-6, g.tol);
    cal.code_id = "family-k" + std::to_string(cfg.k);
    run.write_json("calibration.json", calibration_to_json(cal));
  }

  DecouplingReport dec = decoupling_experiment(cfg, cal);
  FidelityReport fid = encoded_computation_fidelity(cfg, cal);
  run.write_json("config.json", evolution_config_to_json(cfg));
  run.write_json("decoupling.json", decoupling_report_to_json(dec));
  run.write_json("fidelity.json", fidelity_report_to_json(fid));
  if (f.emit_csv) {
    run.write_text("decoupling.csv", decoupling_report_to_csv(dec));
    run.write_text("fidelity.csv", fidelity_report_to_csv(fid));
  }

  std::printf("%8s %12s %12s %12s\n", "ep", "lhs", "rhs", "infidelity");
  for (size_t i = 0; i < dec.rows.size(); ++i) {
    std::printf("%8g %12.4e %12.4e %12.4e\n", dec.rows[i].ep, dec.rows[i].lhs, dec.rows[i].rhs,
                fid.rows[i].infidelity);
  }
  std::printf("slope %.4f, monotone %s, bound %s\n", dec.slope, dec.monotone ? "yes" : "no",
              dec.bound_holds ? "holds" : "VIOLATED");
  int rc = dec.bound_holds ? kExitOk : kExitCheckFailed;
  run.finish(rc);
  return rc;
}

int cmd_nogo_scan(const Globals &g, size_t size_max, size_t count, size_t w_cap) {
  if (size_max < 2 || size_max > kMaxScanSize) {
    throw UsageError("--size-max must be between 2 and " + std::to_string(kMaxScanSize));
  }
  Run run("nogo scan", g);
  run.add_seed(g.seed);
  run.config() = {{"size_max", size_max}, {"count", count}, {"seed", g.seed}, {"w_cap", w_cap}};
  ScanReport scan = scan_matrices(size_max, count, g.seed, w_cap);
  run.write_json("nogo_scan.json", scan_report_to_json(scan));
  std::printf("instances %zu, counterexample rows %zu, unresolved rows %zu, overlapping instances %zu\n",
              scan.instances.size(), scan.counterexample_rows, scan.unresolved_rows, scan.overlapping_instances);
  int rc = scan.passed() ? kExitOk : kExitCheckFailed;
  run.finish(rc);
  return rc;
}

int cmd_nogo_check(const Globals &g, const CodeSource &src, size_t w_cap) {
  src.validate();
  Run run("nogo check", g);
  run.config() = src.describe();
  run.config()["w_cap"] = w_cap;
  SubsystemCodeSpec code = src.code();
  NogoReport report = check_weight_bound(code, w_cap);
  run.write_json("nogo.json", nogo_report_to_json(code, report));
  for (const auto &row : report.rows) {
    std::printf("logical %zu %c: min weight %s, count %zu\n", row.logical + 1, row.type,
                row.min_weight ? std::to_string(*row.min_weight).c_str() : ">cap", row.count);
  }
  int rc = report.has_counterexample() || !report.supports_disjoint ? kExitCheckFailed : kExitOk;
  run.finish(rc);
  return rc;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Subsystem-code penalty Hamiltonians: construction, calibration and checks"};
  app.require_subcommand(1);
  // Global flags may also follow the subcommand.
  app.fallthrough();
  Globals g;
  app.add_option("--out", g.out, "Output directory")->capture_default_str();
  auto *seed_opt = app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--dense-cap", g.dense_cap, "Largest qubit count for dense matrices")->capture_default_str();
  app.add_option("--tol", g.tol, "Tolerance for ground-space checks")->capture_default_str();
  app.set_version_flag("--version", GAUGEPEN_VERSION);

  CodeSource code_src, params_src, cal_src, check_src;
  size_t w_max = 4;
  auto *code_cmd = app.add_subcommand("code", "Build a code and report its structure");
  code_src.add_options(code_cmd);
  code_cmd->add_option("--w-max", w_max, "Distance search cap")->capture_default_str();

  auto *params_cmd = app.add_subcommand("params", "Matrix-formula parameters [[n,k,d]]");
  params_src.add_options(params_cmd);

  bool sectors = false;
  auto *cal_cmd = app.add_subcommand("calibrate", "Diagonalize the penalty, verify its ground space, measure alpha");
  cal_src.add_options(cal_cmd);
  cal_cmd->add_flag("--sectors", sectors, "Also run the sector analysis");

  EvolveFlags ef;
  auto *evolve_cmd = app.add_subcommand("evolve", "Decoupling sweep over ep and the encoded-computation fidelity");
  evolve_cmd->add_option("--config", ef.config_file, "Experiment config JSON")->check(CLI::ExistingFile);
  evolve_cmd->add_option("--calibration", ef.calibration_file, "Calibration JSON from `calibrate`")
      ->check(CLI::ExistingFile);
  evolve_cmd->add_option("--problem", ef.problem_file, "Problem JSON")->check(CLI::ExistingFile);
  evolve_cmd->add_option("--k", ef.k, "Family member")->check(CLI::PositiveNumber);
  evolve_cmd->add_option("--ep", ef.ep, "Penalty strengths, ascending");
  evolve_cmd->add_option("--steps", ef.steps, "Time steps");
  evolve_cmd->add_option("--time", ef.total_time, "Total evolution time");
  evolve_cmd->add_flag("--no-rescale", ef.no_rescale, "Leave coupling coefficients unscaled");
  evolve_cmd->add_flag("--no-bath", ef.no_bath, "Drop the bath qubit");
  evolve_cmd->add_flag("--emit-csv", ef.emit_csv, "Also write CSV tables");

  auto *nogo_cmd = app.add_subcommand("nogo", "Weight bound for two-local CSS subsystem codes");
  nogo_cmd->require_subcommand(1);
  nogo_cmd->fallthrough();
  size_t size_max = 5, count = 200, w_cap = 4;
  auto *scan_cmd = nogo_cmd->add_subcommand("scan", "Random matrix codes");
  scan_cmd->add_option("--size-max", size_max, "Largest matrix side")->capture_default_str();
  scan_cmd->add_option("--count", count, "Number of codes with d >= 2")->capture_default_str();
  scan_cmd->add_option("--w-cap", w_cap, "Weight search cap")->capture_default_str();
  auto *check_cmd = nogo_cmd->add_subcommand("check", "A single code");
  check_src.add_options(check_cmd);
  check_cmd->add_option("--w-cap", w_cap, "Weight search cap")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*code_cmd) return cmd_code(g, code_src, w_max);
    if (*params_cmd) return cmd_params(g, params_src);
    if (*cal_cmd) return cmd_calibrate(g, cal_src, sectors);
    if (*evolve_cmd) {
      ef.seed_given = seed_opt->count() > 0;
      return cmd_evolve(g, ef);
    }
    if (*scan_cmd) return cmd_nogo_scan(g, size_max, count, w_cap);
    if (*check_cmd) return cmd_nogo_check(g, check_src, w_cap);
  } catch (const VerificationFailure &e) {
    std::fprintf(stderr, "check failed: %s\n", e.what());
    return kExitCheckFailed;
  } catch (const DenseCapExceeded &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const CalibrationError &e) {
    std::fprintf(stderr, "calibration error: %s\n", e.what());
    return kExitUsage;
  } catch (const SearchCapExceeded &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitUsage;
  } catch (const nlohmann::json::exception &e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitUsage;
  } catch (const std::runtime_error &e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  }
  return kExitUsage;
}
