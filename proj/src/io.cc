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

#include "gaugepen/io.h"

#include <fstream>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>

namespace gaugepen {

namespace {

Json vector_json(const Eigen::VectorXd &v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    out.push_back(v(i));
  }
  return out;
}

Json matrix_json(const Eigen::MatrixXd &m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(m(r, c));
    }
    out.push_back(std::move(row));
  }
  return out;
}

Eigen::VectorXd vector_from(const Json &j, size_t m, const char *name) {
  if (!j.is_array() || j.size() != m) {
    throw std::invalid_argument(std::string("'") + name + "' must be an array of length " + std::to_string(m));
  }
  Eigen::VectorXd v(m);
  for (size_t i = 0; i < m; ++i) {
    v(i) = j[i].get<double>();
  }
  return v;
}

Eigen::MatrixXd matrix_from(const Json &j, size_t m, const char *name) {
  if (!j.is_array() || j.size() != m) {
    throw std::invalid_argument(std::string("'") + name + "' must be an " + std::to_string(m) + "x" +
                                std::to_string(m) + " array");
  }
  Eigen::MatrixXd out(m, m);
  for (size_t r = 0; r < m; ++r) {
    if (!j[r].is_array() || j[r].size() != m) {
      throw std::invalid_argument(std::string("row ") + std::to_string(r) + " of '" + name + "' has the wrong length");
    }
    for (size_t c = 0; c < m; ++c) {
      out(r, c) = j[r][c].get<double>();
    }
  }
  return out;
}

Json residuals_json(const std::vector<OperatorResidual> &rs, const char *value_name) {
  Json out = Json::array();
  for (const auto &r : rs) {
    out.push_back({{"op", r.op.str()}, {value_name, r.value}, {"residual", r.residual}});
  }
  return out;
}

Json ops_json(const std::vector<PauliOp> &ops) {
  Json out = Json::array();
  for (const auto &op : ops) {
    out.push_back(op.str());
  }
  return out;
}

Json pairs_json(const std::vector<PauliPair> &pairs) {
  Json out = Json::array();
  for (const auto &p : pairs) {
    out.push_back({p.first.str(), p.second.str()});
  }
  return out;
}

Json int_list(const std::vector<int> &v) {
  Json out = Json::array();
  for (int x : v) {
    out.push_back(x);
  }
  return out;
}

std::string csv_number(double x) {
  std::ostringstream s;
  s << std::setprecision(17) << x;
  return s.str();
}

}  // namespace

Json code_to_json(const SubsystemCodeSpec &code) {
  Json labels = Json::object();
  for (const auto &[q, name] : code.labels) {
    labels[std::to_string(q)] = name;
  }
  return {{"n", code.n}, {"generators", ops_json(code.gauge_generators)}, {"labels", labels}};
}

SubsystemCodeSpec code_from_json(const Json &j) {
  SubsystemCodeSpec code;
  code.n = j.at("n").get<size_t>();
  for (const auto &g : j.at("generators")) {
    code.gauge_generators.push_back(PauliOp::parse(g.get<std::string>(), code.n));
  }
  if (j.contains("labels")) {
    for (const auto &[key, value] : j.at("labels").items()) {
      code.labels[std::stoul(key)] = value.get<std::string>();
    }
  }
  code.validate();
  return code;
}

Json structure_to_json(const SubsystemCodeSpec &code, const CodeStructure &s) {
  Json stabilizers = Json::array();
  for (const auto &op : s.stabilizers) {
    stabilizers.push_back({{"op", op.str()}, {"labeled", code.describe(op)}});
  }
  return {
      {"n", code.n},
      {"k_logical", s.num_logical},
      {"s", s.num_stabilizers},
      {"g", s.num_gauge},
      {"num_generators", s.num_generators},
      {"generator_rank", s.generator_rank},
      {"stabilizers", stabilizers},
      {"logical_pairs", pairs_json(s.logical_pairs)},
      {"gauge_pairs", pairs_json(s.gauge_pairs)},
  };
}

Json problem_to_json(const ProblemSpec &p) {
  Json out = {{"m", p.m}, {"a", vector_json(p.a)}, {"b", vector_json(p.b)}, {"c", matrix_json(p.c)},
              {"d", matrix_json(p.d)}};
  if (p.yy) {
    out["yy"] = matrix_json(*p.yy);
  }
  return out;
}

ProblemSpec problem_from_json(const Json &j) {
  size_t m = j.at("m").get<size_t>();
  ProblemSpec p = ProblemSpec::zero(m);
  if (j.contains("a")) p.a = vector_from(j["a"], m, "a");
  if (j.contains("b")) p.b = vector_from(j["b"], m, "b");
  if (j.contains("c")) p.c = matrix_from(j["c"], m, "c");
  if (j.contains("d")) p.d = matrix_from(j["d"], m, "d");
  if (j.contains("yy")) p.yy = matrix_from(j["yy"], m, "yy");
  p.validate();
  return p;
}

Json schedule_to_json(const Schedule &schedule) {
  Json out = Json::array();
  for (const auto &knot : schedule) {
    out.push_back({{"t", knot.t}, {"problem", problem_to_json(knot.spec)}});
  }
  return out;
}

Schedule schedule_from_json(const Json &j) {
  if (!j.is_array()) {
    throw std::invalid_argument("a schedule must be an array of knots");
  }
  Schedule out;
  for (const auto &knot : j) {
    if (knot.is_array() && knot.size() == 2) {
      out.push_back({knot[0].get<double>(), problem_from_json(knot[1])});
    } else {
      out.push_back({knot.at("t").get<double>(), problem_from_json(knot.at("problem"))});
    }
  }
  validate_schedule(out);
  return out;
}

Json calibration_to_json(const PenaltyCalibration &cal) {
  Json alphas = Json::object();
  for (const auto &[key, value] : cal.alphas) {
    alphas[key] = value;
  }
  return {{"code_id", cal.code_id}, {"alphas", alphas}, {"max_residual", cal.max_residual}};
}

PenaltyCalibration calibration_from_json(const Json &j) {
  PenaltyCalibration cal;
  cal.code_id = j.value("code_id", std::string());
  for (const auto &[key, value] : j.at("alphas").items()) {
    cal.alphas[key] = value.get<double>();
  }
  cal.max_residual = j.value("max_residual", 0.0);
  return cal;
}

EvolutionConfig evolution_config_from_json(const Json &j) {
  EvolutionConfig cfg;
  cfg.k = j.value("k", cfg.k);
  cfg.total_time = j.value("total_time", cfg.total_time);
  cfg.steps = j.value("steps", cfg.steps);
  if (j.contains("ep_values")) {
    cfg.ep_values = j["ep_values"].get<std::vector<double>>();
  }
  cfg.seed = j.value("seed", cfg.seed);
  cfg.degeneracy_tol = j.value("degeneracy_tol", cfg.degeneracy_tol);
  cfg.dense_cap = j.value("dense_cap", cfg.dense_cap);
  if (j.contains("rescale")) {
    cfg.scale = j["rescale"].get<bool>() ? CouplingScale::kCalibrated : CouplingScale::kNone;
  }
  if (j.contains("schedule")) {
    cfg.schedule = schedule_from_json(j["schedule"]);
  } else if (j.contains("problem")) {
    cfg.schedule = {{0.0, problem_from_json(j["problem"])}};
  } else {
    std::mt19937_64 rng(cfg.seed);
    cfg.schedule = {{0.0, ProblemSpec::random(2 * cfg.k, rng, j.value("random_yy", false))}};
  }
  size_t n_sys = 6 * cfg.k;
  if (j.contains("bath")) {
    const Json &b = j["bath"];
    if (b.is_string() && b == "none") {
      cfg.bath = BathSpec::none();
    } else if (b.is_string() && b == "default") {
      cfg.bath = BathSpec::single_qubit(n_sys);
    } else if (b.is_object()) {
      cfg.bath = BathSpec::single_qubit(n_sys, b.value("omega", 1.0), b.value("strength", 0.1));
    } else {
      throw std::invalid_argument("'bath' must be \"none\", \"default\" or {\"omega\", \"strength\"}");
    }
  } else {
    cfg.bath = BathSpec::single_qubit(n_sys);
  }
  cfg.validate();
  return cfg;
}

Json evolution_config_to_json(const EvolutionConfig &cfg) {
  Json bath_couplings = Json::array();
  for (const auto &c : cfg.bath.couplings) {
    bath_couplings.push_back({{"system_qubit", c.system_qubit},
                              {"system_axis", std::string(1, c.system_axis)},
                              {"bath_op", c.bath_op.str()},
                              {"strength", c.strength}});
  }
  return {
      {"k", cfg.k},
      {"total_time", cfg.total_time},
      {"steps", cfg.steps},
      {"ep_values", cfg.ep_values},
      {"seed", cfg.seed},
      {"rescale", cfg.scale == CouplingScale::kCalibrated},
      {"degeneracy_tol", cfg.degeneracy_tol},
      {"dense_cap", cfg.dense_cap},
      {"schedule", schedule_to_json(cfg.schedule)},
      {"bath",
       {{"n_bath", cfg.bath.n_bath}, {"h_bath", cfg.bath.h_bath.str()}, {"couplings", bath_couplings}}},
  };
}

Json spectrum_to_json(const SpectralResult &r) {
  Json low = Json::array();
  for (Eigen::Index i = 0; i < std::min<Eigen::Index>(r.eigenvalues.size(), 32); ++i) {
    low.push_back(r.eigenvalues(i));
  }
  return {
      {"num_qubits", r.num_qubits},
      {"dimension", r.eigenvalues.size()},
      {"ground_energy", r.ground_energy},
      {"ground_degeneracy", r.ground_degeneracy},
      {"gap", r.gap},
      {"tolerance", r.tolerance},
      {"ambiguous_gap", r.ambiguous_gap},
      {"lowest_eigenvalues", low},
  };
}

Json ground_space_report_to_json(const GroundSpaceReport &r) {
  return {
      {"passed", r.passed()},
      {"hypothesis_holds", r.hypothesis_holds},
      {"degeneracy", r.degeneracy},
      {"expected_degeneracy", r.expected_degeneracy},
      {"stabilizers_fix_ground_space", r.stabilizers_fix_ground_space()},
      {"generators_proportional", r.generators_proportional()},
      {"tolerance", r.tolerance},
      {"stabilizers", residuals_json(r.stabilizers, "value")},
      {"generators", residuals_json(r.generators, "alpha")},
  };
}

Json error_detection_to_json(const ErrorDetectionReport &r) {
  return {
      {"passed", r.passed()},
      {"max_residual", r.max_residual},
      {"worst", r.worst.str()},
      {"tolerance", r.tolerance},
      {"entries", residuals_json(r.entries, "norm")},
  };
}

Json sector_report_to_json(const SectorReport &r) {
  Json sectors = Json::array();
  for (const auto &s : r.sectors) {
    sectors.push_back({
        {"z", int_list(s.z)},
        {"s", int_list(s.s)},
        {"dimension", s.dimension},
        {"ground_energy", s.ground_energy},
        {"irreducible", s.irreducible},
        {"non_positive_off_diagonal", s.non_positive_off_diagonal},
        {"unique_positive_ground_state", s.unique_positive_ground_state},
    });
  }
  return {
      {"passed", r.passed()},
      {"block_diagonal", r.block_diagonal},
      {"non_positive_off_diagonal", r.non_positive_off_diagonal},
      {"irreducible", r.irreducible},
      {"unique_positive_ground_states", r.unique_positive_ground_states},
      {"ground_in_trivial_syndrome", r.ground_in_trivial_syndrome},
      {"identical_across_z", r.identical_across_z},
      {"global_ground_energy", r.global_ground_energy},
      {"sectors", sectors},
  };
}

Json decoupling_report_to_json(const DecouplingReport &r) {
  Json rows = Json::array();
  for (const auto &row : r.rows) {
    rows.push_back({
        {"ep", row.ep},
        {"lhs", row.lhs},
        {"rhs", row.rhs},
        {"rhs_loose", row.rhs_loose},
        {"k_bound", row.k_bound},
        {"k_norm", row.k_norm},
        {"commutator_norm", row.commutator_norm},
        {"v_norm", row.v_norm},
        {"w_norm", row.w_norm},
        {"projector_leak", row.projector_leak},
        {"unitarity_error", row.unitarity_error},
    });
  }
  return {
      {"monotone", r.monotone},
      {"bound_holds", r.bound_holds},
      {"slope", r.slope},
      {"grid_approximation", r.grid_approximation},
      {"penalty_gaps", r.penalty_gaps},
      {"rows", rows},
  };
}

Json fidelity_report_to_json(const FidelityReport &r) {
  Json rows = Json::array();
  for (const auto &row : r.rows) {
    rows.push_back({{"ep", row.ep}, {"infidelity", row.infidelity}});
  }
  return {{"decreasing", r.decreasing}, {"rows", rows}};
}

Json nogo_report_to_json(const SubsystemCodeSpec &code, const NogoReport &r) {
  Json rows = Json::array();
  for (const auto &row : r.rows) {
    Json witnesses = Json::array();
    for (const auto &w : row.witnesses) {
      witnesses.push_back(code.describe(w));
    }
    rows.push_back({
        {"logical", row.logical},
        {"type", std::string(1, row.type)},
        {"min_weight", row.min_weight ? Json(*row.min_weight) : Json(nullptr)},
        {"representative", code.describe(row.representative)},
        {"count", row.count},
        {"witnesses", witnesses},
        {"bound_satisfied", row.bound_satisfied},
        {"resolved", row.resolved},
    });
  }
  Json out = {
      {"has_counterexample", r.has_counterexample()},
      {"unresolved_rows", r.unresolved_rows()},
      {"supports_disjoint", r.supports_disjoint},
      {"note", r.note},
      {"rows", rows},
  };
  if (r.overlap_witness) {
    out["overlap_witness"] = {code.describe(r.overlap_witness->first), code.describe(r.overlap_witness->second)};
  }
  return out;
}

Json scan_report_to_json(const ScanReport &r) {
  Json instances = Json::array();
  for (const auto &inst : r.instances) {
    SubsystemCodeSpec code = code_from_matrix(inst.matrix);
    Json entry = nogo_report_to_json(code, inst.report);
    entry.erase("note");
    instances.push_back({
        {"index", inst.index},
        {"matrix", inst.matrix.format()},
        {"params", {inst.params.n, inst.params.k, inst.params.d}},
        {"report", entry},
    });
  }
  Json distribution = Json::array();
  for (const auto &[key, n] : r.distribution) {
    distribution.push_back({{"min_weight", key.first}, {"count", key.second}, {"rows", n}});
  }
  return {
      {"passed", r.passed()},
      {"instances_checked", r.instances.size()},
      {"rejected_samples", r.rejected},
      {"counterexample_rows", r.counterexample_rows},
      {"unresolved_rows", r.unresolved_rows},
      {"overlapping_instances", r.overlapping_instances},
      {"note", kNogoCountingNote},
      {"distribution", distribution},
      {"instances", instances},
  };
}

std::string decoupling_report_to_csv(const DecouplingReport &r) {
  std::string out = "ep,lhs,rhs,rhs_loose,k_bound,k_norm,commutator_norm,v_norm,w_norm,projector_leak\n";
  for (const auto &row : r.rows) {
    for (double x : {row.ep, row.lhs, row.rhs, row.rhs_loose, row.k_bound, row.k_norm, row.commutator_norm,
                     row.v_norm, row.w_norm}) {
      out += csv_number(x) + ",";
    }
    out += csv_number(row.projector_leak) + "\n";
  }
  return out;
}

std::string fidelity_report_to_csv(const FidelityReport &r) {
  std::string out = "ep,infidelity\n";
  for (const auto &row : r.rows) {
    out += csv_number(row.ep) + "," + csv_number(row.infidelity) + "\n";
  }
  return out;
}

std::string read_text_file(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot read " + path.string());
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json read_json_file(const std::filesystem::path &path) {
  std::string text = read_text_file(path);
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error &e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path &path, const std::string &text) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << text;
}

void write_json_file(const std::filesystem::path &path, const Json &j) { write_text_file(path, j.dump(2) + "\n"); }

}  // namespace gaugepen
