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

#include <filesystem>
#include <string>

#include "json.hpp"

#include "gaugepen/calibration.h"
#include "gaugepen/dynamics.h"
#include "gaugepen/hamiltonian.h"
#include "gaugepen/nogo.h"
#include "gaugepen/spectral.h"
#include "gaugepen/subsystem_code.h"

namespace gaugepen {

using Json = nlohmann::ordered_json;

// Code files: {"n": 6, "generators": ["X0 X1", ...], "labels": {"0": "R1", ...}}.
Json code_to_json(const SubsystemCodeSpec &code);
SubsystemCodeSpec code_from_json(const Json &j);

/// n, k, s, g, generator rank and the derived operators.
Json structure_to_json(const SubsystemCodeSpec &code, const CodeStructure &structure);

// Problem files: {"m": 2, "a": [...], "b": [...], "c": [[...]], "d": [[...]], "yy": [[...]]}.
Json problem_to_json(const ProblemSpec &p);
ProblemSpec problem_from_json(const Json &j);

/// Knots as [{"t": 0.0, "problem": {...}}, ...]; [t, {...}] pairs are accepted on input.
Json schedule_to_json(const Schedule &schedule);
Schedule schedule_from_json(const Json &j);

// Calibration files: {"code_id": "...", "alphas": {"X4 X5": 0.666..., ...}, "max_residual": ...}.
Json calibration_to_json(const PenaltyCalibration &cal);
PenaltyCalibration calibration_from_json(const Json &j);

/// Experiment config. Every field is optional:
/// {"k", "total_time", "steps", "ep_values", "schedule" | "problem", "bath", "rescale", "seed"}.
/// "bath" is "none", "default" or {"omega": w, "strength": s}. Without a
/// problem, a random one is drawn from the seed.
EvolutionConfig evolution_config_from_json(const Json &j);
Json evolution_config_to_json(const EvolutionConfig &cfg);

Json spectrum_to_json(const SpectralResult &r);
Json ground_space_report_to_json(const GroundSpaceReport &r);
Json error_detection_to_json(const ErrorDetectionReport &r);
Json sector_report_to_json(const SectorReport &r);
Json decoupling_report_to_json(const DecouplingReport &r);
Json fidelity_report_to_json(const FidelityReport &r);
Json nogo_report_to_json(const SubsystemCodeSpec &code, const NogoReport &r);
Json scan_report_to_json(const ScanReport &r);

std::string decoupling_report_to_csv(const DecouplingReport &r);
std::string fidelity_report_to_csv(const FidelityReport &r);

/// Throws std::runtime_error when the file cannot be read or parsed.
Json read_json_file(const std::filesystem::path &path);
std::string read_text_file(const std::filesystem::path &path);
/// Pretty-printed with a trailing newline.
void write_json_file(const std::filesystem::path &path, const Json &j);
void write_text_file(const std::filesystem::path &path, const std::string &text);

}  // namespace gaugepen
