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

#include <map>
#include <stdexcept>
#include <string>

#include "gaugepen/pauli.h"

namespace gaugepen {

/// Raised when a coupling needs an alpha that is missing or too close to zero.
class CalibrationError : public std::runtime_error {
 public:
  explicit CalibrationError(const std::string &message) : std::runtime_error(message) {}
};

/// Ground-space ratios alpha with P0 g P0 = alpha P0, keyed by the unsigned
/// Pauli string of the gauge element g (e.g. "X4 X5").
struct PenaltyCalibration {
  std::string code_id;
  std::map<std::string, double> alphas;
  /// Largest ||P0 g P0 - alpha P0|| seen while measuring.
  double max_residual = 0;

  static std::string key(const PauliOp &g) { return g.unsigned_op().str(); }

  bool contains(const PauliOp &g) const { return alphas.count(key(g)) != 0; }
  void set(const PauliOp &g, double alpha) { alphas[key(g)] = alpha; }
  /// Throws CalibrationError when g was never calibrated.
  double alpha(const PauliOp &g) const;
};

inline double PenaltyCalibration::alpha(const PauliOp &g) const {
  auto it = alphas.find(key(g));
  if (it == alphas.end()) {
    throw CalibrationError("no calibrated alpha for gauge element " + key(g));
  }
  return it->second;
}

}  // namespace gaugepen
