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

#include "gaugepen/hamiltonian.h"

#include <algorithm>
#include <cmath>

#include "gaugepen/bacon_shor.h"

namespace gaugepen {

namespace {

void check_square(const Eigen::MatrixXd &m, size_t size, const char *name) {
  if (static_cast<size_t>(m.rows()) != size || static_cast<size_t>(m.cols()) != size) {
    throw std::invalid_argument(std::string("coupling matrix ") + name + " must be " + std::to_string(size) + "x" +
                                std::to_string(size));
  }
  for (size_t i = 0; i < size; ++i) {
    if (m(i, i) != 0.0) {
      throw std::invalid_argument(std::string("coupling matrix ") + name + " has a nonzero diagonal");
    }
    for (size_t j = i + 1; j < size; ++j) {
      if (m(i, j) != m(j, i)) {
        throw std::invalid_argument(std::string("coupling matrix ") + name + " is not symmetric");
      }
    }
  }
}

void check_size(const ProblemSpec &p, size_t k) {
  p.validate();
  if (p.m != 2 * k) {
    throw std::invalid_argument("problem has " + std::to_string(p.m) + " logical qubits, the k=" +
                                std::to_string(k) + " code encodes " + std::to_string(2 * k));
  }
}

PauliOp pair_op(size_t n, size_t a, size_t b, char axis) {
  return PauliOp::single(n, a, axis) * PauliOp::single(n, b, axis);
}

/// Calls fn(i, j, type, value) for every nonzero coupling with i < j.
template <typename Fn>
void for_each_coupling(const ProblemSpec &p, Fn &&fn) {
  for (size_t i = 0; i < p.m; ++i) {
    for (size_t j = i + 1; j < p.m; ++j) {
      if (p.c(i, j) != 0.0) {
        fn(i, j, 'X', p.c(i, j));
      }
      if (p.d(i, j) != 0.0) {
        fn(i, j, 'Z', p.d(i, j));
      }
      if (p.yy && (*p.yy)(i, j) != 0.0) {
        fn(i, j, 'Y', (*p.yy)(i, j));
      }
    }
  }
}

PauliOp bare_logical(const std::vector<PauliPair> &logicals, size_t i, char type) {
  switch (type) {
    case 'X':
      return logicals[i].first;
    case 'Z':
      return logicals[i].second;
    case 'Y':
      // Y = i X Z.
      return PauliOp(logicals[i].first.num_qubits()).with_phase(1) * logicals[i].first * logicals[i].second;
  }
  throw std::invalid_argument(std::string("unknown Pauli type '") + type + "'");
}

}  // namespace

PauliSum penalty_hamiltonian(const SubsystemCodeSpec &code) {
  code.validate();
  PauliSum h(code.n);
  for (const auto &g : code.gauge_generators) {
    if (!g.is_x_type() && !g.is_z_type()) {
      throw std::invalid_argument("generator " + g.str() +
                                  " is neither X-type nor Z-type; the penalty needs a CSS generating set");
    }
    h.add(-1.0, g);
  }
  return h;
}

ProblemSpec ProblemSpec::zero(size_t m) {
  ProblemSpec p;
  p.m = m;
  p.a = Eigen::VectorXd::Zero(m);
  p.b = Eigen::VectorXd::Zero(m);
  p.c = Eigen::MatrixXd::Zero(m, m);
  p.d = Eigen::MatrixXd::Zero(m, m);
  return p;
}

ProblemSpec ProblemSpec::random(size_t m, std::mt19937_64 &rng, bool with_yy) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  ProblemSpec p = zero(m);
  for (size_t i = 0; i < m; ++i) {
    p.a(i) = u(rng);
    p.b(i) = u(rng);
  }
  auto fill = [&](Eigen::MatrixXd &mat) {
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = i + 1; j < m; ++j) {
        mat(i, j) = mat(j, i) = u(rng);
      }
    }
  };
  fill(p.c);
  fill(p.d);
  if (with_yy) {
    p.yy = Eigen::MatrixXd::Zero(m, m);
    fill(*p.yy);
  }
  return p;
}

void ProblemSpec::validate() const {
  if (static_cast<size_t>(a.size()) != m || static_cast<size_t>(b.size()) != m) {
    throw std::invalid_argument("field vectors a and b must have length m=" + std::to_string(m));
  }
  check_square(c, m, "c");
  check_square(d, m, "d");
  if (yy) {
    check_square(*yy, m, "yy");
  }
}

bool ProblemSpec::has_couplings() const {
  bool any = false;
  for_each_coupling(*this, [&](size_t, size_t, char, double) { any = true; });
  return any;
}

ProblemSpec interpolate(const ProblemSpec &p, const ProblemSpec &q, double s) {
  p.validate();
  q.validate();
  if (p.m != q.m) {
    throw std::invalid_argument("cannot interpolate problems of different sizes");
  }
  ProblemSpec out = ProblemSpec::zero(p.m);
  out.a = (1 - s) * p.a + s * q.a;
  out.b = (1 - s) * p.b + s * q.b;
  out.c = (1 - s) * p.c + s * q.c;
  out.d = (1 - s) * p.d + s * q.d;
  if (p.yy || q.yy) {
    Eigen::MatrixXd zero = Eigen::MatrixXd::Zero(p.m, p.m);
    out.yy = (1 - s) * p.yy.value_or(zero) + s * q.yy.value_or(zero);
  }
  return out;
}

void validate_schedule(const Schedule &schedule) {
  if (schedule.empty()) {
    throw std::invalid_argument("schedule needs at least one knot");
  }
  for (size_t i = 0; i < schedule.size(); ++i) {
    schedule[i].spec.validate();
    if (schedule[i].spec.m != schedule[0].spec.m) {
      throw std::invalid_argument("schedule knots have different logical sizes");
    }
    if (i > 0 && !(schedule[i].t > schedule[i - 1].t)) {
      throw std::invalid_argument("schedule times must be strictly increasing");
    }
  }
}

ProblemSpec problem_at(const Schedule &schedule, double t) {
  validate_schedule(schedule);
  if (t <= schedule.front().t) {
    return schedule.front().spec;
  }
  if (t >= schedule.back().t) {
    return schedule.back().spec;
  }
  auto hi = std::upper_bound(schedule.begin(), schedule.end(), t,
                             [](double value, const ScheduleKnot &knot) { return value < knot.t; });
  auto lo = hi - 1;
  return interpolate(lo->spec, hi->spec, (t - lo->t) / (hi->t - lo->t));
}

PauliSum bare_encoded_hamiltonian(const ProblemSpec &p, size_t k) {
  check_size(p, k);
  FamilyLayout lay(k);
  auto logicals = family_logicals(k);
  PauliSum h(lay.num_qubits());
  for (size_t i = 0; i < p.m; ++i) {
    h.add(p.a(i), logicals[i].first);
    h.add(p.b(i), logicals[i].second);
  }
  for_each_coupling(p, [&](size_t i, size_t j, char type, double value) {
    h.add(value, bare_logical(logicals, i, type) * bare_logical(logicals, j, type));
  });
  return h;
}

GaugeResidue coupling_residue(size_t k, size_t i, size_t j, char type) {
  FamilyLayout lay(k);
  if (i >= lay.num_logical() || j >= lay.num_logical() || i == j) {
    throw std::invalid_argument("coupling indices out of range");
  }
  size_t n = lay.num_qubits();
  auto logicals = family_logicals(k);
  GaugeResidue r{i, j, type, pair_op(n, lay.b(i), lay.b(j), type), PauliOp(n), PauliOp(n)};
  r.bare = bare_logical(logicals, i, type) * bare_logical(logicals, j, type);
  switch (type) {
    case 'X':
      r.residue = pair_op(n, lay.l(i), lay.l(j), 'X');
      break;
    case 'Z':
      r.residue = pair_op(n, lay.r(i), lay.r(j), 'Z');
      break;
    case 'Y':
      r.residue = pair_op(n, lay.l(i), lay.l(j), 'X') * pair_op(n, lay.r(i), lay.r(j), 'Z');
      break;
    default:
      throw std::invalid_argument(std::string("unknown coupling type '") + type + "'");
  }
  if (r.bare * r.residue != r.physical) {
    throw std::logic_error("physical term " + r.physical.str() + " is not bare * residue");
  }
  if (!in_gauge_group(family_code(k), r.residue)) {
    throw std::logic_error("residue " + r.residue.str() + " is not a gauge element");
  }
  return r;
}

std::vector<GaugeResidue> gauge_residues(const ProblemSpec &p, size_t k) {
  check_size(p, k);
  std::vector<GaugeResidue> out;
  for_each_coupling(p, [&](size_t i, size_t j, char type, double) { out.push_back(coupling_residue(k, i, j, type)); });
  return out;
}

PauliSum physical_encoded_hamiltonian(const ProblemSpec &p, size_t k, const PenaltyCalibration &cal,
                                      CouplingScale scale, double alpha_floor) {
  check_size(p, k);
  FamilyLayout lay(k);
  size_t n = lay.num_qubits();
  PauliSum h(n);
  for (size_t i = 0; i < p.m; ++i) {
    h.add(p.a(i), pair_op(n, lay.l(i), lay.b(i), 'X'));
    h.add(p.b(i), pair_op(n, lay.b(i), lay.r(i), 'Z'));
  }
  for_each_coupling(p, [&](size_t i, size_t j, char type, double value) {
    PauliOp physical = pair_op(n, lay.b(i), lay.b(j), type);
    if (scale == CouplingScale::kNone) {
      h.add(value, physical);
      return;
    }
    GaugeResidue r = coupling_residue(k, i, j, type);
    double alpha = cal.alpha(r.residue);
    if (!(std::abs(alpha) >= alpha_floor)) {
      throw CalibrationError("alpha for " + PenaltyCalibration::key(r.residue) + " is " + std::to_string(alpha) +
                             ", below the floor " + std::to_string(alpha_floor));
    }
    h.add(value / alpha, physical);
  });
  return h;
}

BathSpec BathSpec::none() {
  BathSpec b;
  b.h_bath = PauliSum(0);
  return b;
}

BathSpec BathSpec::single_qubit(size_t n_system, double omega, double strength) {
  BathSpec b;
  b.n_bath = 1;
  b.h_bath = PauliSum(1);
  b.h_bath.add(omega, PauliOp::single(1, 0, 'Z'));
  for (size_t q = 0; q < n_system; ++q) {
    b.couplings.push_back({q, 'X', PauliOp::single(1, 0, 'X'), strength});
    b.couplings.push_back({q, 'Z', PauliOp::single(1, 0, 'Y'), strength});
  }
  return b;
}

void BathSpec::validate(size_t n_system) const {
  if (h_bath.num_qubits() != n_bath) {
    throw std::invalid_argument("bath Hamiltonian acts on the wrong number of qubits");
  }
  for (const auto &c : couplings) {
    if (c.system_qubit >= n_system) {
      throw std::invalid_argument("bath coupling targets system qubit " + std::to_string(c.system_qubit) +
                                  " of " + std::to_string(n_system));
    }
    if (c.system_axis != 'X' && c.system_axis != 'Y' && c.system_axis != 'Z') {
      throw std::invalid_argument("bath coupling axis must be X, Y or Z");
    }
    if (c.bath_op.num_qubits() != n_bath || !c.bath_op.is_hermitian()) {
      throw std::invalid_argument("bath operator " + c.bath_op.str() + " must be Hermitian on the bath qubits");
    }
  }
}

PauliSum bath_hamiltonian(const BathSpec &bath, size_t n_system) {
  bath.validate(n_system);
  return bath.h_bath.embedded(n_system + bath.n_bath, n_system);
}

PauliSum bath_coupling_hamiltonian(const BathSpec &bath, size_t n_system) {
  bath.validate(n_system);
  size_t total = n_system + bath.n_bath;
  PauliSum h(total);
  for (const auto &c : bath.couplings) {
    BitVector x(total), z(total);
    x.assign_range(n_system, c.bath_op.x_bits());
    z.assign_range(n_system, c.bath_op.z_bits());
    PauliOp on_bath(std::move(x), std::move(z), c.bath_op.phase());
    h.add(c.strength, PauliOp::single(total, c.system_qubit, c.system_axis) * on_bath);
  }
  return h;
}

PauliSum assemble_total(const PauliSum &system, double ep, const PauliSum &penalty, const BathSpec &bath) {
  if (system.num_qubits() != penalty.num_qubits()) {
    throw std::invalid_argument("system and penalty Hamiltonians act on different qubit counts");
  }
  size_t n_system = system.num_qubits();
  size_t total = n_system + bath.n_bath;
  PauliSum h = system.embedded(total, 0);
  h += penalty.scaled(ep).embedded(total, 0);
  h += bath_hamiltonian(bath, n_system);
  h += bath_coupling_hamiltonian(bath, n_system);
  return h;
}

}  // namespace gaugepen
