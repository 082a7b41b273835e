// Copyright 2026 The qisim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qi/gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qi/elements.hpp"

namespace qi {

namespace {

QubitStateVector basis_qubits(int j) {
  QubitStateVector q;
  q.amps[j] = 1.0;
  return q;
}

JointState encode_for(const GateSpec &spec, const QubitStateVector &q) {
  return spec.variant == Variant::Azuma ? encode_qubits_azuma(q)
                                        : encode_qubits(q);
}

}  // namespace

double ConditionalGateMatrix::column_norm_squared(int col) const {
  double sum = 0.0;
  for (int row = 0; row < 4; ++row) sum += std::norm(m[row][col]);
  return sum;
}

GateSpec cz_spec(int n, double eta, int crossings) {
  GateSpec spec;
  spec.n_stages = n;
  spec.theta_rule = ThetaRule::PiOverN;
  spec.eta = eta;
  spec.crossings_per_stage = crossings;
  spec.hadamard_sandwich = false;
  spec.variant = Variant::Main;
  spec.validate();
  return spec;
}

GateSpec cnot_spec(int n, double eta, int crossings) {
  GateSpec spec = cz_spec(n, eta, crossings);
  spec.hadamard_sandwich = true;
  return spec;
}

GateSpec azuma_spec(int n, double eta, int crossings) {
  GateSpec spec;
  spec.n_stages = n;
  spec.theta_rule = ThetaRule::PiOver2N;
  spec.eta = eta;
  spec.crossings_per_stage = crossings;
  spec.hadamard_sandwich = false;
  spec.variant = Variant::Azuma;
  spec.validate();
  return spec;
}

QubitStateVector decode_postselected(const GateSpec &spec, const JointState &s,
                                     double *leak_prob) {
  QubitStateVector q;
  double leak = 0.0;
  if (spec.variant == Variant::Azuma) {
    q.amps[0] = s.amp(ControlMode::Out, TargetMode::U);
    q.amps[1] = s.amp(ControlMode::Out, TargetMode::D);
    q.amps[2] = s.amp(ControlMode::In, TargetMode::U);
    q.amps[3] = s.amp(ControlMode::In, TargetMode::D);
    leak = std::norm(s.amp(ControlMode::In, TargetMode::Out0)) +
           std::norm(s.amp(ControlMode::Out, TargetMode::Out0));
  } else {
    q.amps[0] = s.amp(ControlMode::In, TargetMode::Out0);
    q.amps[1] = s.amp(ControlMode::In, TargetMode::D);
    q.amps[2] = s.amp(ControlMode::Out, TargetMode::Out0);
    q.amps[3] = s.amp(ControlMode::Out, TargetMode::D);
    leak = std::norm(s.amp(ControlMode::In, TargetMode::U)) +
           std::norm(s.amp(ControlMode::Out, TargetMode::U));
  }
  if (leak_prob != nullptr) *leak_prob = leak;
  return q;
}

ConditionalGateMatrix conditional_gate_matrix(const GateSpec &spec) {
  spec.validate();
  ConditionalGateMatrix matrix;
  for (int j = 0; j < 4; ++j) {
    ProtocolResult res =
        run_joint_protocol(spec, encode_for(spec, basis_qubits(j)));
    QubitStateVector col = decode_postselected(spec, res.no_scatter_state);
    for (int row = 0; row < 4; ++row) matrix.m[row][j] = col.amps[row];
  }
  return matrix;
}

std::array<TruthTableRow, 4> truth_table(const GateSpec &spec) {
  ConditionalGateMatrix matrix = conditional_gate_matrix(spec);
  std::array<TruthTableRow, 4> rows;
  for (int j = 0; j < 4; ++j) {
    rows[j].basis_input = j;
    rows[j].success_prob = matrix.column_norm_squared(j);
    if (rows[j].success_prob > 0.0) {
      double inv = 1.0 / std::sqrt(rows[j].success_prob);
      for (int row = 0; row < 4; ++row) {
        rows[j].output.amps[row] = inv * matrix.m[row][j];
      }
    }
  }
  return rows;
}

ConditionalGateMatrix ideal_gate_matrix(IdealGate ideal) {
  ConditionalGateMatrix cz;
  cz.m[0][0] = 1.0;
  cz.m[1][1] = 1.0;
  cz.m[2][2] = 1.0;
  cz.m[3][3] = -1.0;
  if (ideal == IdealGate::CZ) return cz;
  // (I (x) R) CZ (I (x) R) with R = rotation(pi/4) on the target qubit.
  Operator2 r = rotation(std::numbers::pi / 4.0);
  std::array<std::array<Amplitude, 4>, 4> wrap{};
  for (int cb = 0; cb < 2; ++cb) {
    wrap[2 * cb + 0][2 * cb + 0] = r.m00;
    wrap[2 * cb + 0][2 * cb + 1] = r.m01;
    wrap[2 * cb + 1][2 * cb + 0] = r.m10;
    wrap[2 * cb + 1][2 * cb + 1] = r.m11;
  }
  auto mul = [](const std::array<std::array<Amplitude, 4>, 4> &a,
                const std::array<std::array<Amplitude, 4>, 4> &b) {
    std::array<std::array<Amplitude, 4>, 4> out{};
    for (int i = 0; i < 4; ++i) {
      for (int k = 0; k < 4; ++k) {
        for (int j = 0; j < 4; ++j) out[i][j] += a[i][k] * b[k][j];
      }
    }
    return out;
  };
  ConditionalGateMatrix cnot;
  cnot.m = mul(wrap, mul(cz.m, wrap));
  return cnot;
}

GateMetrics gate_metrics(const GateSpec &spec, IdealGate ideal) {
  ConditionalGateMatrix actual = conditional_gate_matrix(spec);
  ConditionalGateMatrix target = ideal_gate_matrix(ideal);
  Amplitude trace = 0.0;
  double gram_trace = 0.0;
  for (int row = 0; row < 4; ++row) {
    for (int col = 0; col < 4; ++col) {
      trace += std::conj(target.m[row][col]) * actual.m[row][col];
      gram_trace += std::norm(actual.m[row][col]);
    }
  }
  GateMetrics metrics;
  metrics.raw_process_fidelity = std::norm(trace) / 16.0;
  metrics.postselected_process_fidelity =
      gram_trace > 0.0 ? std::norm(trace) / (4.0 * gram_trace) : 0.0;
  metrics.worst_case_basis_success = actual.column_norm_squared(0);
  for (int j = 1; j < 4; ++j) {
    metrics.worst_case_basis_success =
        std::min(metrics.worst_case_basis_success,
                 actual.column_norm_squared(j));
  }
  return metrics;
}

double entanglement_demo(const GateSpec &spec) {
  if (!spec.hadamard_sandwich) {
    throw std::invalid_argument("entanglement_demo requires a CNOT spec");
  }
  QubitStateVector plus_control;
  plus_control.amps[0] = 1.0 / std::numbers::sqrt2;
  plus_control.amps[2] = 1.0 / std::numbers::sqrt2;
  ProtocolResult res =
      run_joint_protocol(spec, encode_for(spec, plus_control));
  QubitStateVector out = decode_postselected(spec, res.no_scatter_state);
  return concurrence(out.normalized());
}

}  // namespace qi
