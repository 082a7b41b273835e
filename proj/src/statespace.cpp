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

#include "qi/statespace.hpp"

#include <cmath>
#include <stdexcept>

namespace qi {

namespace {

void require_normalized(double norm_sq, const char *what) {
  if (std::abs(norm_sq - 1.0) > kNormTol) {
    throw std::invalid_argument(std::string(what) +
                                ": state is not normalized");
  }
}

}  // namespace

double JointState::norm_squared() const {
  double sum = 0.0;
  for (const auto &a : amps) sum += std::norm(a);
  return sum;
}

bool JointState::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

JointState JointState::normalized() const {
  double n2 = norm_squared();
  if (n2 <= 0.0) {
    throw std::invalid_argument("cannot normalize a zero state");
  }
  double inv = 1.0 / std::sqrt(n2);
  JointState out = *this;
  for (auto &a : out.amps) a *= inv;
  return out;
}

JointState operator+(const JointState &x, const JointState &y) {
  JointState out = x;
  for (std::size_t i = 0; i < kJointDim; ++i) out.amps[i] += y.amps[i];
  return out;
}

JointState operator-(const JointState &x, const JointState &y) {
  JointState out = x;
  for (std::size_t i = 0; i < kJointDim; ++i) out.amps[i] -= y.amps[i];
  return out;
}

JointState operator*(const Amplitude &z, const JointState &s) {
  JointState out = s;
  for (auto &a : out.amps) a *= z;
  return out;
}

Amplitude inner_product(const JointState &bra, const JointState &ket) {
  Amplitude sum = 0.0;
  for (std::size_t i = 0; i < kJointDim; ++i) {
    sum += std::conj(bra.amps[i]) * ket.amps[i];
  }
  return sum;
}

JointState basis_state(ControlMode c, TargetMode t) {
  JointState s;
  s.amps[joint_index(c, t)] = 1.0;
  return s;
}

double QubitStateVector::norm_squared() const {
  double sum = 0.0;
  for (const auto &a : amps) sum += std::norm(a);
  return sum;
}

bool QubitStateVector::is_normalized(double tol) const {
  return std::abs(norm_squared() - 1.0) <= tol;
}

QubitStateVector QubitStateVector::normalized() const {
  double n2 = norm_squared();
  if (n2 <= 0.0) {
    throw std::invalid_argument("cannot normalize a zero state");
  }
  double inv = 1.0 / std::sqrt(n2);
  QubitStateVector out = *this;
  for (auto &a : out.amps) a *= inv;
  return out;
}

JointState encode_qubits(const QubitStateVector &q) {
  require_normalized(q.norm_squared(), "encode_qubits");
  JointState s;
  s.amps[joint_index(ControlMode::In, TargetMode::Out0)] = q.amps[0];
  s.amps[joint_index(ControlMode::In, TargetMode::D)] = q.amps[1];
  s.amps[joint_index(ControlMode::Out, TargetMode::Out0)] = q.amps[2];
  s.amps[joint_index(ControlMode::Out, TargetMode::D)] = q.amps[3];
  return s;
}

QubitStateVector decode_qubits(const JointState &s) {
  double residual = std::norm(s.amp(ControlMode::In, TargetMode::U)) +
                    std::norm(s.amp(ControlMode::Out, TargetMode::U));
  if (residual >= kDecodeResidualTol) {
    throw std::invalid_argument("target not in dual-rail subspace");
  }
  QubitStateVector q;
  q.amps[0] = s.amp(ControlMode::In, TargetMode::Out0);
  q.amps[1] = s.amp(ControlMode::In, TargetMode::D);
  q.amps[2] = s.amp(ControlMode::Out, TargetMode::Out0);
  q.amps[3] = s.amp(ControlMode::Out, TargetMode::D);
  return q;
}

JointState encode_qubits_azuma(const QubitStateVector &q) {
  require_normalized(q.norm_squared(), "encode_qubits_azuma");
  JointState s;
  s.amps[joint_index(ControlMode::Out, TargetMode::U)] = q.amps[0];
  s.amps[joint_index(ControlMode::Out, TargetMode::D)] = q.amps[1];
  s.amps[joint_index(ControlMode::In, TargetMode::U)] = q.amps[2];
  s.amps[joint_index(ControlMode::In, TargetMode::D)] = q.amps[3];
  return s;
}

QubitStateVector decode_qubits_azuma(const JointState &s) {
  double residual = std::norm(s.amp(ControlMode::In, TargetMode::Out0)) +
                    std::norm(s.amp(ControlMode::Out, TargetMode::Out0));
  if (residual >= kDecodeResidualTol) {
    throw std::invalid_argument("target not in interferometer subspace");
  }
  QubitStateVector q;
  q.amps[0] = s.amp(ControlMode::Out, TargetMode::U);
  q.amps[1] = s.amp(ControlMode::Out, TargetMode::D);
  q.amps[2] = s.amp(ControlMode::In, TargetMode::U);
  q.amps[3] = s.amp(ControlMode::In, TargetMode::D);
  return q;
}

double fidelity(const JointState &a, const JointState &b) {
  require_normalized(a.norm_squared(), "fidelity");
  require_normalized(b.norm_squared(), "fidelity");
  return std::norm(inner_product(a, b));
}

double concurrence(const QubitStateVector &q) {
  require_normalized(q.norm_squared(), "concurrence");
  return 2.0 * std::abs(q.amps[0] * q.amps[3] - q.amps[1] * q.amps[2]);
}

}  // namespace qi
