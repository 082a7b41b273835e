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

#include "qi/elements.hpp"

#include <cmath>
#include <stdexcept>

namespace qi {

Operator2 Operator2::identity() { return {1.0, 0.0, 0.0, 1.0}; }

Operator2 Operator2::operator*(const Operator2 &rhs) const {
  return {m00 * rhs.m00 + m01 * rhs.m10, m00 * rhs.m01 + m01 * rhs.m11,
          m10 * rhs.m00 + m11 * rhs.m10, m10 * rhs.m01 + m11 * rhs.m11};
}

Operator2 Operator2::adjoint() const {
  return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
}

bool Operator2::is_unitary(double tol) const {
  Operator2 p = adjoint() * (*this);
  return std::abs(p.m00 - 1.0) <= tol && std::abs(p.m11 - 1.0) <= tol &&
         std::abs(p.m01) <= tol && std::abs(p.m10) <= tol;
}

Operator2 rotation(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("rotation: theta must be finite");
  }
  double c = std::cos(theta);
  double s = std::sin(theta);
  return {-c, s, s, c};
}

Operator2 rotation_power(double theta, int n) {
  if (n < 1) {
    throw std::invalid_argument("rotation_power: n must be >= 1");
  }
  return rotation(static_cast<double>(n) * theta);
}

Operator2 mirror_fold() { return {-1.0, 0.0, 0.0, 1.0}; }

JointState apply_mode_pair(const JointState &s, const Operator2 &op,
                           TargetMode a, TargetMode b) {
  if (a == b) {
    throw std::invalid_argument("apply_mode_pair: modes must differ");
  }
  if (!op.is_unitary()) {
    throw std::invalid_argument("apply_mode_pair: operator is not unitary");
  }
  JointState out = s;
  for (ControlMode c : {ControlMode::In, ControlMode::Out}) {
    Amplitude va = s.amp(c, a);
    Amplitude vb = s.amp(c, b);
    out.amps[joint_index(c, a)] = op.m00 * va + op.m01 * vb;
    out.amps[joint_index(c, b)] = op.m10 * va + op.m11 * vb;
  }
  return out;
}

CollisionResult collision_channel(const JointState &s, double eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("collision_channel: eta must lie in [0, 1]");
  }
  CollisionResult result;
  result.surviving = s;
  std::size_t hot = joint_index(ControlMode::In, TargetMode::U);
  result.scatter_prob = eta * std::norm(s.amps[hot]);
  result.surviving.amps[hot] *= std::sqrt(1.0 - eta);
  return result;
}

}  // namespace qi
