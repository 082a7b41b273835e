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

#pragma once

#include <array>
#include <complex>
#include <cstddef>

namespace qi {

using Amplitude = std::complex<double>;

// Tolerance for normalization and unitarity checks.
inline constexpr double kNormTol = 1e-12;

// Squared-amplitude threshold above which a mode outside the dual-rail code
// counts as occupied when decoding back to qubits.
inline constexpr double kDecodeResidualTol = 1e-9;

// Position of the control particle: In = upper setup path (the |0>_C rail),
// Out = outside the setup (the |1>_C rail).
enum class ControlMode : int { In = 0, Out = 1 };

// Position of the target particle: Out0 = bypass rail that never enters the
// staged interferometer (the |0>_T rail); U and D are the upper and lower
// internal paths. D doubles as the |1>_T rail at input and output.
enum class TargetMode : int { Out0 = 0, U = 1, D = 2 };

inline constexpr std::size_t kJointDim = 6;

// Fixed basis order: (In,Out0),(In,U),(In,D),(Out,Out0),(Out,U),(Out,D).
constexpr std::size_t joint_index(ControlMode c, TargetMode t) {
  return 3 * static_cast<std::size_t>(c) + static_cast<std::size_t>(t);
}

// Joint control-target amplitude vector over the six mode pairs. States may
// be sub-normalized: after post-selection the squared norm is the probability
// of the kept branch.
struct JointState {
  std::array<Amplitude, kJointDim> amps{};

  Amplitude amp(ControlMode c, TargetMode t) const {
    return amps[joint_index(c, t)];
  }
  double norm_squared() const;
  bool is_normalized(double tol = kNormTol) const;
  JointState normalized() const;  // throws on a numerically zero state

  bool operator==(const JointState &other) const = default;
};

JointState operator+(const JointState &x, const JointState &y);
JointState operator-(const JointState &x, const JointState &y);
JointState operator*(const Amplitude &z, const JointState &s);

Amplitude inner_product(const JointState &bra, const JointState &ket);

// Unit state with amplitude 1 on (c, t).
JointState basis_state(ControlMode c, TargetMode t);

// Two-qubit amplitude vector in the computational basis |00>,|01>,|10>,|11>,
// control qubit first.
struct QubitStateVector {
  std::array<Amplitude, 4> amps{};

  double norm_squared() const;
  bool is_normalized(double tol = kNormTol) const;
  QubitStateVector normalized() const;

  bool operator==(const QubitStateVector &other) const = default;
};

// Dual-rail embedding: |0>_C -> In, |1>_C -> Out, |0>_T -> Out0, |1>_T -> D.
// The input must be normalized.
JointState encode_qubits(const QubitStateVector &q);

// Inverse of encode_qubits. Throws if the state carries appreciable amplitude
// on the internal U path; the output is not renormalized.
QubitStateVector decode_qubits(const JointState &s);

// Alternate embedding where the target enters the interferometer directly
// and the control roles are swapped: |0>_C -> Out, |1>_C -> In,
// |0>_T -> U, |1>_T -> D. The bypass rail Out0 is unused.
JointState encode_qubits_azuma(const QubitStateVector &q);
QubitStateVector decode_qubits_azuma(const JointState &s);

// |<a|b>|^2 for normalized states.
double fidelity(const JointState &a, const JointState &b);

// Two-qubit pure-state concurrence 2|a00*a11 - a01*a10| of a normalized
// state; 0 for product states, 1 for Bell states.
double concurrence(const QubitStateVector &q);

}  // namespace qi
