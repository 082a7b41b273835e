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

#include "qi/statespace.hpp"

namespace qi {

// 2x2 complex operator acting on a named pair of target modes.
struct Operator2 {
  Amplitude m00, m01, m10, m11;

  static Operator2 identity();
  Operator2 operator*(const Operator2 &rhs) const;
  Operator2 adjoint() const;
  bool is_unitary(double tol = kNormTol) const;
};

// Beamsplitter of reflectivity cos^2(theta) as a rotation of the (U, D) path
// amplitudes:
//   [ -cos t   sin t ]
//   [  sin t   cos t ]
// with U = (1,0)^T and D = (0,1)^T.
Operator2 rotation(double theta);

// Net effect of n splitter stages on an undisturbed particle:
//   [ -cos(nt)   sin(nt) ]
//   [  sin(nt)   cos(nt) ]
// Note rotation(t) alone is an involution; interleaving mirror_fold() between
// stages is what compounds the angle (see the stage loop in interrogation).
Operator2 rotation_power(double theta, int n);

// Inter-stage mirror pair expressed in the fixed (U, D) basis: diag(-1, 1).
// Each fold reverses the transverse axis, so n splitters with folds between
// them multiply out to rotation_power(theta, n).
Operator2 mirror_fold();

// Applies op to the {a, b} target-mode pair (row/column 0 <-> a, 1 <-> b) on
// both control branches; amplitudes on other modes are untouched. op must be
// unitary and a != b.
JointState apply_mode_pair(const JointState &s, const Operator2 &op,
                           TargetMode a, TargetMode b);

// No-scatter branch of one collision opportunity. A control particle on the
// In path meets a target particle on U and scatters with probability eta;
// the surviving branch keeps all other amplitudes unchanged.
struct CollisionResult {
  JointState surviving;     // sub-normalized no-scatter branch
  double scatter_prob = 0;  // eta * |amp(In,U)|^2
};

CollisionResult collision_channel(const JointState &s, double eta);

}  // namespace qi
