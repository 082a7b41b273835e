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

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qi/elements.hpp"
#include "test_helpers.hpp"

using namespace qi;
using qi::testing::max_amp_diff;
using qi::testing::random_joint_state;

namespace {

double max_entry_diff(const Operator2 &a, const Operator2 &b) {
  return std::max({std::abs(a.m00 - b.m00), std::abs(a.m01 - b.m01),
                   std::abs(a.m10 - b.m10), std::abs(a.m11 - b.m11)});
}

// Independent oracle for the staged closed form: multiply out n splitters
// with the mirror fold between consecutive stages.
Operator2 staged_splitter_product(double theta, int n) {
  Operator2 product = rotation(theta);
  for (int k = 1; k < n; ++k) {
    product = rotation(theta) * (mirror_fold() * product);
  }
  return product;
}

}  // namespace

TEST_SUITE("elements") {

TEST_CASE("rotation matches the splitter matrix at reference angles") {
  Operator2 r0 = rotation(0.0);
  CHECK(r0.m00 == Amplitude(-1.0, 0.0));
  CHECK(r0.m01 == Amplitude(0.0, 0.0));
  CHECK(r0.m10 == Amplitude(0.0, 0.0));
  CHECK(r0.m11 == Amplitude(1.0, 0.0));

  Operator2 r45 = rotation(std::numbers::pi / 4.0);
  double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  CHECK(std::abs(r45.m00 - Amplitude(-inv_sqrt2)) < 1e-15);
  CHECK(std::abs(r45.m01 - Amplitude(inv_sqrt2)) < 1e-15);
  CHECK(std::abs(r45.m10 - Amplitude(inv_sqrt2)) < 1e-15);
  CHECK(std::abs(r45.m11 - Amplitude(inv_sqrt2)) < 1e-15);
}

TEST_CASE("rotation sends D to cos*D + sin*U") {
  double theta = 0.37;
  Operator2 r = rotation(theta);
  // Column for D input: (m01, m11) = (sin t, cos t).
  CHECK(std::abs(r.m01 - Amplitude(std::sin(theta))) < 1e-15);
  CHECK(std::abs(r.m11 - Amplitude(std::cos(theta))) < 1e-15);
}

TEST_CASE("rotation is orthogonal, symmetric, and has determinant -1") {
  std::mt19937_64 eng(11);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  for (int i = 0; i < 100; ++i) {
    Operator2 r = rotation(angle(eng));
    CHECK(r.is_unitary(1e-12));
    CHECK(std::abs(r.m01 - r.m10) < 1e-12);
    Amplitude det = r.m00 * r.m11 - r.m01 * r.m10;
    CHECK(std::abs(det - Amplitude(-1.0)) < 1e-12);
  }
}

TEST_CASE("rotation_power closed form at the gate angles") {
  int n = 16;
  Operator2 swap = rotation_power(std::numbers::pi / (2.0 * n), n);
  CHECK(std::abs(swap.m00) < 1e-12);
  CHECK(std::abs(swap.m01 - Amplitude(1.0)) < 1e-12);
  CHECK(std::abs(swap.m10 - Amplitude(1.0)) < 1e-12);
  CHECK(std::abs(swap.m11) < 1e-12);

  Operator2 flip = rotation_power(std::numbers::pi / n, n);
  CHECK(std::abs(flip.m00 - Amplitude(1.0)) < 1e-12);
  CHECK(std::abs(flip.m01) < 1e-12);
  CHECK(std::abs(flip.m10) < 1e-12);
  CHECK(std::abs(flip.m11 - Amplitude(-1.0)) < 1e-12);

  CHECK_THROWS_AS(rotation_power(0.1, 0), std::invalid_argument);
}

TEST_CASE("rotation_power equals the staged splitter product") {
  CHECK(max_entry_diff(rotation_power(0.3, 7),
                       staged_splitter_product(0.3, 7)) < 1e-12);
  std::mt19937_64 eng(22);
  std::uniform_real_distribution<double> angle(1e-6, std::numbers::pi - 1e-6);
  std::uniform_int_distribution<int> stages(1, 1000);
  for (int i = 0; i < 100; ++i) {
    double theta = angle(eng);
    int n = stages(eng);
    CHECK(max_entry_diff(rotation_power(theta, n),
                         staged_splitter_product(theta, n)) < 1e-10);
  }
}

TEST_CASE("a bare splitter is an involution, the folded stage is not") {
  // rotation(t)^2 = I for every t; the angle only compounds across stages
  // because of the mirror fold.
  double theta = 0.3;
  Operator2 twice = rotation(theta) * rotation(theta);
  CHECK(max_entry_diff(twice, Operator2::identity()) < 1e-15);
  CHECK(max_entry_diff(staged_splitter_product(theta, 2),
                       rotation(2.0 * theta)) < 1e-15);
}

TEST_CASE("apply_mode_pair applies on the right modes and preserves norm") {
  std::mt19937_64 eng(33);
  JointState s = random_joint_state(eng);

  JointState same = apply_mode_pair(s, Operator2::identity(), TargetMode::U,
                                    TargetMode::D);
  CHECK(max_amp_diff(same, s) == 0.0);

  JointState swapped =
      apply_mode_pair(basis_state(ControlMode::In, TargetMode::D),
                      rotation(std::numbers::pi / 2.0), TargetMode::U,
                      TargetMode::D);
  CHECK(max_amp_diff(swapped, basis_state(ControlMode::In, TargetMode::U)) <
        1e-15);

  double theta = 0.81;
  JointState forward =
      apply_mode_pair(s, rotation(theta), TargetMode::U, TargetMode::D);
  CHECK(std::abs(forward.norm_squared() - s.norm_squared()) < 1e-12);
  // rotation is symmetric and orthogonal, so it is its own inverse.
  JointState back = apply_mode_pair(forward, rotation(theta).adjoint(),
                                    TargetMode::U, TargetMode::D);
  CHECK(max_amp_diff(back, s) < 1e-12);
  // Modes outside the pair are untouched.
  CHECK(forward.amp(ControlMode::In, TargetMode::Out0) ==
        s.amp(ControlMode::In, TargetMode::Out0));
  CHECK(forward.amp(ControlMode::Out, TargetMode::Out0) ==
        s.amp(ControlMode::Out, TargetMode::Out0));
}

TEST_CASE("apply_mode_pair rejects equal modes and non-unitary operators") {
  JointState s = basis_state(ControlMode::In, TargetMode::D);
  CHECK_THROWS_AS(
      apply_mode_pair(s, Operator2::identity(), TargetMode::D, TargetMode::D),
      std::invalid_argument);
  Operator2 shrink{0.5, 0.0, 0.0, 0.5};
  CHECK_THROWS_AS(
      apply_mode_pair(s, shrink, TargetMode::U, TargetMode::D),
      std::invalid_argument);
}

TEST_CASE("collision channel on reference states") {
  CollisionResult hit =
      collision_channel(basis_state(ControlMode::In, TargetMode::U), 1.0);
  CHECK(hit.scatter_prob == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(hit.surviving.norm_squared() == doctest::Approx(0.0).epsilon(1e-15));

  JointState bystander = basis_state(ControlMode::Out, TargetMode::U);
  CollisionResult miss = collision_channel(bystander, 1.0);
  CHECK(miss.scatter_prob == 0.0);
  CHECK(max_amp_diff(miss.surviving, bystander) == 0.0);

  JointState partial;
  partial.amps[joint_index(ControlMode::In, TargetMode::U)] = 0.6;
  partial.amps[joint_index(ControlMode::In, TargetMode::D)] = 0.8;
  CollisionResult half = collision_channel(partial, 0.5);
  CHECK(half.scatter_prob == doctest::Approx(0.18).epsilon(1e-15));
  CHECK(std::abs(half.surviving.amp(ControlMode::In, TargetMode::U) -
                 Amplitude(0.6 / std::sqrt(2.0))) < 1e-15);

  CHECK_THROWS_AS(collision_channel(partial, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(collision_channel(partial, 1.1), std::invalid_argument);
}

TEST_CASE("collision channel conserves probability") {
  std::mt19937_64 eng(44);
  std::uniform_real_distribution<double> etas(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    JointState s = random_joint_state(eng);
    double eta = etas(eng);
    CollisionResult r = collision_channel(s, eta);
    CHECK(std::abs(r.surviving.norm_squared() + r.scatter_prob -
                   s.norm_squared()) < 1e-12);
  }
}

TEST_CASE("full-efficiency collision plus renormalization is a projection") {
  std::mt19937_64 eng(55);
  for (int i = 0; i < 20; ++i) {
    JointState s = random_joint_state(eng);
    CollisionResult r = collision_channel(s, 1.0);
    JointState projected = s;
    projected.amps[joint_index(ControlMode::In, TargetMode::U)] = 0.0;
    CHECK(max_amp_diff(r.surviving.normalized(), projected.normalized()) <
          1e-12);
  }
}

}  // TEST_SUITE
