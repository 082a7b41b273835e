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
#include "qi/interrogation.hpp"
#include "test_helpers.hpp"

using namespace qi;
using qi::testing::max_amp_diff;
using qi::testing::random_qubits;

namespace {

// Frozen with 30-digit arithmetic from the closed forms.
constexpr double kCos20Pi20 = 0.78054606978114017;    // cos^20(pi/20)
constexpr double kSin2Pi20 = 0.024471741852423214;    // sin^2(pi/20)
constexpr double kCos100Pi50 = 0.82076199854628227;   // cos^100(pi/50)

GateSpec main_spec(int n, ThetaRule rule, double eta, int crossings = 1,
                   bool sandwich = false) {
  GateSpec spec;
  spec.n_stages = n;
  spec.theta_rule = rule;
  spec.eta = eta;
  spec.crossings_per_stage = crossings;
  spec.hadamard_sandwich = sandwich;
  return spec;
}

QubitStateVector basis_qubits(int j) {
  QubitStateVector q;
  q.amps[j] = 1.0;
  return q;
}

}  // namespace

TEST_SUITE("interrogation") {

TEST_CASE("gate spec validation") {
  GateSpec spec = main_spec(50, ThetaRule::PiOverN, 1.0);
  CHECK_NOTHROW(spec.validate());
  CHECK(spec.resolved_theta() ==
        doctest::Approx(std::numbers::pi / 50).epsilon(1e-15));

  spec.n_stages = 0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.n_stages = 1;  // theta = pi is still legal
  CHECK_NOTHROW(spec.validate());

  spec.eta = 1.5;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.eta = 1.0;
  spec.crossings_per_stage = 0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.crossings_per_stage = 1;

  spec.theta_rule = ThetaRule::Explicit;
  spec.theta = 0.0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

  spec = main_spec(10, ThetaRule::PiOver2N, 1.0);
  spec.variant = Variant::Azuma;
  spec.hadamard_sandwich = true;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("classical interrogation with the bomb present") {
  ProtocolResult res =
      run_classical_qi(10, std::numbers::pi / 20.0, true, 1.0);
  CHECK(std::abs(res.success_prob - kCos20Pi20) < 1e-12);
  CHECK(std::abs(res.success_prob -
                 std::pow(std::cos(std::numbers::pi / 20.0), 20)) < 1e-12);
  // Conditional exit on the lower port.
  JointState normalized = res.no_scatter_state.normalized();
  CHECK(std::abs(std::abs(normalized.amp(ControlMode::In, TargetMode::D)) -
                 1.0) < 1e-12);
  CHECK(res.stage_scatter_probs.size() == 10);
  CHECK(std::abs(res.stage_scatter_probs[0] - kSin2Pi20) < 1e-12);
}

TEST_CASE("classical interrogation without the bomb exits on the upper port") {
  ProtocolResult res =
      run_classical_qi(10, std::numbers::pi / 20.0, false, 1.0);
  CHECK(std::abs(res.success_prob - 1.0) < 1e-12);
  CHECK(std::abs(std::norm(res.no_scatter_state.amp(ControlMode::Out,
                                                    TargetMode::U)) -
                 1.0) < 1e-12);
  // Final state is the closed-form free evolution of the D input.
  Operator2 total = rotation_power(std::numbers::pi / 20.0, 10);
  CHECK(std::abs(res.no_scatter_state.amp(ControlMode::Out, TargetMode::U) -
                 total.m01) < 1e-12);
  CHECK(std::abs(res.no_scatter_state.amp(ControlMode::Out, TargetMode::D) -
                 total.m11) < 1e-12);
}

TEST_CASE("classical interrogation with theta zero never reaches the bomb") {
  ProtocolResult res = run_classical_qi(25, 0.0, true, 1.0);
  CHECK(std::abs(res.success_prob - 1.0) < 1e-12);
  CHECK(std::abs(std::norm(res.no_scatter_state.amp(ControlMode::In,
                                                    TargetMode::D)) -
                 1.0) < 1e-12);
}

TEST_CASE("classical success matches the closed form across stage counts") {
  for (int n : {1, 2, 5, 10, 20, 50, 100}) {
    double theta = std::numbers::pi / (2.0 * n);
    ProtocolResult res = run_classical_qi(n, theta, true, 1.0);
    CHECK(std::abs(res.success_prob - std::pow(std::cos(theta), 2 * n)) <
          1e-12);
  }
}

TEST_CASE("joint protocol reproduces the controlled sign flip") {
  GateSpec spec = main_spec(50, ThetaRule::PiOverN, 1.0);

  ProtocolResult r11 = run_joint_protocol(spec, encode_qubits(basis_qubits(3)));
  CHECK(std::abs(r11.success_prob - 1.0) < 1e-12);
  CHECK(max_amp_diff(r11.no_scatter_state,
                     Amplitude(-1.0) * encode_qubits(basis_qubits(3))) <
        1e-12);

  ProtocolResult r01 = run_joint_protocol(spec, encode_qubits(basis_qubits(1)));
  CHECK(std::abs(r01.success_prob - kCos100Pi50) < 1e-12);
  JointState direction = r01.no_scatter_state.normalized();
  CHECK(std::abs(direction.amp(ControlMode::In, TargetMode::D) -
                 Amplitude(1.0)) < 1e-10);

  for (int j : {0, 2}) {
    ProtocolResult r =
        run_joint_protocol(spec, encode_qubits(basis_qubits(j)));
    CHECK(std::abs(r.success_prob - 1.0) < 1e-12);
    CHECK(max_amp_diff(r.no_scatter_state, encode_qubits(basis_qubits(j))) <
          1e-12);
  }
}

TEST_CASE("joint protocol rejects non-normalized input") {
  GateSpec spec = main_spec(10, ThetaRule::PiOverN, 1.0);
  JointState half = Amplitude(0.5) * basis_state(ControlMode::In, TargetMode::D);
  CHECK_THROWS_AS(run_joint_protocol(spec, half), std::invalid_argument);
}

TEST_CASE("probability bookkeeping: success plus scatters is one") {
  std::mt19937_64 eng(202);
  std::uniform_real_distribution<double> etas(0.0, 1.0);
  std::uniform_int_distribution<int> stages(1, 60);
  for (int i = 0; i < 25; ++i) {
    GateSpec spec = main_spec(stages(eng), ThetaRule::PiOverN, etas(eng),
                              1 + (i % 3), i % 2 == 0);
    ProtocolResult res =
        run_joint_protocol(spec, encode_qubits(random_qubits(eng)));
    double total = res.success_prob;
    for (double p : res.stage_scatter_probs) total += p;
    CHECK(std::abs(total - 1.0) < 1e-10);
    CHECK(static_cast<int>(res.stage_scatter_probs.size()) ==
          spec.total_checks());
    CHECK(std::abs(res.success_prob -
                   res.no_scatter_state.norm_squared()) < 1e-12);
  }
}

TEST_CASE("the conditional map is linear") {
  GateSpec spec = main_spec(20, ThetaRule::PiOverN, 0.7, 1, true);
  std::array<JointState, 4> columns;
  for (int j = 0; j < 4; ++j) {
    columns[j] =
        run_joint_protocol(spec, encode_qubits(basis_qubits(j)))
            .no_scatter_state;
  }
  std::mt19937_64 eng(303);
  for (int i = 0; i < 20; ++i) {
    QubitStateVector q = random_qubits(eng);
    JointState expected;
    for (int j = 0; j < 4; ++j) expected = expected + q.amps[j] * columns[j];
    JointState actual =
        run_joint_protocol(spec, encode_qubits(q)).no_scatter_state;
    CHECK(max_amp_diff(actual, expected) < 1e-10);
  }
}

TEST_CASE("repeated crossings equal one crossing at compounded efficiency") {
  std::mt19937_64 eng(404);
  std::uniform_real_distribution<double> etas(0.0, 1.0);
  std::uniform_int_distribution<int> stages(1, 64);
  for (int i = 0; i < 20; ++i) {
    int n = stages(eng);
    double eta = etas(eng);
    QubitStateVector q = random_qubits(eng);
    GateSpec twice = main_spec(n, ThetaRule::PiOverN, eta, 2, i % 2 == 0);
    GateSpec once = twice;
    once.crossings_per_stage = 1;
    once.eta = 1.0 - (1.0 - eta) * (1.0 - eta);
    JointState a =
        run_joint_protocol(twice, encode_qubits(q)).no_scatter_state;
    JointState b = run_joint_protocol(once, encode_qubits(q)).no_scatter_state;
    CHECK(max_amp_diff(a, b) < 1e-12);
  }
}

TEST_CASE("zeno limit: success grows with the stage count") {
  double previous = 0.0;
  for (int n = 4; n <= 4096; ++n) {
    GateSpec spec = main_spec(n, ThetaRule::PiOverN, 1.0);
    ProtocolResult res =
        run_joint_protocol(spec, encode_qubits(basis_qubits(1)));
    CHECK(res.success_prob > previous);
    if (n >= 64) {
      double bound = 1.0 - std::numbers::pi * std::numbers::pi / n - 1e-6;
      CHECK(res.success_prob > bound);
    }
    previous = res.success_prob;
  }
}

TEST_CASE("trajectories are reproducible and respect absent controls") {
  GateSpec spec = main_spec(10, ThetaRule::PiOver2N, 1.0);
  JointState input = basis_state(ControlMode::In, TargetMode::D);
  TrajectoryOutcome a = sample_trajectory(spec, input, 7777);
  TrajectoryOutcome b = sample_trajectory(spec, input, 7777);
  CHECK(a == b);

  JointState no_bomb = basis_state(ControlMode::Out, TargetMode::D);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    TrajectoryOutcome out = sample_trajectory(spec, no_bomb, seed);
    CHECK_FALSE(out.scattered);
  }
}

TEST_CASE("zero efficiency never scatters") {
  GateSpec spec = main_spec(12, ThetaRule::PiOver2N, 0.0);
  JointState input = basis_state(ControlMode::In, TargetMode::D);
  FrequencyTable table = estimate_frequencies(spec, input, 500, 42);
  CHECK(table.no_scatter_count == 500);
}

TEST_CASE("a single sample gives a single unit-frequency outcome") {
  GateSpec spec = main_spec(10, ThetaRule::PiOver2N, 1.0);
  JointState input = basis_state(ControlMode::In, TargetMode::D);
  FrequencyTable table = estimate_frequencies(spec, input, 1, 5);
  std::int64_t total = table.no_scatter_count;
  for (std::int64_t c : table.scatter_counts) total += c;
  CHECK(total == 1);
  CHECK(table.total == 1);
}

TEST_CASE("sampled frequencies track the exact probabilities") {
  const std::int64_t samples = 100000;
  GateSpec spec = main_spec(10, ThetaRule::PiOver2N, 1.0);
  JointState input = basis_state(ControlMode::In, TargetMode::D);
  ProtocolResult exact = run_joint_protocol(spec, input);
  FrequencyTable table = estimate_frequencies(spec, input, samples, 20260809);

  CHECK(std::abs(table.scatter_frequency(1) - kSin2Pi20) <
        3.0 * std::sqrt(kSin2Pi20 * (1.0 - kSin2Pi20) / samples));
  auto within_3_sigma = [&](double freq, double p) {
    double sigma = std::sqrt(std::max(p * (1.0 - p), 1e-300) / samples);
    return std::abs(freq - p) <= 3.0 * sigma;
  };
  for (int check = 1; check <= spec.total_checks(); ++check) {
    CHECK(within_3_sigma(table.scatter_frequency(check),
                         exact.stage_scatter_probs[check - 1]));
  }
  CHECK(within_3_sigma(table.no_scatter_frequency(), exact.success_prob));
  // Every no-scatter record collapses onto the same conditional state.
  REQUIRE(table.terminal_state.has_value());
  CHECK(max_amp_diff(*table.terminal_state,
                     exact.no_scatter_state.normalized()) < 1e-12);
}

TEST_CASE("sampling agrees with the exact engine on random specs") {
  const std::int64_t samples = 100000;
  std::mt19937_64 eng(515);
  std::uniform_real_distribution<double> etas(0.2, 1.0);
  std::uniform_int_distribution<int> stages(2, 50);
  for (int trial = 0; trial < 3; ++trial) {
    GateSpec spec = main_spec(stages(eng), ThetaRule::PiOverN, etas(eng),
                              1 + trial % 2, trial == 1);
    JointState input = encode_qubits(random_qubits(eng));
    ProtocolResult exact = run_joint_protocol(spec, input);
    FrequencyTable table =
        estimate_frequencies(spec, input, samples, 1000 + trial);
    for (int check = 1; check <= spec.total_checks(); ++check) {
      double p = exact.stage_scatter_probs[check - 1];
      double sigma = std::sqrt(std::max(p * (1.0 - p), 1e-300) / samples);
      CHECK(std::abs(table.scatter_frequency(check) - p) <=
            std::max(3.0 * sigma, 1e-9));
    }
    double p = exact.success_prob;
    double sigma = std::sqrt(p * (1.0 - p) / samples);
    CHECK(std::abs(table.no_scatter_frequency() - p) <= 3.0 * sigma + 1e-9);
  }
}

}  // TEST_SUITE
