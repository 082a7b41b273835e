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

#include <cstdint>
#include <optional>
#include <vector>

#include "qi/statespace.hpp"

namespace qi {

enum class ThetaRule { Explicit, PiOver2N, PiOverN };

// Main: dual-rail qubits, target |0> on the bypass rail.
// Azuma: target |0> enters the interferometer at the upper port.
enum class Variant { Main, Azuma };

// Full parameterization of an N-stage interrogation protocol.
struct GateSpec {
  int n_stages = 1;
  ThetaRule theta_rule = ThetaRule::PiOverN;
  double theta = 0.0;  // used only with ThetaRule::Explicit
  double eta = 1.0;    // scatter efficiency per crossing
  int crossings_per_stage = 1;
  bool hadamard_sandwich = false;  // wrap in two 50% splitters (CNOT wiring)
  Variant variant = Variant::Main;

  double resolved_theta() const;
  int total_checks() const { return n_stages * crossings_per_stage; }
  void validate() const;  // throws std::invalid_argument

  bool operator==(const GateSpec &other) const = default;
};

struct ProtocolResult {
  JointState no_scatter_state;  // sub-normalized conditional state
  double success_prob = 0.0;    // squared norm of no_scatter_state
  // One entry per collision check, n_stages * crossings_per_stage in total;
  // entry k is the probability of first scattering at check k+1.
  std::vector<double> stage_scatter_probs;
};

// Single-particle interrogation of a fixed obstruction. The target enters on
// the lower path D; the control either blocks the upper path (bomb present)
// or is absent. Any finite theta is accepted, including 0.
ProtocolResult run_classical_qi(int n, double theta, bool bomb_present,
                                double eta);

// Exact conditional (no-scatter) evolution of an arbitrary normalized joint
// input. Per stage: mirror fold (from stage 2 on), splitter rotation on
// (U, D), then crossings_per_stage collision checks. With hadamard_sandwich,
// rotation(pi/4) is applied on (Out0, D) before stage 1 and after stage N;
// the sandwich splitters have no collision checks.
ProtocolResult run_joint_protocol(const GateSpec &spec,
                                  const JointState &input);

struct TrajectoryOutcome {
  bool scattered = false;
  std::optional<int> scatter_check;       // 1-based collision-check index
  std::optional<JointState> final_state;  // normalized, present iff survived

  bool operator==(const TrajectoryOutcome &other) const = default;
};

// Single stochastic unraveling of the protocol's measurement record. At each
// check, scatter fires with the conditional probability eta*|amp(In,U)|^2 /
// norm^2; otherwise the no-scatter update is applied and the state is
// renormalized. Bit-reproducible for fixed (spec, input, seed).
TrajectoryOutcome sample_trajectory(const GateSpec &spec,
                                    const JointState &input,
                                    std::uint64_t seed);

// Outcome tallies over independent trajectories. Counts are exact; the
// frequencies sum to 1. All no-scatter trajectories share one final state
// (the record "no scatter anywhere" determines it), stored in terminal_state.
struct FrequencyTable {
  std::vector<std::int64_t> scatter_counts;  // index k: scatter at check k+1
  std::int64_t no_scatter_count = 0;
  std::int64_t total = 0;
  std::optional<JointState> terminal_state;

  double scatter_frequency(int check) const;  // check is 1-based
  double no_scatter_frequency() const;
};

// Runs n_samples trajectories; trajectory i uses the stream seeded with
// trajectory_seed(seed, i).
FrequencyTable estimate_frequencies(const GateSpec &spec,
                                    const JointState &input,
                                    std::int64_t n_samples,
                                    std::uint64_t seed);

}  // namespace qi
