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

#include "qi/interrogation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qi/elements.hpp"
#include "qi/rng.hpp"

namespace qi {

namespace {

void require_normalized_input(const JointState &s, const char *what) {
  if (!s.is_normalized()) {
    throw std::invalid_argument(std::string(what) +
                                ": input state is not normalized");
  }
}

ProtocolResult run_stage_loop(JointState state, int n_stages, double theta,
                              double eta, int crossings) {
  const Operator2 splitter = rotation(theta);
  const Operator2 fold = mirror_fold();
  ProtocolResult result;
  result.stage_scatter_probs.reserve(
      static_cast<std::size_t>(n_stages) * crossings);
  for (int k = 0; k < n_stages; ++k) {
    if (k > 0) {
      state = apply_mode_pair(state, fold, TargetMode::U, TargetMode::D);
    }
    state = apply_mode_pair(state, splitter, TargetMode::U, TargetMode::D);
    for (int c = 0; c < crossings; ++c) {
      CollisionResult cr = collision_channel(state, eta);
      state = cr.surviving;
      result.stage_scatter_probs.push_back(cr.scatter_prob);
    }
  }
  result.no_scatter_state = state;
  result.success_prob = state.norm_squared();
  return result;
}

}  // namespace

double GateSpec::resolved_theta() const {
  switch (theta_rule) {
    case ThetaRule::Explicit:
      return theta;
    case ThetaRule::PiOver2N:
      return std::numbers::pi / (2.0 * n_stages);
    case ThetaRule::PiOverN:
      return std::numbers::pi / n_stages;
  }
  throw std::logic_error("unreachable theta rule");
}

void GateSpec::validate() const {
  if (n_stages < 1) {
    throw std::invalid_argument("n_stages must be >= 1");
  }
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw std::invalid_argument("eta must lie in [0, 1]");
  }
  if (crossings_per_stage < 1) {
    throw std::invalid_argument("crossings_per_stage must be >= 1");
  }
  double th = resolved_theta();
  // (0, pi], closed at pi so the single-stage PiOverN spec stays legal.
  if (!(th > 0.0 && th <= std::numbers::pi)) {
    throw std::invalid_argument("resolved theta must lie in (0, pi]");
  }
  if (variant == Variant::Azuma && hadamard_sandwich) {
    throw std::invalid_argument(
        "the hadamard sandwich requires the bypass rail and is not "
        "available in the azuma variant");
  }
}

ProtocolResult run_classical_qi(int n, double theta, bool bomb_present,
                                double eta) {
  if (n < 1) {
    throw std::invalid_argument("run_classical_qi: n must be >= 1");
  }
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("run_classical_qi: theta must be finite");
  }
  ControlMode control = bomb_present ? ControlMode::In : ControlMode::Out;
  return run_stage_loop(basis_state(control, TargetMode::D), n, theta, eta,
                        /*crossings=*/1);
}

ProtocolResult run_joint_protocol(const GateSpec &spec,
                                  const JointState &input) {
  spec.validate();
  require_normalized_input(input, "run_joint_protocol");
  JointState state = input;
  const Operator2 half = rotation(std::numbers::pi / 4.0);
  if (spec.hadamard_sandwich) {
    state = apply_mode_pair(state, half, TargetMode::Out0, TargetMode::D);
  }
  ProtocolResult result =
      run_stage_loop(state, spec.n_stages, spec.resolved_theta(), spec.eta,
                     spec.crossings_per_stage);
  if (spec.hadamard_sandwich) {
    result.no_scatter_state = apply_mode_pair(
        result.no_scatter_state, half, TargetMode::Out0, TargetMode::D);
    result.success_prob = result.no_scatter_state.norm_squared();
  }
  return result;
}

TrajectoryOutcome sample_trajectory(const GateSpec &spec,
                                    const JointState &input,
                                    std::uint64_t seed) {
  spec.validate();
  require_normalized_input(input, "sample_trajectory");
  std::mt19937_64 eng(seed);
  JointState state = input;
  const Operator2 splitter = rotation(spec.resolved_theta());
  const Operator2 fold = mirror_fold();
  const Operator2 half = rotation(std::numbers::pi / 4.0);
  if (spec.hadamard_sandwich) {
    state = apply_mode_pair(state, half, TargetMode::Out0, TargetMode::D);
  }
  const std::size_t hot = joint_index(ControlMode::In, TargetMode::U);
  int check = 0;
  for (int k = 0; k < spec.n_stages; ++k) {
    if (k > 0) {
      state = apply_mode_pair(state, fold, TargetMode::U, TargetMode::D);
    }
    state = apply_mode_pair(state, splitter, TargetMode::U, TargetMode::D);
    for (int c = 0; c < spec.crossings_per_stage; ++c) {
      ++check;
      double p = spec.eta * std::norm(state.amps[hot]);
      if (uniform01(eng) < p) {
        TrajectoryOutcome outcome;
        outcome.scattered = true;
        outcome.scatter_check = check;
        return outcome;
      }
      // No-scatter update, then renormalize; the survivor has norm^2 = 1 - p.
      state.amps[hot] *= std::sqrt(1.0 - spec.eta);
      double inv = 1.0 / std::sqrt(1.0 - p);
      for (auto &a : state.amps) a *= inv;
    }
  }
  if (spec.hadamard_sandwich) {
    state = apply_mode_pair(state, half, TargetMode::Out0, TargetMode::D);
  }
  TrajectoryOutcome outcome;
  outcome.scattered = false;
  outcome.final_state = state.normalized();
  return outcome;
}

double FrequencyTable::scatter_frequency(int check) const {
  if (check < 1 || check > static_cast<int>(scatter_counts.size())) {
    throw std::out_of_range("scatter_frequency: check index out of range");
  }
  return static_cast<double>(scatter_counts[check - 1]) /
         static_cast<double>(total);
}

double FrequencyTable::no_scatter_frequency() const {
  return static_cast<double>(no_scatter_count) / static_cast<double>(total);
}

FrequencyTable estimate_frequencies(const GateSpec &spec,
                                    const JointState &input,
                                    std::int64_t n_samples,
                                    std::uint64_t seed) {
  if (n_samples < 1) {
    throw std::invalid_argument("estimate_frequencies: n_samples must be >= 1");
  }
  spec.validate();
  FrequencyTable table;
  table.scatter_counts.assign(spec.total_checks(), 0);
  table.total = n_samples;
  for (std::int64_t i = 0; i < n_samples; ++i) {
    TrajectoryOutcome outcome =
        sample_trajectory(spec, input, trajectory_seed(seed, i));
    if (outcome.scattered) {
      ++table.scatter_counts[*outcome.scatter_check - 1];
    } else {
      ++table.no_scatter_count;
      if (!table.terminal_state) {
        table.terminal_state = outcome.final_state;
      }
    }
  }
  return table;
}

}  // namespace qi
