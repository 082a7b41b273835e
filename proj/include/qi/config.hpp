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
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qi/interrogation.hpp"

namespace qi {

enum class InputKind {
  Basis00,
  Basis01,
  Basis10,
  Basis11,
  PlusControl,  // (|0> + |1>)_C / sqrt(2) (x) |0>_T
  Custom
};

struct InputSpec {
  InputKind kind = InputKind::Basis00;
  QubitStateVector custom{};  // renormalized at parse time; Custom only

  QubitStateVector qubits() const;

  bool operator==(const InputSpec &other) const = default;
};

enum class RunMode { Exact, Sample };

struct ExperimentConfig {
  GateSpec spec;
  InputSpec input;
  RunMode mode = RunMode::Exact;
  std::int64_t n_samples = 10000;
  std::uint64_t seed = 0;

  bool operator==(const ExperimentConfig &other) const = default;
};

enum class SweepParam { NStages, Eta, Crossings };

struct SweepAxis {
  SweepParam param = SweepParam::NStages;
  std::vector<double> values;  // integral for NStages and Crossings

  bool operator==(const SweepAxis &other) const = default;
};

// Cartesian sweep grid over up to three spec parameters. Axes are kept in
// canonical (alphabetical) parameter order; grid points are enumerated
// lexicographically with the first axis slowest.
struct SweepConfig {
  ExperimentConfig base;
  std::vector<SweepAxis> axes;

  std::size_t grid_size() const;
  ExperimentConfig at(std::size_t grid_point) const;

  bool operator==(const SweepConfig &other) const = default;
};

using AnyConfig = std::variant<ExperimentConfig, SweepConfig>;

// Parse failure carrying the 1-based source line it was detected on.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string &message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Parses the line-oriented `key = value` experiment format. `#` starts a
// comment, unknown or duplicate keys are errors, and `theta`/`theta_rule`
// are mutually exclusive. Required keys: n_stages, gate.
AnyConfig parse_config(std::string_view text);

// Canonical form: alphabetical key order, one pair per line, every resolved
// field explicit. parse_config(serialize_config(c)) == c.
std::string serialize_config(const AnyConfig &config);

}  // namespace qi
