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

#include "qi/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>

namespace qi {

namespace {

constexpr double kCustomInputNormTol = 1e-9;
constexpr std::size_t kMaxGridSize = 10'000'000;

struct Entry {
  std::string value;
  int line = 0;
};

std::string trim(std::string_view sv) {
  std::size_t begin = sv.find_first_not_of(" \t");
  if (begin == std::string_view::npos) return {};
  std::size_t end = sv.find_last_not_of(" \t");
  return std::string(sv.substr(begin, end - begin + 1));
}

bool is_known_key(const std::string &key) {
  static const char *known[] = {"variant",       "n_stages",  "theta_rule",
                                "theta",         "eta",       "crossings",
                                "gate",          "input",     "mode",
                                "samples",       "seed",      "sweep.n_stages",
                                "sweep.eta",     "sweep.crossings"};
  return std::any_of(std::begin(known), std::end(known),
                     [&](const char *k) { return key == k; });
}

double parse_real_token(std::string_view token, int line,
                        const std::string &key) {
  double value = 0.0;
  const char *first = token.data();
  const char *last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ConfigError(line, "key '" + key + "': '" + std::string(token) +
                                "' is not a number");
  }
  return value;
}

std::int64_t parse_int_token(std::string_view token, int line,
                             const std::string &key) {
  std::int64_t value = 0;
  const char *first = token.data();
  const char *last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ConfigError(line, "key '" + key + "': '" + std::string(token) +
                                "' is not an integer");
  }
  return value;
}

std::uint64_t parse_uint_token(std::string_view token, int line,
                               const std::string &key) {
  std::uint64_t value = 0;
  const char *first = token.data();
  const char *last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ConfigError(line, "key '" + key + "': '" + std::string(token) +
                                "' is not an unsigned integer");
  }
  return value;
}

std::vector<std::string> split(std::string_view sv, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t next = sv.find(sep, pos);
    if (next == std::string_view::npos) {
      out.emplace_back(sv.substr(pos));
      return out;
    }
    out.emplace_back(sv.substr(pos, next - pos));
    pos = next + 1;
  }
}

std::string format_real_shortest(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

const char *param_key(SweepParam p) {
  switch (p) {
    case SweepParam::NStages:
      return "n_stages";
    case SweepParam::Eta:
      return "eta";
    case SweepParam::Crossings:
      return "crossings";
  }
  return "";
}

void check_axis_value(SweepParam param, double v, int line) {
  switch (param) {
    case SweepParam::NStages:
    case SweepParam::Crossings:
      if (v < 1.0 || v != std::floor(v)) {
        throw ConfigError(line, std::string("key 'sweep.") + param_key(param) +
                                    "': values must be integers >= 1");
      }
      break;
    case SweepParam::Eta:
      if (!(v >= 0.0 && v <= 1.0)) {
        throw ConfigError(line,
                          "key 'sweep.eta': values must lie in [0, 1]");
      }
      break;
  }
}

InputSpec parse_input_value(const Entry &entry) {
  InputSpec input;
  const std::string &value = entry.value;
  if (value == "00") {
    input.kind = InputKind::Basis00;
  } else if (value == "01") {
    input.kind = InputKind::Basis01;
  } else if (value == "10") {
    input.kind = InputKind::Basis10;
  } else if (value == "11") {
    input.kind = InputKind::Basis11;
  } else if (value == "plus_control") {
    input.kind = InputKind::PlusControl;
  } else if (value.rfind("custom", 0) == 0) {
    std::vector<std::string> parts = split(value, ',');
    if (parts.size() != 9 || trim(parts[0]) != "custom") {
      throw ConfigError(entry.line,
                        "key 'input': custom inputs take the form "
                        "'custom,re00,im00,re01,im01,re10,im10,re11,im11'");
    }
    input.kind = InputKind::Custom;
    for (int j = 0; j < 4; ++j) {
      double re = parse_real_token(trim(parts[1 + 2 * j]), entry.line, "input");
      double im = parse_real_token(trim(parts[2 + 2 * j]), entry.line, "input");
      input.custom.amps[j] = Amplitude(re, im);
    }
    if (std::abs(input.custom.norm_squared() - 1.0) > kCustomInputNormTol) {
      throw ConfigError(entry.line,
                        "key 'input': custom amplitudes are not normalized");
    }
    input.custom = input.custom.normalized();
  } else {
    throw ConfigError(entry.line, "key 'input': unknown value '" + value + "'");
  }
  return input;
}

}  // namespace

QubitStateVector InputSpec::qubits() const {
  QubitStateVector q;
  switch (kind) {
    case InputKind::Basis00:
      q.amps[0] = 1.0;
      break;
    case InputKind::Basis01:
      q.amps[1] = 1.0;
      break;
    case InputKind::Basis10:
      q.amps[2] = 1.0;
      break;
    case InputKind::Basis11:
      q.amps[3] = 1.0;
      break;
    case InputKind::PlusControl:
      q.amps[0] = 1.0 / std::numbers::sqrt2;
      q.amps[2] = 1.0 / std::numbers::sqrt2;
      break;
    case InputKind::Custom:
      q = custom;
      break;
  }
  return q;
}

std::size_t SweepConfig::grid_size() const {
  std::size_t size = 1;
  for (const auto &axis : axes) size *= axis.values.size();
  return size;
}

ExperimentConfig SweepConfig::at(std::size_t grid_point) const {
  ExperimentConfig cfg = base;
  // Lexicographic: the last axis varies fastest.
  std::size_t remainder = grid_point;
  for (std::size_t i = axes.size(); i-- > 0;) {
    const SweepAxis &axis = axes[i];
    std::size_t idx = remainder % axis.values.size();
    remainder /= axis.values.size();
    double v = axis.values[idx];
    switch (axis.param) {
      case SweepParam::NStages:
        cfg.spec.n_stages = static_cast<int>(v);
        break;
      case SweepParam::Eta:
        cfg.spec.eta = v;
        break;
      case SweepParam::Crossings:
        cfg.spec.crossings_per_stage = static_cast<int>(v);
        break;
    }
  }
  return cfg;
}

AnyConfig parse_config(std::string_view text) {
  std::map<std::string, Entry> entries;
  int line_no = 0;
  int last_line = 1;
  for (const std::string &raw_line : split(text, '\n')) {
    ++line_no;
    std::string line = raw_line;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (std::size_t hash = line.find('#'); hash != std::string::npos) {
      line.erase(hash);
    }
    if (trim(line).empty()) continue;
    last_line = line_no;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError(line_no, "expected 'key = value', got '" +
                                     trim(line) + "'");
    }
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) {
      throw ConfigError(line_no, "missing key before '='");
    }
    if (!is_known_key(key)) {
      throw ConfigError(line_no, "unknown key '" + key + "'");
    }
    if (value.empty()) {
      throw ConfigError(line_no, "key '" + key + "' has an empty value");
    }
    if (entries.count(key) != 0) {
      throw ConfigError(line_no, "duplicate key '" + key + "'");
    }
    entries[key] = Entry{value, line_no};
  }

  auto find = [&](const char *key) -> std::optional<Entry> {
    auto it = entries.find(key);
    if (it == entries.end()) return std::nullopt;
    return it->second;
  };
  auto require = [&](const char *key) -> Entry {
    auto entry = find(key);
    if (!entry) {
      throw ConfigError(last_line,
                        "missing required key '" + std::string(key) + "'");
    }
    return *entry;
  };

  ExperimentConfig cfg;

  Entry n_entry = require("n_stages");
  std::int64_t n = parse_int_token(n_entry.value, n_entry.line, "n_stages");
  if (n < 1 || n > std::numeric_limits<int>::max()) {
    throw ConfigError(n_entry.line, "key 'n_stages': value must be >= 1");
  }
  cfg.spec.n_stages = static_cast<int>(n);

  if (auto entry = find("variant")) {
    if (entry->value == "main") {
      cfg.spec.variant = Variant::Main;
    } else if (entry->value == "azuma") {
      cfg.spec.variant = Variant::Azuma;
    } else {
      throw ConfigError(entry->line, "key 'variant': unknown value '" +
                                         entry->value + "'");
    }
  }

  Entry gate_entry = require("gate");
  if (gate_entry.value == "cz") {
    cfg.spec.hadamard_sandwich = false;
  } else if (gate_entry.value == "cnot") {
    cfg.spec.hadamard_sandwich = true;
  } else {
    throw ConfigError(gate_entry.line,
                      "key 'gate': unknown value '" + gate_entry.value + "'");
  }
  if (cfg.spec.variant == Variant::Azuma && cfg.spec.hadamard_sandwich) {
    throw ConfigError(gate_entry.line,
                      "key 'gate': the azuma variant supports only 'cz'");
  }

  auto theta_entry = find("theta");
  auto rule_entry = find("theta_rule");
  if (theta_entry && rule_entry) {
    int line = std::max(theta_entry->line, rule_entry->line);
    throw ConfigError(line, "keys 'theta' and 'theta_rule' are exclusive");
  }
  if (theta_entry) {
    cfg.spec.theta_rule = ThetaRule::Explicit;
    cfg.spec.theta =
        parse_real_token(theta_entry->value, theta_entry->line, "theta");
    if (!(cfg.spec.theta > 0.0 && cfg.spec.theta <= std::numbers::pi)) {
      throw ConfigError(theta_entry->line,
                        "key 'theta': value must lie in (0, pi]");
    }
  } else if (rule_entry) {
    if (rule_entry->value == "pi_over_2n") {
      cfg.spec.theta_rule = ThetaRule::PiOver2N;
    } else if (rule_entry->value == "pi_over_n") {
      cfg.spec.theta_rule = ThetaRule::PiOverN;
    } else {
      throw ConfigError(rule_entry->line, "key 'theta_rule': unknown value '" +
                                              rule_entry->value + "'");
    }
  } else {
    cfg.spec.theta_rule = cfg.spec.variant == Variant::Azuma
                              ? ThetaRule::PiOver2N
                              : ThetaRule::PiOverN;
  }

  if (auto entry = find("eta")) {
    cfg.spec.eta = parse_real_token(entry->value, entry->line, "eta");
    if (!(cfg.spec.eta >= 0.0 && cfg.spec.eta <= 1.0)) {
      throw ConfigError(entry->line, "key 'eta': value must lie in [0, 1]");
    }
  }

  if (auto entry = find("crossings")) {
    std::int64_t k = parse_int_token(entry->value, entry->line, "crossings");
    if (k < 1 || k > std::numeric_limits<int>::max()) {
      throw ConfigError(entry->line, "key 'crossings': value must be >= 1");
    }
    cfg.spec.crossings_per_stage = static_cast<int>(k);
  }

  if (auto entry = find("input")) {
    cfg.input = parse_input_value(*entry);
  }

  if (auto entry = find("mode")) {
    if (entry->value == "exact") {
      cfg.mode = RunMode::Exact;
    } else if (entry->value == "sample") {
      cfg.mode = RunMode::Sample;
    } else {
      throw ConfigError(entry->line,
                        "key 'mode': unknown value '" + entry->value + "'");
    }
  }

  if (auto entry = find("samples")) {
    cfg.n_samples = parse_int_token(entry->value, entry->line, "samples");
    if (cfg.n_samples < 1) {
      throw ConfigError(entry->line, "key 'samples': value must be >= 1");
    }
  }

  if (auto entry = find("seed")) {
    cfg.seed = parse_uint_token(entry->value, entry->line, "seed");
  }

  std::vector<SweepAxis> axes;
  // Alphabetical parameter order: crossings, eta, n_stages.
  const std::pair<const char *, SweepParam> sweep_keys[] = {
      {"sweep.crossings", SweepParam::Crossings},
      {"sweep.eta", SweepParam::Eta},
      {"sweep.n_stages", SweepParam::NStages}};
  for (const auto &[key, param] : sweep_keys) {
    auto entry = find(key);
    if (!entry) continue;
    SweepAxis axis;
    axis.param = param;
    for (const std::string &token : split(entry->value, ',')) {
      double v = parse_real_token(trim(token), entry->line, key);
      check_axis_value(param, v, entry->line);
      axis.values.push_back(v);
    }
    axes.push_back(std::move(axis));
  }

  if (axes.empty()) {
    return cfg;
  }
  SweepConfig sweep;
  sweep.base = cfg;
  sweep.axes = std::move(axes);
  std::size_t grid = 1;
  for (const auto &axis : sweep.axes) {
    grid *= axis.values.size();
    if (grid > kMaxGridSize) {
      throw ConfigError(last_line, "sweep grid exceeds 10^7 points");
    }
  }
  return sweep;
}

namespace {

void serialize_experiment(std::ostringstream &out,
                          const ExperimentConfig &cfg) {
  out << "crossings = " << cfg.spec.crossings_per_stage << "\n";
  out << "eta = " << format_real_shortest(cfg.spec.eta) << "\n";
  out << "gate = " << (cfg.spec.hadamard_sandwich ? "cnot" : "cz") << "\n";
  out << "input = ";
  switch (cfg.input.kind) {
    case InputKind::Basis00:
      out << "00";
      break;
    case InputKind::Basis01:
      out << "01";
      break;
    case InputKind::Basis10:
      out << "10";
      break;
    case InputKind::Basis11:
      out << "11";
      break;
    case InputKind::PlusControl:
      out << "plus_control";
      break;
    case InputKind::Custom:
      out << "custom";
      for (const Amplitude &a : cfg.input.custom.amps) {
        out << "," << format_real_shortest(a.real()) << ","
            << format_real_shortest(a.imag());
      }
      break;
  }
  out << "\n";
  out << "mode = " << (cfg.mode == RunMode::Exact ? "exact" : "sample")
      << "\n";
  out << "n_stages = " << cfg.spec.n_stages << "\n";
  out << "samples = " << cfg.n_samples << "\n";
  out << "seed = " << cfg.seed << "\n";
}

void serialize_theta_and_variant(std::ostringstream &out,
                                 const GateSpec &spec) {
  switch (spec.theta_rule) {
    case ThetaRule::Explicit:
      out << "theta = " << format_real_shortest(spec.theta) << "\n";
      break;
    case ThetaRule::PiOver2N:
      out << "theta_rule = pi_over_2n\n";
      break;
    case ThetaRule::PiOverN:
      out << "theta_rule = pi_over_n\n";
      break;
  }
  out << "variant = " << (spec.variant == Variant::Azuma ? "azuma" : "main")
      << "\n";
}

std::string serialize_axis_values(const SweepAxis &axis) {
  std::string out;
  for (std::size_t i = 0; i < axis.values.size(); ++i) {
    if (i > 0) out += ",";
    if (axis.param == SweepParam::Eta) {
      out += format_real_shortest(axis.values[i]);
    } else {
      out += std::to_string(static_cast<long long>(axis.values[i]));
    }
  }
  return out;
}

}  // namespace

std::string serialize_config(const AnyConfig &config) {
  std::ostringstream out;
  if (const auto *cfg = std::get_if<ExperimentConfig>(&config)) {
    serialize_experiment(out, *cfg);
    serialize_theta_and_variant(out, cfg->spec);
    return out.str();
  }
  const SweepConfig &sweep = std::get<SweepConfig>(config);
  serialize_experiment(out, sweep.base);
  for (const auto &axis : sweep.axes) {
    if (axis.param == SweepParam::Crossings) {
      out << "sweep.crossings = " << serialize_axis_values(axis) << "\n";
    }
  }
  for (const auto &axis : sweep.axes) {
    if (axis.param == SweepParam::Eta) {
      out << "sweep.eta = " << serialize_axis_values(axis) << "\n";
    }
  }
  for (const auto &axis : sweep.axes) {
    if (axis.param == SweepParam::NStages) {
      out << "sweep.n_stages = " << serialize_axis_values(axis) << "\n";
    }
  }
  serialize_theta_and_variant(out, sweep.base.spec);
  return out.str();
}

}  // namespace qi
