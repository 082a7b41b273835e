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

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qi/config.hpp"
#include "qi/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntimeError = 1;
constexpr int kExitConfigError = 2;

struct Options {
  std::string config_path;
  std::string format = "csv";
  std::string out_path;
  bool seed_given = false;
  std::uint64_t seed = 0;
  int parallel = 1;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::invalid_argument("cannot open config file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

int write_output(const std::string &data, const std::string &out_path) {
  if (out_path.empty()) {
    std::cout << data;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << out_path << "'\n";
    return kExitRuntimeError;
  }
  out << data;
  if (!out) {
    std::cerr << "error: failed writing output file '" << out_path << "'\n";
    return kExitRuntimeError;
  }
  return kExitOk;
}

void add_common_options(CLI::App *cmd, Options &opt) {
  cmd->add_option("config", opt.config_path, "experiment config file")
      ->required();
  cmd->add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opt.out_path,
                  "output path (default: standard output)");
  cmd->add_option("--seed", opt.seed, "override the config seed")
      ->each([&opt](const std::string &) { opt.seed_given = true; });
}

std::string render(const qi::ResultTable &table, const std::string &format) {
  return format == "json" ? qi::to_json(table) : qi::to_csv(table);
}

int dispatch(const std::string &command, const Options &opt) {
  std::string text = read_file(opt.config_path);
  qi::AnyConfig config = qi::parse_config(text);

  if (command == "sweep") {
    if (!std::holds_alternative<qi::SweepConfig>(config)) {
      throw std::invalid_argument("'" + opt.config_path +
                                  "' has no sweep axes; 'sweep' needs at "
                                  "least one sweep.* key");
    }
    qi::SweepConfig sweep = std::get<qi::SweepConfig>(config);
    if (opt.seed_given) sweep.base.seed = opt.seed;
    return write_output(render(qi::run_sweep(sweep, opt.parallel), opt.format),
                        opt.out_path);
  }

  if (!std::holds_alternative<qi::ExperimentConfig>(config)) {
    throw std::invalid_argument("'" + opt.config_path +
                                "' defines a sweep; use the 'sweep' command");
  }
  qi::ExperimentConfig cfg = std::get<qi::ExperimentConfig>(config);
  if (opt.seed_given) cfg.seed = opt.seed;
  if (command == "run") {
    return write_output(render(qi::run_experiment(cfg), opt.format),
                        opt.out_path);
  }
  return write_output(render(qi::truth_table_report(cfg), opt.format),
                      opt.out_path);
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{
      "qisim: exact and Monte Carlo simulation of interrogation-based "
      "two-qubit gates on dual-rail bosonic qubits"};
  app.require_subcommand(1);

  Options opt;
  CLI::App *run_cmd =
      app.add_subcommand("run", "run one experiment (exact or sampled)");
  add_common_options(run_cmd, opt);
  CLI::App *tt_cmd = app.add_subcommand(
      "truth-table", "conditional outputs for the four basis inputs");
  add_common_options(tt_cmd, opt);
  CLI::App *sweep_cmd =
      app.add_subcommand("sweep", "evaluate a parameter sweep grid");
  add_common_options(sweep_cmd, opt);
  sweep_cmd->add_option("--parallel", opt.parallel, "worker thread count")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  std::string command;
  if (run_cmd->parsed()) command = "run";
  if (tt_cmd->parsed()) command = "truth-table";
  if (sweep_cmd->parsed()) command = "sweep";

  try {
    return dispatch(command, opt);
  } catch (const qi::ConfigError &e) {
    std::cerr << "config error (" << opt.config_path << "): " << e.what()
              << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument &e) {
    std::cerr << "config error (" << opt.config_path << "): " << e.what()
              << "\n";
    return kExitConfigError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntimeError;
  }
}
