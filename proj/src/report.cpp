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

#include "qi/report.hpp"

#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include <json.hpp>

namespace qi {

namespace {

const char *variant_name(Variant v) {
  return v == Variant::Azuma ? "azuma" : "main";
}

const char *gate_name(const GateSpec &spec) {
  return spec.hadamard_sandwich ? "cnot" : "cz";
}

const char *rule_name(ThetaRule rule) {
  switch (rule) {
    case ThetaRule::Explicit:
      return "explicit";
    case ThetaRule::PiOver2N:
      return "pi_over_2n";
    case ThetaRule::PiOverN:
      return "pi_over_n";
  }
  return "";
}

std::string input_label(const InputSpec &input) {
  switch (input.kind) {
    case InputKind::Basis00:
      return "00";
    case InputKind::Basis01:
      return "01";
    case InputKind::Basis10:
      return "10";
    case InputKind::Basis11:
      return "11";
    case InputKind::PlusControl:
      return "plus_control";
    case InputKind::Custom:
      return "custom";
  }
  return "";
}

// Leading columns shared by every subcommand.
void spec_columns(std::vector<std::string> &cols) {
  for (const char *name : {"variant", "gate", "n_stages", "theta_rule",
                           "theta", "eta", "crossings"}) {
    cols.emplace_back(name);
  }
}

void spec_cells(std::vector<Cell> &row, const GateSpec &spec) {
  row.push_back(Cell::of_text(variant_name(spec.variant)));
  row.push_back(Cell::of_text(gate_name(spec)));
  row.push_back(Cell::of_int(spec.n_stages));
  row.push_back(Cell::of_text(rule_name(spec.theta_rule)));
  row.push_back(Cell::of_real(spec.resolved_theta()));
  row.push_back(Cell::of_real(spec.eta));
  row.push_back(Cell::of_int(spec.crossings_per_stage));
}

void output_columns(std::vector<std::string> &cols) {
  for (const char *name : {"out00_re", "out00_im", "out01_re", "out01_im",
                           "out10_re", "out10_im", "out11_re", "out11_im"}) {
    cols.emplace_back(name);
  }
}

void output_cells(std::vector<Cell> &row, const QubitStateVector &q) {
  for (const Amplitude &a : q.amps) {
    row.push_back(Cell::of_real(a.real()));
    row.push_back(Cell::of_real(a.imag()));
  }
}

JointState encode_input(const ExperimentConfig &cfg) {
  QubitStateVector q = cfg.input.qubits();
  return cfg.spec.variant == Variant::Azuma ? encode_qubits_azuma(q)
                                            : encode_qubits(q);
}

struct SweepRow {
  GateSpec spec;
  double success_prob = 0.0;
  GateMetrics metrics;
  double concurrence_value = 0.0;
};

SweepRow evaluate_sweep_point(const ExperimentConfig &cfg) {
  SweepRow row;
  row.spec = cfg.spec;
  ProtocolResult res = run_joint_protocol(cfg.spec, encode_input(cfg));
  row.success_prob = res.success_prob;
  row.metrics = gate_metrics(
      cfg.spec, cfg.spec.hadamard_sandwich ? IdealGate::CNOT : IdealGate::CZ);
  // Entangling power probe: conditional output of (|0>+|1>)_C/sqrt(2) |0>_T.
  QubitStateVector plus;
  plus.amps[0] = 1.0 / std::numbers::sqrt2;
  plus.amps[2] = 1.0 / std::numbers::sqrt2;
  JointState probe = cfg.spec.variant == Variant::Azuma
                         ? encode_qubits_azuma(plus)
                         : encode_qubits(plus);
  ProtocolResult probe_res = run_joint_protocol(cfg.spec, probe);
  QubitStateVector out =
      decode_postselected(cfg.spec, probe_res.no_scatter_state);
  row.concurrence_value =
      out.norm_squared() > 0.0 ? concurrence(out.normalized()) : 0.0;
  return row;
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 12);
  return std::string(buf, ptr);
}

Cell Cell::of_text(std::string value) {
  Cell c;
  c.kind = Kind::Text;
  c.text = std::move(value);
  return c;
}

Cell Cell::of_real(double value) {
  Cell c;
  c.kind = Kind::Real;
  c.text = format_real(value);
  c.real = std::strtod(c.text.c_str(), nullptr);
  return c;
}

Cell Cell::of_int(long long value) {
  Cell c;
  c.kind = Kind::Int;
  c.integer = value;
  c.text = std::to_string(value);
  return c;
}

ResultTable run_experiment(const ExperimentConfig &cfg) {
  cfg.spec.validate();
  JointState input = encode_input(cfg);
  ResultTable table;
  spec_columns(table.columns);
  for (const char *name : {"input", "mode", "samples", "seed"}) {
    table.columns.emplace_back(name);
  }
  auto common_cells = [&](std::vector<Cell> &row) {
    spec_cells(row, cfg.spec);
    row.push_back(Cell::of_text(input_label(cfg.input)));
    row.push_back(Cell::of_text(cfg.mode == RunMode::Exact ? "exact"
                                                           : "sample"));
    row.push_back(Cell::of_int(cfg.n_samples));
    row.push_back(Cell::of_int(static_cast<long long>(cfg.seed)));
  };

  if (cfg.mode == RunMode::Exact) {
    for (const char *name : {"success_prob", "leak_prob"}) {
      table.columns.emplace_back(name);
    }
    output_columns(table.columns);
    ProtocolResult res = run_joint_protocol(cfg.spec, input);
    double leak = 0.0;
    QubitStateVector out =
        decode_postselected(cfg.spec, res.no_scatter_state, &leak);
    QubitStateVector normalized_out;
    if (out.norm_squared() > 0.0) normalized_out = out.normalized();
    std::vector<Cell> row;
    common_cells(row);
    row.push_back(Cell::of_real(res.success_prob));
    row.push_back(Cell::of_real(leak));
    output_cells(row, normalized_out);
    table.rows.push_back(std::move(row));
    return table;
  }

  for (const char *name : {"outcome", "count", "frequency"}) {
    table.columns.emplace_back(name);
  }
  FrequencyTable freq =
      estimate_frequencies(cfg.spec, input, cfg.n_samples, cfg.seed);
  for (std::size_t k = 0; k < freq.scatter_counts.size(); ++k) {
    std::vector<Cell> row;
    common_cells(row);
    row.push_back(Cell::of_text("scatter@" + std::to_string(k + 1)));
    row.push_back(Cell::of_int(freq.scatter_counts[k]));
    row.push_back(Cell::of_real(freq.scatter_frequency(static_cast<int>(k) + 1)));
    table.rows.push_back(std::move(row));
  }
  std::vector<Cell> row;
  common_cells(row);
  row.push_back(Cell::of_text("no_scatter"));
  row.push_back(Cell::of_int(freq.no_scatter_count));
  row.push_back(Cell::of_real(freq.no_scatter_frequency()));
  table.rows.push_back(std::move(row));
  return table;
}

ResultTable truth_table_report(const ExperimentConfig &cfg) {
  cfg.spec.validate();
  ResultTable table;
  spec_columns(table.columns);
  table.columns.emplace_back("input");
  table.columns.emplace_back("success_prob");
  output_columns(table.columns);
  static const char *labels[] = {"00", "01", "10", "11"};
  for (const TruthTableRow &tt : truth_table(cfg.spec)) {
    std::vector<Cell> row;
    spec_cells(row, cfg.spec);
    row.push_back(Cell::of_text(labels[tt.basis_input]));
    row.push_back(Cell::of_real(tt.success_prob));
    output_cells(row, tt.output);
    table.rows.push_back(std::move(row));
  }
  return table;
}

ResultTable run_sweep(const SweepConfig &cfg, int parallel) {
  cfg.base.spec.validate();
  const std::size_t grid = cfg.grid_size();
  std::vector<SweepRow> rows(grid);
  int workers = std::max(1, parallel);

  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto work = [&]() {
    for (std::size_t g; (g = next.fetch_add(1)) < grid;) {
      try {
        rows[g] = evaluate_sweep_point(cfg.at(g));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(work);
    for (auto &th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  ResultTable table;
  spec_columns(table.columns);
  table.columns.emplace_back("input");
  for (const char *name : {"success_prob", "raw_fidelity",
                           "postselected_fidelity", "concurrence"}) {
    table.columns.emplace_back(name);
  }
  for (const SweepRow &r : rows) {
    std::vector<Cell> row;
    spec_cells(row, r.spec);
    row.push_back(Cell::of_text(input_label(cfg.base.input)));
    row.push_back(Cell::of_real(r.success_prob));
    row.push_back(Cell::of_real(r.metrics.raw_process_fidelity));
    row.push_back(Cell::of_real(r.metrics.postselected_process_fidelity));
    row.push_back(Cell::of_real(r.concurrence_value));
    table.rows.push_back(std::move(row));
  }
  return table;
}

namespace {

std::string csv_escape(const std::string &field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string to_csv(const ResultTable &table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i > 0) out += ',';
    out += csv_escape(table.columns[i]);
  }
  out += '\n';
  for (const auto &row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += csv_escape(row[i].text);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const ResultTable &table) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto &row : table.rows) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const Cell &cell = row[i];
      switch (cell.kind) {
        case Cell::Kind::Text:
          obj[table.columns[i]] = cell.text;
          break;
        case Cell::Kind::Real:
          obj[table.columns[i]] = cell.real;
          break;
        case Cell::Kind::Int:
          obj[table.columns[i]] = cell.integer;
          break;
      }
    }
    rows.push_back(std::move(obj));
  }
  return rows.dump(2) + "\n";
}

}  // namespace qi
