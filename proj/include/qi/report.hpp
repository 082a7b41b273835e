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

#include <string>
#include <vector>

#include "qi/config.hpp"
#include "qi/gates.hpp"

namespace qi {

enum class OutputFormat { Csv, Json };

// Locale-independent decimal with 12 significant digits (round-half-even).
std::string format_real(double v);

// One typed table cell; reals are rounded to 12 significant digits when the
// cell is created, so CSV and JSON carry identical data.
struct Cell {
  enum class Kind { Text, Real, Int } kind = Kind::Text;
  std::string text;
  double real = 0.0;
  long long integer = 0;

  static Cell of_text(std::string value);
  static Cell of_real(double value);
  static Cell of_int(long long value);
};

struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// `run` subcommand. Exact mode yields one row; sample mode yields one row per
// outcome (each collision check, then no_scatter).
ResultTable run_experiment(const ExperimentConfig &cfg);

// `truth-table` subcommand: four rows, one per computational basis input.
ResultTable truth_table_report(const ExperimentConfig &cfg);

// `sweep` subcommand: one row per grid point in lexicographic axis order,
// regardless of the worker count. Rows are computed exactly.
ResultTable run_sweep(const SweepConfig &cfg, int parallel);

// LF line endings, header row, RFC-style quoting for cells with separators.
std::string to_csv(const ResultTable &table);

// Array of objects keyed by the CSV column names.
std::string to_json(const ResultTable &table);

}  // namespace qi
