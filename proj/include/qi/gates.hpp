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

#include "qi/interrogation.hpp"

namespace qi {

// Trace-decreasing conditional gate action on the computational basis
// |00>,|01>,|10>,|11>. Column j holds the unnormalized no-scatter output for
// basis input j, so column squared norms are per-input success probabilities.
struct ConditionalGateMatrix {
  std::array<std::array<Amplitude, 4>, 4> m{};  // m[row][col]

  Amplitude at(int row, int col) const { return m[row][col]; }
  double column_norm_squared(int col) const;
};

GateSpec cz_spec(int n, double eta = 1.0, int crossings = 1);
GateSpec cnot_spec(int n, double eta = 1.0, int crossings = 1);
GateSpec azuma_spec(int n, double eta = 1.0, int crossings = 1);

// Decodes a protocol output, dropping any amplitude that left the variant's
// qubit rails (a detectable wrong-port exit). If leak_prob is non-null it
// receives the squared amplitude dropped. Output is not renormalized.
QubitStateVector decode_postselected(const GateSpec &spec, const JointState &s,
                                     double *leak_prob = nullptr);

ConditionalGateMatrix conditional_gate_matrix(const GateSpec &spec);

struct TruthTableRow {
  int basis_input = 0;        // 0..3 for |00>..|11>
  double success_prob = 0.0;  // no scatter and exit on the qubit rails
  QubitStateVector output;    // renormalized (zero if success_prob is 0)
};

std::array<TruthTableRow, 4> truth_table(const GateSpec &spec);

enum class IdealGate { CZ, CNOT };

// CZ = diag(1,1,1,-1). The CNOT comparison point is
// (I (x) rotation(pi/4)) * CZ * (I (x) rotation(pi/4)), so the fixed signs of
// the 50% splitters are not counted as gate error.
ConditionalGateMatrix ideal_gate_matrix(IdealGate ideal);

struct GateMetrics {
  double raw_process_fidelity = 0.0;           // |Tr(U' M)|^2 / 16
  double postselected_process_fidelity = 0.0;  // |Tr(U' M)|^2 / (4 Tr(M' M))
  double worst_case_basis_success = 0.0;       // min_j ||M e_j||^2
};

GateMetrics gate_metrics(const GateSpec &spec, IdealGate ideal);

// Runs (|0>+|1>)_C/sqrt(2) (x) |0>_T through a CNOT spec and returns the
// concurrence of the renormalized no-scatter output.
double entanglement_demo(const GateSpec &spec);

}  // namespace qi
