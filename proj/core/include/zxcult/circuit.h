// Copyright 2025 The zxcult Authors
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

#ifndef ZXCULT_CIRCUIT_H_
#define ZXCULT_CIRCUIT_H_

#include <map>
#include <string>
#include <vector>

#include "zxcult/diagram.h"
#include "zxcult/noise.h"
#include "zxcult/pauliweb.h"

namespace zxcult {

enum class Op { R, RX, H, S, S_DAG, T, T_DAG, X, Z, CX, CZ, M, MX, TICK };

const char* to_string(Op op);

struct Instruction {
  Op op = Op::TICK;
  std::vector<int> targets;
  int line = 0;  // source line, 0 when built in code
  bool operator==(const Instruction& o) const { return op == o.op && targets == o.targets; }
};

struct CircuitProgram {
  int num_qubits = 0;
  std::vector<Instruction> instructions;
  bool operator==(const CircuitProgram&) const = default;
};

// Line-oriented text:
//   # comment
//   QUBITS 4            (optional; otherwise indices must be dense)
//   R 0 1 / RX 2 / H 0 / S 1 / S_DAG 1 / T 0 / T_DAG 0 / X 1 / Z 1
//   CX 0 1 2 3          (control/target pairs)
//   CZ 0 1
//   M 0 / MX 1
//   TICK
// Errors carry "line L, column C".
CircuitProgram parse_circuit(const std::string& text);
std::string serialize_circuit(const CircuitProgram& p);

// Where an edge sits in the circuit: errors on it act as the returned
// qubit Paulis right after instruction `instr` (-1: before the first).
struct EdgeSite {
  enum Kind { kWire, kCxLink, kCzLink };
  Kind kind = kWire;
  int instr = -1;
  int q0 = -1;  // wire qubit, or control / first qubit of a link
  int q1 = -1;
};

std::vector<std::pair<int, Pauli>> qubit_paulis(const EdgeSite& site, Pauli p);

struct TranslatedCircuit {
  ZxDiagram diagram;
  std::map<int, EdgeSite> sites;         // every edge of `diagram`
  std::vector<int> measurement_spiders;  // in measurement-record order
};

// Gate-by-gate translation. Wires whose first operation is a reset start at
// a state spider instead of an input; measured wires end at a measurement
// spider (phase 0 = outcome 0) tagged with the number of preceding TICKs.
TranslatedCircuit translate_circuit(const CircuitProgram& p);
ZxDiagram load_circuit(const std::string& path);

// T and T_DAG dropped (their phases rounded to zero): a Clifford circuit
// with the same instruction indices for every other gate.
CircuitProgram clifford_substitute(const CircuitProgram& p);

// A detector: measurement records whose parity is fixed in the noiseless
// Clifford-substituted circuit.
using Detector = std::vector<int>;

// The detecting region of a detector as a web on the translated diagram,
// by backward propagation through the Clifford-substituted circuit.
PauliWeb web_from_detector(const CircuitProgram& p, const TranslatedCircuit& tc,
                           const Detector& det, int id);

struct DcCircuit {
  CircuitProgram program;
  std::vector<Detector> detectors;
};

// Flag-free double check in circuit form: `rounds` rounds of an n-qubit
// GHZ control register driving controlled-(T X T^dag) on n data wires, each
// closed by un-preparing the register and measuring it. Detectors are the
// deterministic register measurements.
DcCircuit build_dc_circuit(int n, int rounds);

// Sampled outcomes (one per measurement record) of a Clifford program on a
// stabiliser tableau, with qubit Paulis injected after given instructions.
std::vector<int> simulate_clifford(const CircuitProgram& p,
                                   const std::multimap<int, std::pair<int, Pauli>>& injections,
                                   uint64_t seed);

}  // namespace zxcult

#endif  // ZXCULT_CIRCUIT_H_
