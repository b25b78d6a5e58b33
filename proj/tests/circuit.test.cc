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

#include "zxcult/circuit.h"

#include <random>

#include "gtest/gtest.h"
#include "zxcult/oracle.h"

namespace zxcult {
namespace {

constexpr double kTol = 1e-9;

// Dense unitary of a gate list; qubit 0 is the most significant bit.
std::vector<cplx> apply_gate(const std::vector<cplx>& psi, int n, const Instruction& ins) {
  std::vector<cplx> out = psi;
  const size_t dim = psi.size();
  auto bit = [n](size_t i, int q) { return (i >> (n - 1 - q)) & 1; };
  auto flip = [n](size_t i, int q) { return i ^ (size_t{1} << (n - 1 - q)); };
  const cplx I(0, 1);
  const cplx w = std::polar(1.0, M_PI / 4);
  for (size_t k = 0; k < ins.targets.size(); ++k) {
    int q = ins.targets[k];
    std::vector<cplx> next(dim);
    switch (ins.op) {
      case Op::H:
        for (size_t i = 0; i < dim; ++i) {
          next[i] += out[i] * (bit(i, q) ? -1.0 : 1.0) / std::sqrt(2.0);
          next[flip(i, q)] += out[i] / std::sqrt(2.0);
        }
        break;
      case Op::X:
        for (size_t i = 0; i < dim; ++i) next[flip(i, q)] = out[i];
        break;
      case Op::CX:
      case Op::CZ: {
        int t = ins.targets[++k];
        for (size_t i = 0; i < dim; ++i) {
          if (!bit(i, q)) {
            next[i] += out[i];
          } else if (ins.op == Op::CX) {
            next[flip(i, t)] += out[i];
          } else {
            next[i] += out[i] * (bit(i, t) ? -1.0 : 1.0);
          }
        }
        break;
      }
      default: {
        cplx ph = ins.op == Op::S ? I : ins.op == Op::S_DAG ? -I : ins.op == Op::T ? w
                : ins.op == Op::T_DAG ? std::conj(w) : cplx(-1);
        for (size_t i = 0; i < dim; ++i) next[i] = bit(i, q) ? out[i] * ph : out[i];
      }
    }
    out = std::move(next);
  }
  return out;
}

DenseTensor unitary_tensor(const CircuitProgram& p) {
  const int n = p.num_qubits;
  const size_t dim = size_t{1} << n;
  DenseTensor t{2 * n, std::vector<cplx>(dim * dim)};
  for (size_t in = 0; in < dim; ++in) {
    std::vector<cplx> psi(dim);
    psi[in] = 1;
    for (const Instruction& ins : p.instructions) psi = apply_gate(psi, n, ins);
    for (size_t out = 0; out < dim; ++out) t.amplitudes[in * dim + out] = psi[out];
  }
  return t;
}

CircuitProgram random_unitary_program(int n, int gates, std::mt19937_64& rng, bool clifford) {
  CircuitProgram p;
  p.num_qubits = n;
  const std::vector<Op> ops = clifford ? std::vector<Op>{Op::H, Op::S, Op::S_DAG, Op::X, Op::Z, Op::CX, Op::CZ}
                                       : std::vector<Op>{Op::H, Op::S, Op::T, Op::T_DAG, Op::CX, Op::CZ};
  for (int g = 0; g < gates; ++g) {
    Op op = ops[rng() % ops.size()];
    int a = static_cast<int>(rng() % n);
    if (op == Op::CX || op == Op::CZ) {
      int b = static_cast<int>((a + 1 + rng() % (n - 1)) % n);
      p.instructions.push_back({op, {a, b}, 0});
    } else {
      p.instructions.push_back({op, {a}, 0});
    }
  }
  return p;
}

TEST(ParseCircuit, RoundTrip) {
  const std::string text = "QUBITS 3\nR 0\nRX 1\nH 0\nS 1\nS_DAG 2\nT 0\nT_DAG 1\nX 2\nZ 0\n"
                           "CX 0 1\nCZ 1 2\nTICK\nM 0\nMX 1\n";
  CircuitProgram p = parse_circuit(text);
  EXPECT_EQ(p.num_qubits, 3);
  EXPECT_EQ(serialize_circuit(p), text);
  EXPECT_EQ(parse_circuit(serialize_circuit(p)), p);
}

TEST(ParseCircuit, CommentsAndInferredWidth) {
  CircuitProgram p = parse_circuit("# header\nH 0  # trailing\n\nCX 0 1\n");
  EXPECT_EQ(p.num_qubits, 2);
  EXPECT_EQ(p.instructions.size(), 2u);
}

TEST(ParseCircuit, Errors) {
  try {
    parse_circuit("H 0\n  FOO 1\n");
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2, column 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_circuit("H 0 2\n"), DomainError);   // qubit 1 unused
  EXPECT_THROW(parse_circuit("CX 0\n"), DomainError);
  EXPECT_THROW(parse_circuit("H x\n"), DomainError);
  EXPECT_THROW(parse_circuit("TICK 1\n"), DomainError);
  EXPECT_THROW(parse_circuit("CX 0 0\n"), DomainError);
  EXPECT_THROW(parse_circuit("QUBITS 1\nH 3\n"), DomainError);
}

TEST(TranslateCircuit, EmptyProgramIsIdentity) {
  TranslatedCircuit tc = translate_circuit(parse_circuit("QUBITS 2\n"));
  CircuitProgram empty;
  empty.num_qubits = 2;
  EXPECT_LT(deviation(evaluate(tc.diagram), unitary_tensor(empty)), kTol);
}

TEST(TranslateCircuit, SingleT) {
  EXPECT_EQ(translate_circuit(parse_circuit("T 0\n")).diagram.t_count(), 1);
}

TEST(TranslateCircuit, CliffordProgramsMatchMatrices) {
  std::mt19937_64 rng(1);
  EvalLimits lim;
  lim.max_arity = 16;
  lim.max_spiders = 200;
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 6;
    if (n == 1) n = 2;
    CircuitProgram p = random_unitary_program(n, 4 + trial % 12, rng, trial % 2 == 0);
    TranslatedCircuit tc = translate_circuit(p);
    ASSERT_LT(deviation(evaluate(tc.diagram, lim), unitary_tensor(p)), kTol)
        << serialize_circuit(p);
    EXPECT_EQ(tc.sites.size(), static_cast<size_t>(tc.diagram.num_edges()));
  }
}

TEST(TranslateCircuit, ResetsAndMeasurements) {
  // <0|H|0> and <1|H|+> = <1|0> = 0.
  ZxDiagram a = translate_circuit(parse_circuit("R 0\nH 0\nM 0\n")).diagram;
  EXPECT_NEAR(std::abs(evaluate(a).at(0) - 1 / std::sqrt(2.0)), 0, kTol);
  TranslatedCircuit b = translate_circuit(parse_circuit("RX 0\nH 0\nTICK\nM 0\n"));
  ASSERT_EQ(b.measurement_spiders.size(), 1u);
  EXPECT_EQ(b.diagram.spider(b.measurement_spiders[0]).timeslice, 1);
  EXPECT_NEAR(std::abs(evaluate(b.diagram).at(0) - 1.0), 0, kTol);
  b.diagram.set_phase(b.measurement_spiders[0], Phase::pi());
  EXPECT_NEAR(std::abs(evaluate(b.diagram).at(0)), 0, kTol);
  EXPECT_THROW(translate_circuit(parse_circuit("H 0\nR 0\n")), DomainError);
  EXPECT_THROW(translate_circuit(parse_circuit("R 0\nM 0\nH 0\n")), DomainError);
}

TEST(EdgeSites, ErrorsMatchQubitPaulis) {
  // A Pauli on any edge equals the mapped qubit Paulis inserted in the program.
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    CircuitProgram p = random_unitary_program(3, 8, rng, true);
    TranslatedCircuit tc = translate_circuit(p);
    for (const auto& [e, site] : tc.sites) {
      Pauli pa = static_cast<Pauli>(rng() % 3);
      ErrorRealization r;
      r.errors[e] = pa;
      CircuitProgram q = p;
      std::vector<Instruction> extra;
      for (auto [qubit, pq] : qubit_paulis(site, pa)) {
        if (pq == Pauli::X) extra.push_back({Op::X, {qubit}, 0});
        if (pq == Pauli::Z) extra.push_back({Op::Z, {qubit}, 0});
        if (pq == Pauli::Y) extra.insert(extra.end(), {{Op::Z, {qubit}, 0}, {Op::X, {qubit}, 0}});
      }
      int at = std::min<int>(site.instr + 1, static_cast<int>(q.instructions.size()));
      q.instructions.insert(q.instructions.begin() + at, extra.begin(), extra.end());
      ASSERT_LT(deviation(evaluate(apply_errors(tc.diagram, r)), unitary_tensor(q), Comparison::kUpToPhase),
                kTol)
          << "edge " << e << " " << to_string(pa);
    }
  }
}

TEST(DcCircuit, TranslatesWithExpectedCounts) {
  DcCircuit dc = build_dc_circuit(3, 2);
  TranslatedCircuit tc = translate_circuit(dc.program);
  EXPECT_EQ(tc.diagram.t_count(), 12);
  EXPECT_EQ(tc.measurement_spiders.size(), 6u);
  EXPECT_EQ(dc.detectors.size(), 4u);
  EXPECT_EQ(tc.diagram.arity(), 6);
  EXPECT_EQ(clifford_substitute(dc.program).instructions.size(), dc.program.instructions.size() - 12);
}

TEST(SimulateClifford, DetectorsAreDeterministic) {
  DcCircuit dc = build_dc_circuit(3, 2);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    std::vector<int> m = simulate_clifford(dc.program, {}, seed);
    for (const Detector& det : dc.detectors) {
      int parity = 0;
      for (int k : det) parity ^= m[k];
      EXPECT_EQ(parity, 0);
    }
  }
}

}  // namespace
}  // namespace zxcult
