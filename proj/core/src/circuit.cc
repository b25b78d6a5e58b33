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

#include <array>
#include <set>
#include <sstream>

#include "zxcult/diagram_io.h"
#include "zxcult/tableau.h"

namespace zxcult {
namespace {

using S = CliffordScalar;

constexpr std::array<const char*, 14> kOpNames = {"R", "RX", "H",  "S",  "S_DAG", "T", "T_DAG",
                                                  "X", "Z",  "CX", "CZ", "M",     "MX", "TICK"};

bool two_qubit(Op op) { return op == Op::CX || op == Op::CZ; }

[[noreturn]] void fail_at(int line, int col, const std::string& msg) {
  throw DomainError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

struct Token {
  std::string text;
  int col;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) && line[j] != '#') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

int parse_index(const Token& t, int line) {
  if (t.text.empty() || t.text.size() > 9 ||
      t.text.find_first_not_of("0123456789") != std::string::npos) {
    fail_at(line, t.col, "expected a qubit index, got '" + t.text + "'");
  }
  return std::stoi(t.text);
}

// Qubits acted on by an instruction that places a spider on their wire.
bool places_spider(Op op) { return op != Op::H && op != Op::TICK; }

}  // namespace

const char* to_string(Op op) { return kOpNames[static_cast<size_t>(op)]; }

CircuitProgram parse_circuit(const std::string& text) {
  CircuitProgram p;
  int declared = -1;
  int max_q = -1;
  std::set<int> used;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    auto toks = tokenize(raw);
    if (toks.empty()) continue;
    if (toks[0].text == "QUBITS") {
      if (toks.size() != 2) fail_at(line, toks[0].col, "QUBITS takes one count");
      if (declared >= 0) fail_at(line, toks[0].col, "QUBITS declared twice");
      declared = parse_index(toks[1], line);
      continue;
    }
    int op_index = -1;
    for (size_t k = 0; k < kOpNames.size(); ++k) {
      if (toks[0].text == kOpNames[k]) op_index = static_cast<int>(k);
    }
    if (op_index < 0) fail_at(line, toks[0].col, "unknown gate '" + toks[0].text + "'");
    Instruction ins;
    ins.op = static_cast<Op>(op_index);
    ins.line = line;
    for (size_t k = 1; k < toks.size(); ++k) ins.targets.push_back(parse_index(toks[k], line));
    if (ins.op == Op::TICK) {
      if (!ins.targets.empty()) fail_at(line, toks[1].col, "TICK takes no targets");
    } else if (ins.targets.empty()) {
      fail_at(line, toks[0].col, std::string(to_string(ins.op)) + " needs targets");
    }
    if (two_qubit(ins.op)) {
      if (ins.targets.size() % 2) fail_at(line, toks.back().col, "two-qubit gate needs target pairs");
    }
    std::set<int> here;
    for (size_t k = 0; k < ins.targets.size(); ++k) {
      if (!here.insert(ins.targets[k]).second) fail_at(line, toks[k + 1].col, "qubit repeated in one instruction");
    }
    for (int q : ins.targets) {
      used.insert(q);
      max_q = std::max(max_q, q);
    }
    p.instructions.push_back(std::move(ins));
  }
  if (declared >= 0) {
    if (max_q >= declared) {
      throw DomainError("qubit index " + std::to_string(max_q) + " exceeds QUBITS " + std::to_string(declared));
    }
    p.num_qubits = declared;
  } else {
    p.num_qubits = max_q + 1;
    for (int q = 0; q <= max_q; ++q) {
      if (!used.count(q)) throw DomainError("non-dense qubit indices: qubit " + std::to_string(q) + " unused");
    }
  }
  return p;
}

std::string serialize_circuit(const CircuitProgram& p) {
  std::ostringstream out;
  out << "QUBITS " << p.num_qubits << "\n";
  for (const Instruction& ins : p.instructions) {
    out << to_string(ins.op);
    for (int q : ins.targets) out << ' ' << q;
    out << "\n";
  }
  return out.str();
}

std::vector<std::pair<int, Pauli>> qubit_paulis(const EdgeSite& site, Pauli p) {
  switch (site.kind) {
    case EdgeSite::kWire:
      return {{site.q0, p}};
    case EdgeSite::kCxLink:
      // Z fuses into the control spider, X into the target spider.
      if (p == Pauli::Z) return {{site.q0, Pauli::Z}};
      if (p == Pauli::X) return {{site.q1, Pauli::X}};
      return {{site.q0, Pauli::Z}, {site.q1, Pauli::X}};
    case EdgeSite::kCzLink:
      // X crosses the Hadamard and becomes Z on the second qubit.
      if (p == Pauli::Z) return {{site.q0, Pauli::Z}};
      if (p == Pauli::X) return {{site.q1, Pauli::Z}};
      return {{site.q0, Pauli::Z}, {site.q1, Pauli::Z}};
  }
  return {};
}

TranslatedCircuit translate_circuit(const CircuitProgram& p) {
  const int n = p.num_qubits;
  TranslatedCircuit tc;
  ZxDiagram& d = tc.diagram;
  std::vector<bool> starts_with_reset(n, false), touched(n, false);
  for (const Instruction& ins : p.instructions) {
    for (int q : ins.targets) {
      if (q < 0 || q >= n) throw DomainError("qubit index " + std::to_string(q) + " out of range");
      if (!touched[q]) starts_with_reset[q] = ins.op == Op::R || ins.op == Op::RX;
      touched[q] = true;
    }
  }
  struct Wire {
    bool live = false;
    int frontier = -1;
    int instr = -1;
    EdgeKind pending = EdgeKind::Plain;
  };
  std::vector<Wire> w(n);
  for (int q = 0; q < n; ++q) {
    if (!starts_with_reset[q]) w[q] = {true, d.add_input(), -1, EdgeKind::Plain};
  }
  int tick = 0;
  auto attach = [&](int q, int s, int i) {
    int e = d.connect(w[q].frontier, s, w[q].pending);
    tc.sites[e] = {EdgeSite::kWire, w[q].instr, q, -1};
    w[q].frontier = s;
    w[q].instr = i;
    w[q].pending = EdgeKind::Plain;
  };
  auto need_live = [&](int q, const Instruction& ins) {
    if (!w[q].live) {
      throw DomainError("line " + std::to_string(ins.line) + ": qubit " + std::to_string(q) +
                        " used after measurement without reset");
    }
  };
  for (int i = 0; i < static_cast<int>(p.instructions.size()); ++i) {
    const Instruction& ins = p.instructions[i];
    switch (ins.op) {
      case Op::TICK:
        ++tick;
        break;
      case Op::R:
      case Op::RX:
        for (int q : ins.targets) {
          if (w[q].live) {
            throw DomainError("line " + std::to_string(ins.line) + ": reset of live qubit " +
                              std::to_string(q) + " (measure it first)");
          }
          int s = d.add_spider(ins.op == Op::R ? Color::X : Color::Z, Phase(0));
          d.mul_scalar(S::sqrt2_pow(-1));
          w[q] = {true, s, i, EdgeKind::Plain};
        }
        break;
      case Op::M:
      case Op::MX:
        for (int q : ins.targets) {
          need_live(q, ins);
          int s = d.add_spider(ins.op == Op::M ? Color::X : Color::Z, Phase(0), SpiderKind::Measurement, tick);
          d.mul_scalar(S::sqrt2_pow(-1));
          attach(q, s, i);
          tc.measurement_spiders.push_back(s);
          w[q].live = false;
        }
        break;
      case Op::H:
        for (int q : ins.targets) {
          need_live(q, ins);
          w[q].pending = w[q].pending == EdgeKind::Plain ? EdgeKind::Hadamard : EdgeKind::Plain;
        }
        break;
      case Op::CX:
      case Op::CZ:
        for (size_t k = 0; k < ins.targets.size(); k += 2) {
          int a = ins.targets[k], b = ins.targets[k + 1];
          need_live(a, ins);
          need_live(b, ins);
          int sa = d.add_spider(Color::Z, Phase(0));
          int sb = d.add_spider(ins.op == Op::CX ? Color::X : Color::Z, Phase(0));
          attach(a, sa, i);
          attach(b, sb, i);
          int e = d.connect(sa, sb, ins.op == Op::CX ? EdgeKind::Plain : EdgeKind::Hadamard);
          tc.sites[e] = {ins.op == Op::CX ? EdgeSite::kCxLink : EdgeSite::kCzLink, i, a, b};
          d.mul_scalar(S::sqrt2_pow(1));
        }
        break;
      default: {
        Color c = ins.op == Op::X ? Color::X : Color::Z;
        int units = 0;
        switch (ins.op) {
          case Op::S: units = 2; break;
          case Op::S_DAG: units = -2; break;
          case Op::T: units = 1; break;
          case Op::T_DAG: units = -1; break;
          default: units = 4; break;  // X, Z
        }
        for (int q : ins.targets) {
          need_live(q, ins);
          attach(q, d.add_spider(c, Phase(units)), i);
        }
      }
    }
  }
  for (int q = 0; q < n; ++q) {
    if (w[q].live) attach(q, d.add_output(), static_cast<int>(p.instructions.size()));
  }
  return tc;
}

ZxDiagram load_circuit(const std::string& path) {
  return translate_circuit(parse_circuit(read_text_file(path))).diagram;
}

CircuitProgram clifford_substitute(const CircuitProgram& p) {
  CircuitProgram out;
  out.num_qubits = p.num_qubits;
  for (const Instruction& ins : p.instructions) {
    if (ins.op != Op::T && ins.op != Op::T_DAG) out.instructions.push_back(ins);
  }
  return out;
}

PauliWeb web_from_detector(const CircuitProgram& p, const TranslatedCircuit& tc, const Detector& det,
                           int id) {
  const int n = p.num_qubits;
  std::map<std::pair<int, int>, int> wire_edge;  // (instr, qubit) -> edge leaving that spider
  std::map<int, std::vector<int>> link_edges;    // instr -> link edges in target order
  for (const auto& [e, site] : tc.sites) {
    if (site.kind == EdgeSite::kWire) {
      wire_edge[{site.instr, site.q0}] = e;
    } else {
      link_edges[site.instr].push_back(e);
    }
  }
  std::set<int> in_det;
  for (int k : det) {
    if (k < 0 || k >= static_cast<int>(tc.measurement_spiders.size())) {
      throw DomainError("detector references missing measurement " + std::to_string(k));
    }
    if (!in_det.insert(k).second) throw DomainError("detector repeats measurement " + std::to_string(k));
  }
  // Measurement record index of each (instr, target position).
  std::map<std::pair<int, int>, int> record;
  {
    int k = 0;
    for (int i = 0; i < static_cast<int>(p.instructions.size()); ++i) {
      const Instruction& ins = p.instructions[i];
      if (ins.op != Op::M && ins.op != Op::MX) continue;
      for (int q : ins.targets) record[{i, q}] = k++;
    }
  }

  std::vector<uint8_t> x(n, 0), z(n, 0);
  PauliWeb web;
  web.id = id;
  auto label = [&](int e, int xb, int zb) {
    if (!xb && !zb) return;
    web.highlights[{e, 0}] = xb && zb ? Pauli::Y : (xb ? Pauli::X : Pauli::Z);
  };
  auto record_after = [&](int instr, int q) {
    auto it = wire_edge.find({instr, q});
    if (it != wire_edge.end()) label(it->second, x[q], z[q]);
  };
  for (int i = static_cast<int>(p.instructions.size()) - 1; i >= 0; --i) {
    const Instruction& ins = p.instructions[i];
    if (places_spider(ins.op)) {
      for (int q : ins.targets) record_after(i, q);
    }
    switch (ins.op) {
      case Op::H:
        for (int q : ins.targets) std::swap(x[q], z[q]);
        break;
      case Op::S:
      case Op::S_DAG:
        for (int q : ins.targets) z[q] ^= x[q];
        break;
      case Op::CX:
      case Op::CZ:
        for (size_t k = 0; k < ins.targets.size(); k += 2) {
          int a = ins.targets[k], b = ins.targets[k + 1];
          const uint8_t za_after = z[a];
          if (ins.op == Op::CX) {
            x[b] ^= x[a];
            z[a] ^= z[b];
          } else {
            z[b] ^= x[a];
            z[a] ^= x[b];
          }
          label(link_edges.at(i).at(k / 2), x[a], za_after ^ z[a]);
        }
        break;
      case Op::M:
      case Op::MX:
        for (int q : ins.targets) {
          if (in_det.count(record.at({i, q}))) (ins.op == Op::M ? z : x)[q] ^= 1;
        }
        break;
      case Op::R:
      case Op::RX:
        for (int q : ins.targets) {
          if ((ins.op == Op::R ? x : z)[q]) {
            throw DomainError("detector is not deterministic: region reaches a reset of qubit " +
                              std::to_string(q) + " with the wrong Pauli");
          }
          x[q] = z[q] = 0;
        }
        break;
      default:
        break;  // Paulis only change signs; T gates are rounded to identity
    }
  }
  for (int q = 0; q < n; ++q) {
    if (x[q] || z[q]) throw DomainError("detector region reaches the circuit inputs");
  }
  return complete_web(tc.diagram, std::move(web));
}

DcCircuit build_dc_circuit(int n, int rounds) {
  if (n < 2) throw DomainError("build_dc_circuit: n must be at least 2");
  if (rounds < 1) throw DomainError("build_dc_circuit: rounds must be at least 1");
  DcCircuit out;
  CircuitProgram& p = out.program;
  p.num_qubits = 2 * n;
  auto add = [&](Op op, std::vector<int> t) { p.instructions.push_back({op, std::move(t), 0}); };
  auto ctrl = [n](int k) { return n + k; };
  int records = 0;
  for (int r = 0; r < rounds; ++r) {
    add(Op::RX, {ctrl(0)});
    std::vector<int> zeros;
    for (int k = 1; k < n; ++k) zeros.push_back(ctrl(k));
    add(Op::R, zeros);
    add(Op::TICK, {});
    for (int k = 0; k + 1 < n; ++k) add(Op::CX, {ctrl(k), ctrl(k + 1)});
    add(Op::TICK, {});
    for (int k = 0; k < n; ++k) {
      add(Op::T_DAG, {k});
      add(Op::CX, {ctrl(k), k});
      add(Op::T, {k});
    }
    add(Op::TICK, {});
    for (int k = n - 2; k >= 0; --k) add(Op::CX, {ctrl(k), ctrl(k + 1)});
    add(Op::TICK, {});
    add(Op::MX, {ctrl(0)});
    add(Op::M, zeros);
    add(Op::TICK, {});
    records += 1;
    for (int k = 1; k < n; ++k) out.detectors.push_back({records++});
  }
  return out;
}

std::vector<int> simulate_clifford(const CircuitProgram& p,
                                   const std::multimap<int, std::pair<int, Pauli>>& injections,
                                   uint64_t seed) {
  Tableau t(p.num_qubits);
  std::mt19937_64 rng = make_rng(seed);
  auto coin = [&] { return static_cast<int>(rng() >> 63); };
  auto inject = [&](int instr) {
    auto [lo, hi] = injections.equal_range(instr);
    for (auto it = lo; it != hi; ++it) {
      auto [q, pauli] = it->second;
      if (pauli == Pauli::X) t.x(q);
      if (pauli == Pauli::Y) t.y(q);
      if (pauli == Pauli::Z) t.z(q);
    }
  };
  std::vector<int> out;
  inject(-1);
  for (int i = 0; i < static_cast<int>(p.instructions.size()); ++i) {
    const Instruction& ins = p.instructions[i];
    switch (ins.op) {
      case Op::R:
      case Op::RX:
        for (int q : ins.targets) {
          if (t.measure(q, coin)) t.x(q);
          if (ins.op == Op::RX) t.h(q);
        }
        break;
      case Op::M:
        for (int q : ins.targets) out.push_back(t.measure(q, coin));
        break;
      case Op::MX:
        for (int q : ins.targets) {
          t.h(q);
          out.push_back(t.measure(q, coin));
          t.h(q);
        }
        break;
      case Op::H: for (int q : ins.targets) t.h(q); break;
      case Op::S: for (int q : ins.targets) t.s(q); break;
      case Op::S_DAG: for (int q : ins.targets) t.s_dag(q); break;
      case Op::X: for (int q : ins.targets) t.x(q); break;
      case Op::Z: for (int q : ins.targets) t.z(q); break;
      case Op::CX:
        for (size_t k = 0; k < ins.targets.size(); k += 2) t.cx(ins.targets[k], ins.targets[k + 1]);
        break;
      case Op::CZ:
        for (size_t k = 0; k < ins.targets.size(); k += 2) t.cz(ins.targets[k], ins.targets[k + 1]);
        break;
      default:
        break;  // TICK; T and T_DAG rounded to identity
    }
    inject(i);
  }
  return out;
}

}  // namespace zxcult
