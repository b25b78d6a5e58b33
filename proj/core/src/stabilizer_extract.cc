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

#include "zxcult/stabilizer_extract.h"

#include <algorithm>
#include <cmath>

#include "zxcult/simplify.h"

namespace zxcult {
namespace {

struct Column {
  int qubit;
  bool is_z;
};

uint8_t bit(const PauliString& p, const Column& c) { return c.is_z ? p.z[c.qubit] : p.x[c.qubit]; }

// Fully reduced echelon form over the given column order; returns the rank.
int reduce(std::vector<PauliString>& rows, const std::vector<Column>& cols) {
  int rank = 0;
  for (const Column& c : cols) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
      if (bit(rows[i], c)) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i != rank && bit(rows[i], c)) rows[i] = multiply(rows[i], rows[rank]);
    }
    ++rank;
  }
  return rank;
}

std::vector<Column> x_then_z(int n) {
  std::vector<Column> cols;
  for (int q = 0; q < n; ++q) cols.push_back({q, false});
  for (int q = 0; q < n; ++q) cols.push_back({q, true});
  return cols;
}

}  // namespace

int StabilizerState::x_rank() const {
  int r = 0;
  for (const auto& g : generators) {
    if (std::any_of(g.x.begin(), g.x.end(), [](uint8_t b) { return b; })) ++r;
  }
  return r;
}

std::string StabilizerState::to_string() const {
  std::string s;
  for (size_t i = 0; i < generators.size(); ++i) {
    if (i) s += ' ';
    s += generators[i].to_string();
  }
  return s;
}

StabilizerState canonicalize(int n, std::vector<PauliString> generators) {
  int rank = reduce(generators, x_then_z(n));
  generators.resize(rank);
  return StabilizerState{n, std::move(generators)};
}

std::optional<StabilizerState> diagram_stabilizer(const ZxDiagram& input) {
  if (input.t_count() != 0) throw DomainError("diagram_stabilizer: non-Clifford spider present");
  ZxDiagram d = clifford_simp(input, SimpOptions{SimpLevel::kFull, false});
  if (d.scalar().is_zero()) return std::nullopt;
  const std::vector<int> legs = d.boundary_order();
  const int n_legs = static_cast<int>(legs.size());

  // One qubit per leg, one per edge end, one per boundary half-edge.
  int next = n_legs;
  std::vector<std::vector<int>> ends(d.spider_capacity());
  std::vector<std::pair<int, int>> edge_qubits(d.edge_capacity(), {-1, -1});
  for (int e : d.edge_ids()) {
    edge_qubits[e] = {next, next + 1};
    ends[d.edge(e).a].push_back(next);
    ends[d.edge(e).b].push_back(next + 1);
    next += 2;
  }
  Tableau t(next);
  for (int v : d.spider_ids()) {
    const Spider& sp = d.spider(v);
    std::vector<int> qs = ends[v];
    if (sp.kind == SpiderKind::Boundary) {
      int leg = static_cast<int>(std::find(legs.begin(), legs.end(), v) - legs.begin());
      qs.insert(qs.begin(), leg);
    }
    if (qs.empty()) continue;
    t.h(qs[0]);
    for (size_t i = 1; i < qs.size(); ++i) t.cx(qs[0], qs[i]);
    for (int k = 0; k < sp.phase.n / 2; ++k) t.s(qs[0]);
    if (sp.kind != SpiderKind::Boundary && sp.color == Color::X) {
      for (int q : qs) t.h(q);
    }
  }
  for (int e : d.edge_ids()) {
    auto [qa, qb] = edge_qubits[e];
    if (d.edge(e).kind == EdgeKind::Hadamard) t.h(qa);
    t.cx(qa, qb);
    t.h(qa);
    if (!t.postselect(qa, 0) || !t.postselect(qb, 0)) return std::nullopt;
  }
  // Every non-leg qubit is now |0>; eliminate those columns first.
  std::vector<PauliString> rows = t.stabilizers();
  std::vector<Column> cols;
  for (int q = n_legs; q < next; ++q) {
    cols.push_back({q, false});
    cols.push_back({q, true});
  }
  int rest_rank = reduce(rows, cols);
  std::vector<PauliString> legs_only;
  for (size_t i = rest_rank; i < rows.size(); ++i) {
    PauliString p(n_legs);
    for (int q = 0; q < n_legs; ++q) {
      p.x[q] = rows[i].x[q];
      p.z[q] = rows[i].z[q];
    }
    p.negative = rows[i].negative;
    legs_only.push_back(std::move(p));
  }
  StabilizerState s = canonicalize(n_legs, std::move(legs_only));
  if (static_cast<int>(s.generators.size()) != n_legs) {
    throw std::logic_error("diagram_stabilizer: generator count mismatch");
  }
  return s;
}

std::vector<uint8_t> support_minimum(const StabilizerState& s) {
  // Z-type generators constrain the support: z.x = sign.
  std::vector<PauliString> rows;
  for (const auto& g : s.generators) {
    if (std::none_of(g.x.begin(), g.x.end(), [](uint8_t b) { return b; })) rows.push_back(g);
  }
  std::vector<Column> cols;
  for (int q = s.n - 1; q >= 0; --q) cols.push_back({q, true});
  // Pivots land on the highest-index column of each row, so setting every
  // free variable to zero gives the lexicographic minimum.
  std::vector<uint8_t> x(s.n, 0);
  std::vector<std::pair<int, int>> pivots;  // (row, column)
  int rank = 0;
  for (const Column& c : cols) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i) {
      if (rows[i].z[c.qubit]) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || !rows[i].z[c.qubit]) continue;
      for (int q = 0; q < s.n; ++q) rows[i].z[q] ^= rows[rank].z[q];
      rows[i].negative ^= rows[rank].negative;
    }
    pivots.push_back({rank, c.qubit});
    ++rank;
  }
  for (auto [row, q] : pivots) x[q] = rows[row].negative ? 1 : 0;
  return x;
}

std::vector<std::complex<double>> stabilizer_statevector(const StabilizerState& s) {
  using cd = std::complex<double>;
  const size_t dim = size_t{1} << s.n;
  auto x0 = support_minimum(s);
  size_t idx0 = 0;
  for (int q = 0; q < s.n; ++q) idx0 = (idx0 << 1) | x0[q];
  std::vector<cd> v(dim, 0);
  v[idx0] = 1;
  for (const auto& g : s.generators) {
    size_t xmask = 0, zmask = 0;
    int ys = 0;
    for (int q = 0; q < s.n; ++q) {
      size_t b = size_t{1} << (s.n - 1 - q);
      if (g.x[q]) xmask |= b;
      if (g.z[q]) zmask |= b;
      ys += g.x[q] & g.z[q];
    }
    cd base = std::pow(cd(0, 1), ys) * (g.negative ? -1.0 : 1.0);
    std::vector<cd> w(v);
    for (size_t i = 0; i < dim; ++i) {
      if (v[i] == cd(0)) continue;
      double sign = (__builtin_popcountll(i & zmask) % 2) ? -1.0 : 1.0;
      w[i ^ xmask] += base * sign * v[i];
    }
    for (auto& a : w) a *= 0.5;
    v = std::move(w);
  }
  double norm = 0;
  for (const auto& a : v) norm += std::norm(a);
  cd fix = std::abs(v[idx0]) / v[idx0] / std::sqrt(norm);
  for (auto& a : v) a *= fix;
  return v;
}

CliffordScalar basis_amplitude(const ZxDiagram& d, const std::vector<uint8_t>& bits) {
  const std::vector<int> legs = d.boundary_order();
  if (bits.size() != legs.size()) throw DomainError("basis_amplitude: wrong number of bits");
  ZxDiagram c = d;
  for (size_t i = 0; i < legs.size(); ++i) {
    Spider& s = c.spider(legs[i]);
    s.kind = SpiderKind::Internal;
    s.color = Color::X;
    s.phase = Phase(4 * bits[i]);
    c.mul_scalar(CliffordScalar::sqrt2_pow(-1));
  }
  c.mutable_inputs().clear();
  c.mutable_outputs().clear();
  return reduce_to_scalar(c);
}

std::optional<std::pair<int, int>> as_unit_monomial(const CliffordScalar& s) {
  const auto& c = s.coeffs();
  int nonzero = -1;
  for (int i = 0; i < 4; ++i) {
    if (c[i] == 0) continue;
    if (nonzero >= 0 || (c[i] != 1 && c[i] != -1)) return std::nullopt;
    nonzero = i;
  }
  if (nonzero < 0) return std::nullopt;
  int j = nonzero + (c[nonzero] < 0 ? 4 : 0);
  return std::make_pair(j, s.half_pow());
}

std::vector<TableauTerm> export_tableau_sum(const DecompositionSum& sum) {
  std::vector<TableauTerm> out;
  for (const auto& term : sum.terms) {
    if (term.diagram.t_count() != 0) {
      throw DomainError("export_tableau_sum: term with T-count " +
                        std::to_string(term.diagram.t_count()));
    }
    if (term.coeff.is_zero()) continue;
    auto state = diagram_stabilizer(term.diagram);
    if (!state) continue;
    CliffordScalar amp = basis_amplitude(term.diagram, support_minimum(*state));
    out.push_back({term.coeff * amp.mul_sqrt2_pow(state->x_rank()), std::move(*state)});
  }
  return out;
}

}  // namespace zxcult
