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

#ifndef ZXCULT_STABILIZER_EXTRACT_H_
#define ZXCULT_STABILIZER_EXTRACT_H_

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zxcult/diagram.h"
#include "zxcult/scalar.h"
#include "zxcult/sum.h"
#include "zxcult/tableau.h"

namespace zxcult {

// A stabiliser state on n legs, with generators in canonical reduced
// row-echelon form (X columns first). The state's global phase is fixed so
// that its amplitude on support_minimum() is real and positive.
struct StabilizerState {
  int n = 0;
  std::vector<PauliString> generators;

  bool operator==(const StabilizerState&) const = default;
  bool operator<(const StabilizerState& o) const { return generators < o.generators; }
  // log2 of the support size.
  int x_rank() const;
  std::string to_string() const;
};

StabilizerState canonicalize(int n, std::vector<PauliString> generators);

// The state described by a Clifford diagram's open legs (inputs then
// outputs), or nullopt when the diagram evaluates to zero.
std::optional<StabilizerState> diagram_stabilizer(const ZxDiagram& d);

// Lexicographically smallest basis string in the support (leg 0 first).
std::vector<uint8_t> support_minimum(const StabilizerState& s);

// Normalised dense amplitudes (leg 0 is the most significant index bit).
std::vector<std::complex<double>> stabilizer_statevector(const StabilizerState& s);

// Exact amplitude <bits|D> of a Clifford diagram.
CliffordScalar basis_amplitude(const ZxDiagram& d, const std::vector<uint8_t>& bits);

// Returns (j, m) when s = omega^j * sqrt2^m.
std::optional<std::pair<int, int>> as_unit_monomial(const CliffordScalar& s);

struct TableauTerm {
  CliffordScalar coeff;  // term = coeff * |state>
  StabilizerState state;
};

// One entry per non-zero term; throws DomainError on non-Clifford terms.
std::vector<TableauTerm> export_tableau_sum(const DecompositionSum& sum);

}  // namespace zxcult

#endif  // ZXCULT_STABILIZER_EXTRACT_H_
