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

#ifndef ZXCULT_ORACLE_H_
#define ZXCULT_ORACLE_H_

#include <complex>
#include <cstdint>
#include <vector>

#include "zxcult/diagram.h"
#include "zxcult/sum.h"

namespace zxcult {

using cplx = std::complex<double>;

// Amplitudes over the ordered boundary legs (inputs then outputs); the first
// leg is the most significant bit of the index.
struct DenseTensor {
  int arity = 0;
  std::vector<cplx> amplitudes;

  cplx at(uint64_t index) const { return amplitudes.at(index); }
  double norm() const;
};

struct EvalLimits {
  int max_arity = 14;
  int max_spiders = 30;
  int max_width = 24;  // largest intermediate factor, in variables
};

// Brute-force contraction by variable elimination (greedy min-degree order,
// lowest variable first on ties).
DenseTensor evaluate(const ZxDiagram& d, const EvalLimits& limits = {});

enum class Comparison {
  kExact,         // max |a − b|
  kUpToPhase,     // min over unit-modulus λ of max |a − λ b|
  kProportional,  // both normalised, then up to phase
};

double deviation(const DenseTensor& a, const DenseTensor& b,
                 Comparison mode = Comparison::kExact);

DenseTensor evaluate_sum(const DecompositionSum& sum, const EvalLimits& limits = {});

// max over boundary assignments of |Σ c_j T_j − T_ref| (or the chosen mode).
double compare_sum(const DecompositionSum& sum, const ZxDiagram& reference,
                   Comparison mode = Comparison::kExact, const EvalLimits& limits = {});

}  // namespace zxcult

#endif  // ZXCULT_ORACLE_H_
