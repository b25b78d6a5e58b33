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

#ifndef ZXCULT_SUM_H_
#define ZXCULT_SUM_H_

#include <vector>

#include "zxcult/diagram.h"
#include "zxcult/scalar.h"

namespace zxcult {

struct Term {
  CliffordScalar coeff = CliffordScalar::one();
  ZxDiagram diagram;
};

// Weighted sum of diagrams sharing one boundary arity/order.
struct DecompositionSum {
  std::vector<Term> terms;

  int chi() const { return static_cast<int>(terms.size()); }
  bool pure_clifford() const;
  int max_t_count() const;
  void add(const CliffordScalar& c, ZxDiagram d) { terms.push_back(Term{c, std::move(d)}); }
  // Multiplies every coefficient by `c`.
  void scale(const CliffordScalar& c);
  void append(DecompositionSum other);
};

}  // namespace zxcult

#endif  // ZXCULT_SUM_H_
