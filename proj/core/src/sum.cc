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

#include "zxcult/sum.h"

#include <algorithm>

namespace zxcult {

bool DecompositionSum::pure_clifford() const {
  return std::all_of(terms.begin(), terms.end(),
                     [](const Term& t) { return t.diagram.t_count() == 0; });
}

int DecompositionSum::max_t_count() const {
  int m = 0;
  for (const auto& t : terms) m = std::max(m, t.diagram.t_count());
  return m;
}

void DecompositionSum::scale(const CliffordScalar& c) {
  for (auto& t : terms) t.coeff *= c;
}

void DecompositionSum::append(DecompositionSum other) {
  for (auto& t : other.terms) terms.push_back(std::move(t));
}

}  // namespace zxcult
