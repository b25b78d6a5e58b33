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

#ifndef ZXCULT_BUILDERS_H_
#define ZXCULT_BUILDERS_H_

#include <vector>

#include "zxcult/diagram.h"

namespace zxcult {

// Normalised cat state: an X hub with m Z(pi/4) legs, one output per leg.
ZxDiagram build_cat_state(int m);

// m disjoint normalised |T> states.
ZxDiagram build_t_states(int m);

struct FlagFreeDc {
  ZxDiagram diagram;
  int hub = -1;  // the GHZ-control spider; cutting it leaves two Clifford terms
};

// Flag-free double check on n qubits; equals I^n + (X S^dag)^n exactly.
FlagFreeDc build_flag_free_dc_parts(int n);
ZxDiagram build_flag_free_dc(int n);

struct CatChain {
  ZxDiagram diagram;
  std::vector<int> hubs;
};

// Cats of the given sizes joined leg-to-leg through Z(-pi/2) connectors,
// equal to one normalised cat with sum(sizes) - 2(k - 1) legs. With `cap`,
// the last free leg is closed by a T^dag effect and the diagram equals
// |T>^(legs - 1) exactly.
CatChain build_cat_chain(const std::vector<int>& sizes, bool cap);

}  // namespace zxcult

#endif  // ZXCULT_BUILDERS_H_
