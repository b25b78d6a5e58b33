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

#ifndef ZXCULT_SIMPLIFY_H_
#define ZXCULT_SIMPLIFY_H_

#include <string>
#include <vector>

#include "zxcult/diagram.h"
#include "zxcult/scalar.h"

namespace zxcult {

struct RewriteStep {
  std::string rule;
  std::vector<int> spiders;  // primary vertex first
};

struct RewriteTrace {
  std::vector<RewriteStep> steps;
  bool graph_like = false;  // produced by clifford_simp
};

enum class SimpLevel {
  kBasic,  // fusion, identity removal, Hopf, isolated spiders
  kFull,   // + local complementation, pivoting, gadget handling
};

struct SimpOptions {
  SimpLevel level = SimpLevel::kFull;
  // Measurement spiders are never absorbed when set.
  bool keep_measurements = true;
};

// Fuses every pair of same-colour internal spiders joined by a plain edge
// and drops plain self-loops. Boundary and measurement spiders are kept.
ZxDiagram fuse_spiders(const ZxDiagram& d, RewriteTrace* trace = nullptr);

ZxDiagram clifford_simp(const ZxDiagram& d, const SimpOptions& options = {},
                        RewriteTrace* trace = nullptr);

// Re-applies a trace produced by fuse_spiders or clifford_simp (with the
// same options) to the original diagram.
ZxDiagram replay_trace(const ZxDiagram& d, const RewriteTrace& trace,
                       const SimpOptions& options = {});

// Exact value of a closed Clifford diagram.
CliffordScalar reduce_to_scalar(const ZxDiagram& d);

}  // namespace zxcult

#endif  // ZXCULT_SIMPLIFY_H_
