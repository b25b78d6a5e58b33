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

#ifndef ZXCULT_DECOMPOSITION_H_
#define ZXCULT_DECOMPOSITION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zxcult/diagram.h"
#include "zxcult/sum.h"

namespace zxcult {

enum class Secondary { kMagicCat, kBss, kCutsThenBss };
enum class Target { kPureClifford, kAtMostOneT };

struct DecompositionStrategy {
  int cut_budget = 64;  // greedy cuts along any branch
  Secondary secondary = Secondary::kMagicCat;
  Target target = Target::kPureClifford;
  int64_t chi_cap = 1000000;
  std::vector<int> fixed_cuts;  // cut first, in order, before any heuristic
  bool collect = true;          // merge equal terms after expansion
};

struct DecompositionResult {
  DecompositionSum sum;  // collected when strategy.collect is set
  int64_t raw_chi = 0;   // non-zero terms before collection
  int64_t chi = 0;       // terms in `sum`
  bool complete = true;  // false if the cap or the target was not reached
  int cuts = 0;          // cut operations performed
  int secondary_steps = 0;
};

// Splits an internal spider into its two basis branches.
DecompositionSum cut_spider(const ZxDiagram& d, int v);

// X hub with four or six plain-connected degree-2 odd-phase Z legs.
DecompositionSum cat_decompose(const ZxDiagram& d, int hub);

// Exact six-term decomposition of six T-like spiders.
DecompositionSum bss_decompose(const ZxDiagram& d, const std::vector<int>& t_spiders);

// Replaces r T-like spiders by a capped magic cat structure with r + 1 legs
// (r = 3 or 5) and decomposes it; each term keeps the one-T cap.
DecompositionSum magic_cat_step(const ZxDiagram& d, const std::vector<int>& t_spiders);

DecompositionResult decompose_full(const ZxDiagram& d, const DecompositionStrategy& strategy);

// Cuts the single remaining T-like spider of every one-T term.
DecompositionSum to_pure_clifford(const DecompositionSum& sum);

// Merges terms describing the same stabiliser state (pure Clifford terms)
// or the same simplified diagram (others); coefficients add exactly.
DecompositionSum collect_terms(const DecompositionSum& sum);

// Terms produced by a chain of cat_4/cat_6 decompositions for cat_m.
int64_t cat_chain_terms(int m);
// Pure Clifford terms for |T>^k via the capped cat chain.
int64_t pure_cat_terms(int t_count);
// Anchored estimates; nullopt for t-counts without an anchor.
std::optional<int64_t> estimate_cat_terms(int t_count);

Secondary parse_secondary(const std::string& s);
Target parse_target(const std::string& s);
const char* to_string(Secondary s);
const char* to_string(Target t);

}  // namespace zxcult

#endif  // ZXCULT_DECOMPOSITION_H_
