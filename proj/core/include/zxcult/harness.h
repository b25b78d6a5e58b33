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

#ifndef ZXCULT_HARNESS_H_
#define ZXCULT_HARNESS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zxcult/decomposition.h"
#include "zxcult/diagram.h"
#include "zxcult/noise.h"
#include "zxcult/pauliweb.h"

namespace zxcult {

enum class ShotMode { kPostselectPlus1, kMeasurementFlips, kWebPostselect };

ShotMode parse_shot_mode(const std::string& s);
const char* to_string(ShotMode m);

struct ShotRecord {
  uint64_t seed = 0;
  ErrorRealization realization;
  std::optional<FlipRecord> flips;
  bool accepted = true;
  bool decomposed = false;      // decompose_full ran for this shot
  std::optional<int64_t> chi;   // absent for discarded shots
  int64_t raw_chi = 0;
  bool failed = false;          // chi cap exceeded
  int rejected_by = -1;         // first violated web
  double seconds = 0;
};

struct SweepStats {
  double p = 0;
  int shots = 0;
  int accepted = 0;
  double discard_ratio = 0;
  double mean_chi = 0;  // accepted, non-failed shots
  int64_t max_chi = 0;  // failed shots count as the cap
  int failed_shots = 0;
  double seconds = 0;
};

ShotRecord run_shot(const ZxDiagram& d, const std::vector<PauliWeb>* webs, double p, ShotMode mode,
                    const DecompositionStrategy& strategy, uint64_t seed);

struct SweepConfig {
  std::vector<double> p_list;
  int shots = 100;
  ShotMode mode = ShotMode::kPostselectPlus1;
  DecompositionStrategy strategy;
  uint64_t master_seed = 0;
  int workers = 1;
};

// Seed of shot `shot` at grid point `p_index`.
uint64_t shot_seed(uint64_t master, int p_index, int shot);

// Shots run on `workers` threads; results are merged in shot order, so the
// output does not depend on the worker count.
std::vector<SweepStats> run_sweep(const ZxDiagram& d, const std::vector<PauliWeb>* webs,
                                  const SweepConfig& config,
                                  std::vector<std::vector<ShotRecord>>* shots_out = nullptr);

// p,shots,accepted,discard_ratio,mean_chi,max_chi,failed_shots,seconds
// (seconds is written as 0 unless `timing` is set, keeping output
// reproducible).
std::string sweep_csv(const std::vector<SweepStats>& stats, bool timing = false);
std::string shot_jsonl(const ShotRecord& r, double p);

}  // namespace zxcult

#endif  // ZXCULT_HARNESS_H_
