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

#include "zxcult/harness.h"

#include "gtest/gtest.h"
#include "zxcult/builders.h"
#include "zxcult/circuit.h"

namespace zxcult {
namespace {

struct WebSetup {
  DcCircuit dc = build_dc_circuit(2, 1);
  TranslatedCircuit tc = translate_circuit(dc.program);
  std::vector<PauliWeb> webs;
  WebSetup() {
    for (size_t k = 0; k < dc.detectors.size(); ++k) {
      webs.push_back(web_from_detector(dc.program, tc, dc.detectors[k], static_cast<int>(k)));
    }
  }
};

DecompositionStrategy dc_strategy(const FlagFreeDc& dc) {
  DecompositionStrategy s;
  s.fixed_cuts = {dc.hub};
  return s;
}

TEST(RunShot, NoiselessDcHasChiTwo) {
  FlagFreeDc dc = build_flag_free_dc_parts(3);
  ShotRecord r = run_shot(dc.diagram, nullptr, 0.0, ShotMode::kPostselectPlus1, dc_strategy(dc), 7);
  EXPECT_TRUE(r.accepted);
  EXPECT_TRUE(r.decomposed);
  ASSERT_TRUE(r.chi.has_value());
  EXPECT_EQ(*r.chi, 2);
  EXPECT_TRUE(r.realization.errors.empty());
}

TEST(RunShot, SameSeedSameRecord) {
  FlagFreeDc dc = build_flag_free_dc_parts(3);
  ShotRecord a = run_shot(dc.diagram, nullptr, 0.05, ShotMode::kPostselectPlus1, dc_strategy(dc), 11);
  ShotRecord b = run_shot(dc.diagram, nullptr, 0.05, ShotMode::kPostselectPlus1, dc_strategy(dc), 11);
  EXPECT_EQ(shot_jsonl(a, 0.05), shot_jsonl(b, 0.05));
}

TEST(RunShot, WebModeSkipsDecompositionOnDiscard) {
  WebSetup s;
  int rejected = 0, accepted = 0;
  for (uint64_t seed = 0; seed < 60; ++seed) {
    ShotRecord r = run_shot(s.tc.diagram, &s.webs, 0.05, ShotMode::kWebPostselect, DecompositionStrategy{}, seed);
    if (r.accepted) {
      ++accepted;
      EXPECT_TRUE(r.decomposed);
      EXPECT_TRUE(r.chi.has_value());
    } else {
      ++rejected;
      EXPECT_FALSE(r.decomposed);
      EXPECT_FALSE(r.chi.has_value());
      EXPECT_GE(r.rejected_by, 0);
    }
  }
  EXPECT_GT(rejected, 0);
  EXPECT_GT(accepted, 0);
}

TEST(RunShot, WebsRequiredExactlyInWebMode) {
  WebSetup s;
  EXPECT_THROW(run_shot(s.tc.diagram, nullptr, 0.1, ShotMode::kWebPostselect, {}, 1), DomainError);
  EXPECT_THROW(run_shot(s.tc.diagram, &s.webs, 0.1, ShotMode::kPostselectPlus1, {}, 1), DomainError);
}

TEST(RunShot, FlipModeRecordsEveryMeasurement) {
  WebSetup s;
  ShotRecord r = run_shot(s.tc.diagram, nullptr, 0.0, ShotMode::kMeasurementFlips, {}, 3);
  ASSERT_TRUE(r.flips.has_value());
  EXPECT_EQ(r.flips->outcomes.size(), s.tc.measurement_spiders.size());
  EXPECT_TRUE(r.chi.has_value());
}

TEST(RunShot, ChiCapMarksFailure) {
  ZxDiagram d = build_t_states(6);
  DecompositionStrategy st;
  st.chi_cap = 1;
  st.collect = false;
  ShotRecord r = run_shot(d, nullptr, 0.0, ShotMode::kPostselectPlus1, st, 1);
  EXPECT_TRUE(r.failed);
  EXPECT_FALSE(r.chi.has_value());
  auto stats = run_sweep(d, nullptr, SweepConfig{{0.0}, 3, ShotMode::kPostselectPlus1, st, 1, 1});
  EXPECT_EQ(stats[0].failed_shots, 3);
  EXPECT_EQ(stats[0].max_chi, 1);
}

TEST(RunSweep, WorkerCountDoesNotChangeOutput) {
  WebSetup s;
  SweepConfig cfg;
  cfg.p_list = {0.0, 0.02, 0.05};
  cfg.shots = 40;
  cfg.mode = ShotMode::kWebPostselect;
  cfg.master_seed = 99;
  cfg.workers = 1;
  std::vector<std::vector<ShotRecord>> shots1, shots4;
  const std::string a = sweep_csv(run_sweep(s.tc.diagram, &s.webs, cfg, &shots1));
  cfg.workers = 4;
  const std::string b = sweep_csv(run_sweep(s.tc.diagram, &s.webs, cfg, &shots4));
  EXPECT_EQ(a, b);
  ASSERT_EQ(shots1.size(), 3u);
  for (size_t i = 0; i < shots1.size(); ++i) {
    for (size_t k = 0; k < shots1[i].size(); ++k) {
      EXPECT_EQ(shot_jsonl(shots1[i][k], 0), shot_jsonl(shots4[i][k], 0));
    }
  }
}

TEST(RunSweep, CsvShape) {
  FlagFreeDc dc = build_flag_free_dc_parts(2);
  SweepConfig cfg;
  cfg.p_list = {0.0, 0.1};
  cfg.shots = 5;
  cfg.strategy = dc_strategy(dc);
  const std::string csv = sweep_csv(run_sweep(dc.diagram, nullptr, cfg));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "p,shots,accepted,discard_ratio,mean_chi,max_chi,failed_shots,seconds");
  EXPECT_NE(csv.find("\n0,5,5,0.000000,2.000000,2,0,0.000\n"), std::string::npos) << csv;
}

TEST(RunSweep, DiscardRatioGrowsWithP) {
  WebSetup s;
  SweepConfig cfg;
  cfg.p_list = {0.001, 0.01, 0.03, 0.1};
  cfg.shots = 300;
  cfg.mode = ShotMode::kWebPostselect;
  cfg.workers = 4;
  cfg.strategy.target = Target::kAtMostOneT;
  auto stats = run_sweep(s.tc.diagram, &s.webs, cfg);
  for (size_t i = 1; i < stats.size(); ++i) EXPECT_GE(stats[i].discard_ratio, stats[i - 1].discard_ratio);
  EXPECT_GT(stats.back().discard_ratio, stats.front().discard_ratio);
}

TEST(ShotMode, ParseRoundTrip) {
  for (ShotMode m : {ShotMode::kPostselectPlus1, ShotMode::kMeasurementFlips, ShotMode::kWebPostselect}) {
    EXPECT_EQ(parse_shot_mode(to_string(m)), m);
  }
  EXPECT_THROW(parse_shot_mode("nope"), DomainError);
}

}  // namespace
}  // namespace zxcult
