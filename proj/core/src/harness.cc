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

#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace zxcult {

ShotMode parse_shot_mode(const std::string& s) {
  if (s == "postselect_plus1" || s == "plus1") return ShotMode::kPostselectPlus1;
  if (s == "measurement_flips" || s == "flips") return ShotMode::kMeasurementFlips;
  if (s == "web_postselect" || s == "web") return ShotMode::kWebPostselect;
  throw DomainError("unknown shot mode '" + s + "'");
}

const char* to_string(ShotMode m) {
  switch (m) {
    case ShotMode::kPostselectPlus1: return "postselect_plus1";
    case ShotMode::kMeasurementFlips: return "measurement_flips";
    case ShotMode::kWebPostselect: return "web_postselect";
  }
  return "?";
}

ShotRecord run_shot(const ZxDiagram& d, const std::vector<PauliWeb>* webs, double p, ShotMode mode,
                    const DecompositionStrategy& strategy, uint64_t seed) {
  if ((mode == ShotMode::kWebPostselect) != (webs != nullptr)) {
    throw DomainError("run_shot: webs are required exactly in web_postselect mode");
  }
  auto start = std::chrono::steady_clock::now();
  ShotRecord rec;
  rec.seed = seed;
  rec.realization = sample_errors(d, p, seed);
  if (mode == ShotMode::kWebPostselect) {
    PostselectResult ps = postselect(*webs, rec.realization);
    if (!ps.accepted) {
      rec.accepted = false;
      rec.rejected_by = ps.first_violated;
    }
  }
  if (rec.accepted) {
    ZxDiagram errored = apply_errors(d, rec.realization);
    if (mode == ShotMode::kMeasurementFlips) rec.flips = flip_measurements(errored, derive_seed(seed, 1));
    DecompositionResult res = decompose_full(errored, strategy);
    rec.decomposed = true;
    rec.raw_chi = res.raw_chi;
    if (res.complete) {
      rec.chi = res.chi;
    } else {
      rec.failed = true;
    }
  }
  rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

uint64_t shot_seed(uint64_t master, int p_index, int shot) {
  return derive_seed(derive_seed(master, static_cast<uint64_t>(p_index)), static_cast<uint64_t>(shot));
}

std::vector<SweepStats> run_sweep(const ZxDiagram& d, const std::vector<PauliWeb>* webs,
                                  const SweepConfig& cfg,
                                  std::vector<std::vector<ShotRecord>>* shots_out) {
  if (cfg.shots < 1) throw DomainError("run_sweep: shots must be at least 1");
  const int workers = std::max(1, cfg.workers);
  std::vector<SweepStats> out;
  for (size_t pi = 0; pi < cfg.p_list.size(); ++pi) {
    const double p = cfg.p_list[pi];
    auto start = std::chrono::steady_clock::now();
    std::vector<ShotRecord> recs(cfg.shots);
    std::atomic<int> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    auto work = [&] {
      for (int s = next++; s < cfg.shots && !failed; s = next++) {
        try {
          recs[s] = run_shot(d, webs, p, cfg.mode, cfg.strategy, shot_seed(cfg.master_seed, static_cast<int>(pi), s));
        } catch (...) {
          if (!failed.exchange(true)) error = std::current_exception();
        }
      }
    };
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);

    SweepStats st;
    st.p = p;
    st.shots = cfg.shots;
    double sum = 0;
    int counted = 0;
    for (const ShotRecord& r : recs) {
      if (!r.accepted) continue;
      ++st.accepted;
      if (r.failed) {
        ++st.failed_shots;
        st.max_chi = std::max<int64_t>(st.max_chi, cfg.strategy.chi_cap);
        continue;
      }
      sum += static_cast<double>(*r.chi);
      ++counted;
      st.max_chi = std::max(st.max_chi, *r.chi);
    }
    st.discard_ratio = static_cast<double>(st.shots - st.accepted) / st.shots;
    st.mean_chi = counted ? sum / counted : 0;
    st.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out.push_back(st);
    if (shots_out) shots_out->push_back(std::move(recs));
  }
  return out;
}

std::string sweep_csv(const std::vector<SweepStats>& stats, bool timing) {
  std::ostringstream out;
  out << "p,shots,accepted,discard_ratio,mean_chi,max_chi,failed_shots,seconds\n";
  char buf[256];
  for (const SweepStats& s : stats) {
    std::snprintf(buf, sizeof buf, "%.6g,%d,%d,%.6f,%.6f,%lld,%d,%.3f\n", s.p, s.shots, s.accepted,
                  s.discard_ratio, s.mean_chi, static_cast<long long>(s.max_chi), s.failed_shots,
                  timing ? s.seconds : 0.0);
    out << buf;
  }
  return out.str();
}

std::string shot_jsonl(const ShotRecord& r, double p) {
  nlohmann::ordered_json j;
  j["p"] = p;
  j["seed"] = r.seed;
  j["accepted"] = r.accepted;
  j["chi"] = r.chi ? nlohmann::ordered_json(*r.chi) : nlohmann::ordered_json(nullptr);
  j["raw_chi"] = r.raw_chi;
  j["failed"] = r.failed;
  if (r.rejected_by >= 0) j["rejected_by"] = r.rejected_by;
  j["errors"] = nlohmann::ordered_json::parse(realization_to_json(r.realization))["errors"];
  if (r.flips) {
    nlohmann::ordered_json f = nlohmann::ordered_json::array();
    for (const auto& [v, a] : r.flips->outcomes) f.push_back({v, a});
    j["flips"] = f;
  }
  return j.dump();
}

}  // namespace zxcult
