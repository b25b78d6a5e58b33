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

#include "benchmark/benchmark.h"
#include "zxcult/builders.h"
#include "zxcult/circuit.h"
#include "zxcult/decomposition.h"
#include "zxcult/harness.h"
#include "zxcult/oracle.h"
#include "zxcult/sampler.h"
#include "zxcult/simplify.h"

namespace zxcult {
namespace {

void BM_CliffordSimpDc(benchmark::State& state) {
  const ZxDiagram d = build_flag_free_dc(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(clifford_simp(d));
}
BENCHMARK(BM_CliffordSimpDc)->Arg(2)->Arg(4)->Arg(8);

void BM_DecomposeDc(benchmark::State& state) {
  const FlagFreeDc dc = build_flag_free_dc_parts(static_cast<int>(state.range(0)));
  DecompositionStrategy st;
  st.fixed_cuts = {dc.hub};
  for (auto _ : state) benchmark::DoNotOptimize(decompose_full(dc.diagram, st).chi);
}
BENCHMARK(BM_DecomposeDc)->Arg(3)->Arg(4)->Arg(6);

void BM_DecomposeTStates(benchmark::State& state) {
  const ZxDiagram d = build_t_states(static_cast<int>(state.range(0)));
  DecompositionStrategy st;
  st.cut_budget = 0;  // secondary decompositions only
  st.secondary = static_cast<Secondary>(state.range(1));
  int64_t chi = 0;
  for (auto _ : state) {
    chi = decompose_full(d, st).chi;
    benchmark::DoNotOptimize(chi);
  }
  state.counters["chi"] = static_cast<double>(chi);
}
BENCHMARK(BM_DecomposeTStates)
    ->Args({6, static_cast<int>(Secondary::kMagicCat)})
    ->Args({6, static_cast<int>(Secondary::kBss)})
    ->Args({12, static_cast<int>(Secondary::kMagicCat)})
    ->Args({12, static_cast<int>(Secondary::kBss)})
    ->Unit(benchmark::kMillisecond);

void BM_CatChainPureTerms(benchmark::State& state) {
  for (auto _ : state) {
    CatChain c = build_cat_chain({4, 6, 6, 6}, true);
    DecompositionSum s;
    s.add(CliffordScalar::one(), c.diagram);
    for (int hub : c.hubs) {
      DecompositionSum next;
      for (const Term& t : s.terms) {
        DecompositionSum part = cat_decompose(t.diagram, hub);
        part.scale(t.coeff);
        next.append(std::move(part));
      }
      s = std::move(next);
    }
    benchmark::DoNotOptimize(to_pure_clifford(s).chi());
  }
}
BENCHMARK(BM_CatChainPureTerms)->Unit(benchmark::kMillisecond);

void BM_OracleCat(benchmark::State& state) {
  const ZxDiagram d = build_cat_state(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(evaluate(d));
}
BENCHMARK(BM_OracleCat)->Arg(4)->Arg(8)->Arg(12);

void BM_WebSweepShot(benchmark::State& state) {
  const DcCircuit dc = build_dc_circuit(3, 2);
  const TranslatedCircuit tc = translate_circuit(dc.program);
  std::vector<PauliWeb> webs;
  for (size_t k = 0; k < dc.detectors.size(); ++k) {
    webs.push_back(web_from_detector(dc.program, tc, dc.detectors[k], static_cast<int>(k)));
  }
  uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_shot(tc.diagram, &webs, 0.01, ShotMode::kWebPostselect, {}, seed++));
  }
}
BENCHMARK(BM_WebSweepShot)->Unit(benchmark::kMillisecond);

void BM_BornSamplerSetup(benchmark::State& state) {
  const ZxDiagram d =
      translate_circuit(parse_circuit("R 0 1\nH 0\nT 0\nCX 0 1\nT 1\nTICK\nM 1\nTICK\nH 0\nT 0\nM 0\n")).diagram;
  for (auto _ : state) {
    BornSampler s(d);
    auto rng = make_rng(1);
    benchmark::DoNotOptimize(s.sample(rng));
  }
}
BENCHMARK(BM_BornSamplerSetup)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace zxcult

BENCHMARK_MAIN();
