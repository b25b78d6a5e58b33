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

// Acceptance checks: one PASS / FAIL / FALLBACK line per criterion.
//
//   acceptance [--criterion N] --cli path/to/zxcult --data path/to/data
//
// Exit status is 0 when every selected criterion is PASS or FALLBACK.

#include <boost/math/distributions/chi_squared.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zxcult/builders.h"
#include "zxcult/circuit.h"
#include "zxcult/decomposition.h"
#include "zxcult/diagram_io.h"
#include "zxcult/harness.h"
#include "zxcult/noise.h"
#include "zxcult/oracle.h"
#include "zxcult/pauliweb.h"
#include "zxcult/sampler.h"
#include "zxcult/star.h"
#include "zxcult/verify.h"

namespace {

using namespace zxcult;
using Clock = std::chrono::steady_clock;

// Pinned tolerances.
constexpr double kTol = 1e-9;           // oracle deviations
constexpr double kCatSeconds = 1.0;     // criterion 1 runtime
constexpr double kDcSeconds = 10.0;     // criterion 3 runtime at n = 4
constexpr double kChiSquareP = 0.01;    // criterion 11 p-value floor
constexpr double kNormTol = 1e-9;       // criterion 11 normalisation
constexpr int kRandomDiagrams = 500;    // criterion 4
constexpr int kRealizations = 100;      // criteria 7 and 9
constexpr int kInjections = 1000;       // criterion 10
constexpr int kSamplerShots = 10000;    // criterion 11

enum class Status { kPass, kFail, kFallback };

struct Outcome {
  Status status = Status::kFail;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Outcome suite_outcome(const std::vector<CheckResult>& rs, const std::vector<int64_t>& want_terms) {
  Outcome o{Status::kPass, ""};
  for (size_t i = 0; i < rs.size(); ++i) {
    const CheckResult& r = rs[i];
    o.detail += r.name + " dev=" + fmt("%.1e", r.deviation) + " terms=" + std::to_string(r.terms);
    if (!want_terms.empty()) o.detail += "/" + std::to_string(want_terms[i]);
    o.detail += "; ";
    if (!r.pass || (!want_terms.empty() && r.terms != want_terms[i])) o.status = Status::kFail;
  }
  return o;
}

Outcome c1() {
  auto start = Clock::now();
  Outcome o = suite_outcome(run_verify_suite("cat"), {2, 3});
  const double secs = since(start);
  o.detail += "time=" + fmt("%.3fs", secs);
  if (secs >= kCatSeconds) o.status = Status::kFail;
  return o;
}

Outcome c2() { return suite_outcome(run_verify_suite("tstate"), {}); }

Outcome c3() {
  Outcome o = suite_outcome(run_verify_suite("dc"), {2, 2, 2});
  auto start = Clock::now();
  DecompositionResult r = decompose_full(build_flag_free_dc(4), {});
  const double secs = since(start);
  o.detail += "n=4 decompose time=" + fmt("%.3fs", secs);
  if (r.chi != 2 || secs >= kDcSeconds) o.status = Status::kFail;
  return o;
}

Outcome c4() {
  Outcome o = suite_outcome(run_verify_suite("random", 4, kRandomDiagrams), {});
  o.detail = std::to_string(kRandomDiagrams) + " diagrams: " + o.detail;
  return o;
}

Outcome c5() { return suite_outcome(run_verify_suite("bss"), {7}); }

Outcome c6() { return suite_outcome(run_verify_suite("star"), {2, 3, 5, 4, 4}); }

// Every realisation of the DC diagrams keeps chi = 2 under the hub cut.
Outcome dc_noise_invariance(const std::vector<int>& ns, uint64_t master) {
  Outcome o{Status::kPass, ""};
  for (int n : ns) {
    FlagFreeDc dc = build_flag_free_dc_parts(n);
    DecompositionStrategy st;
    st.fixed_cuts = {dc.hub};
    int64_t lo = INT64_MAX, hi = 0;
    int errored = 0;
    for (int i = 0; i < kRealizations; ++i) {
      ErrorRealization r = sample_errors(dc.diagram, 0.01, derive_seed(master + n, i));
      errored += !r.errors.empty();
      DecompositionResult res = decompose_full(apply_errors(dc.diagram, r), st);
      lo = std::min(lo, res.chi);
      hi = std::max(hi, res.chi);
    }
    o.detail += "n=" + std::to_string(n) + " chi in [" + std::to_string(lo) + "," + std::to_string(hi) + "] (" +
                std::to_string(errored) + "/" + std::to_string(kRealizations) + " with errors); ";
    if (lo != 2 || hi != 2) o.status = Status::kFail;
  }
  return o;
}

Outcome c7() { return dc_noise_invariance({3}, 7); }

Outcome c8() {
  Outcome o{Status::kPass, ""};
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
  DecompositionSum pure = to_pure_clifford(s);
  EvalLimits lim;
  lim.max_arity = 15;
  lim.max_spiders = 64;
  const double dev = compare_sum(pure, build_t_states(15), Comparison::kExact, lim);
  o.detail = std::to_string(s.chi()) + " -> " + std::to_string(pure.chi()) + " (dev=" + fmt("%.1e", dev) + ")";
  if (s.chi() != 54 || pure.chi() != 108 || dev >= kTol || !pure.pure_clifford()) o.status = Status::kFail;
  const std::vector<std::pair<int, int64_t>> anchors = {{15, 108}, {38, 78732}, {53, 6377292}};
  for (auto [t, want] : anchors) {
    auto got = estimate_cat_terms(t);
    o.detail += "; t=" + std::to_string(t) + ": " + (got ? std::to_string(*got) : "none");
    if (!got || *got != want) o.status = Status::kFail;
  }
  return o;
}

// No transcription of the cultivation circuits is bundled, so the
// criterion's own fallback applies: the noise-invariance suite across the
// DC family.
Outcome c9() {
  Outcome o = dc_noise_invariance({2, 3, 4}, 9);
  o.detail = "no cultivation circuits ingested; fallback to DC-family noise invariance: " + o.detail;
  if (o.status == Status::kPass) o.status = Status::kFallback;
  return o;
}

Outcome c10() {
  Outcome o{Status::kPass, ""};
  DcCircuit dc = build_dc_circuit(3, 2);
  TranslatedCircuit tc = translate_circuit(dc.program);
  std::vector<PauliWeb> webs;
  for (size_t k = 0; k < dc.detectors.size(); ++k) {
    webs.push_back(web_from_detector(dc.program, tc, dc.detectors[k], static_cast<int>(k)));
  }
  std::mt19937_64 rng(10);
  const std::vector<int> edges = tc.diagram.edge_ids();
  const std::vector<int> ref = simulate_clifford(dc.program, {}, 0);
  int mismatches = 0, flagged = 0;
  for (int t = 0; t < kInjections; ++t) {
    ErrorRealization r;
    const size_t count = 1 + rng() % 2;
    while (r.errors.size() < count) r.errors[edges[rng() % edges.size()]] = static_cast<Pauli>(rng() % 3);
    std::multimap<int, std::pair<int, Pauli>> inj;
    for (const auto& [e, p] : r.errors) {
      const EdgeSite& site = tc.sites.at(e);
      for (auto qp : qubit_paulis(site, p)) inj.emplace(site.instr, qp);
    }
    const std::vector<int> m = simulate_clifford(dc.program, inj, t + 1);
    for (size_t k = 0; k < webs.size(); ++k) {
      int flip = 0;
      for (int rec : dc.detectors[k]) flip ^= m[rec] ^ ref[rec];
      mismatches += (flip ? -1 : 1) != web_parity(webs[k], r);
      flagged += flip;
    }
  }
  o.detail = std::to_string(kInjections) + " injections, " + std::to_string(mismatches) + " mismatches (" +
             std::to_string(flagged) + " flagged); discard ratios:";
  if (mismatches != 0) o.status = Status::kFail;

  SweepConfig cfg;
  cfg.p_list = {0.001, 0.003, 0.01, 0.03, 0.1};
  cfg.shots = 400;
  cfg.mode = ShotMode::kWebPostselect;
  cfg.master_seed = 10;
  cfg.strategy.target = Target::kAtMostOneT;
  const auto stats = run_sweep(tc.diagram, &webs, cfg);
  for (size_t i = 0; i < stats.size(); ++i) {
    o.detail += " " + fmt("%.4f", stats[i].discard_ratio);
    if (i > 0 && stats[i].discard_ratio < stats[i - 1].discard_ratio) o.status = Status::kFail;
  }
  return o;
}

// Two measurement layers on two qubits, with T gates on both.
const char* kSamplerCircuit =
    "R 0 1\nH 0\nT 0\nCX 0 1\nH 1\nT 1\nH 1\nTICK\nM 1\nTICK\nR 1\nCX 0 1\nT 1\nH 0\nT 0\nH 0\nTICK\nM 0 1\n";

Outcome c11() {
  Outcome o{Status::kPass, ""};
  const ZxDiagram d = translate_circuit(parse_circuit(kSamplerCircuit)).diagram;
  BornSampler sampler(d);
  const auto& sites = sampler.sites();
  const size_t n = sites.size();
  std::vector<double> born, chain;
  double born_total = 0, chain_total = 0;
  for (uint64_t x = 0; x < (uint64_t{1} << n); ++x) {
    ZxDiagram f = d;
    std::vector<int> bits(n);
    for (size_t i = 0; i < n; ++i) {
      bits[i] = static_cast<int>((x >> (n - 1 - i)) & 1);
      f.set_phase(sites[i].spider, Phase(4 * bits[i]));
    }
    const double a = evaluate(f).norm();
    born.push_back(a * a);
    chain.push_back(sampler.probability(bits));
    born_total += born.back();
    chain_total += chain.back();
  }
  std::vector<int> counts(born.size(), 0);
  auto rng = make_rng(11);
  for (int s = 0; s < kSamplerShots; ++s) {
    uint64_t x = 0;
    for (int b : sampler.sample(rng)) x = 2 * x + b;
    ++counts[x];
  }
  double stat = 0, worst = 0;
  int cells = 0;
  for (size_t x = 0; x < born.size(); ++x) {
    worst = std::max(worst, std::abs(chain[x] - born[x]));
    const double e = born[x] * kSamplerShots;
    if (e < 1e-9) {
      if (counts[x]) o.status = Status::kFail;
      continue;
    }
    stat += (counts[x] - e) * (counts[x] - e) / e;
    ++cells;
  }
  const double pvalue = 1 - boost::math::cdf(boost::math::chi_squared(cells - 1), stat);
  const double norm_err = std::max({std::abs(chain_total - 1), std::abs(born_total - 1),
                                    sampler.max_normalisation_error()});
  o.detail = std::to_string(n) + " measurements over 2 layers, chi=" + std::to_string(sampler.chi()) +
             ", chi-square p=" + fmt("%.3f", pvalue) + ", |P_chain - P_oracle|max=" + fmt("%.1e", worst) +
             ", normalisation error=" + fmt("%.1e", norm_err);
  if (pvalue <= kChiSquareP || norm_err >= kNormTol || worst >= kTol) o.status = Status::kFail;
  return o;
}

std::string run_capture(const std::string& cmd, int* code) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    *code = -1;
    return out;
  }
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  *code = pclose(pipe);
  return out;
}

Outcome c12(const std::string& cli, const std::string& data) {
  Outcome o{Status::kPass, ""};
  if (cli.empty() || data.empty()) return Outcome{Status::kFail, "--cli and --data are required"};
  const std::string base = "'" + cli + "' sweep --circuit '" + data + "/dc3.circuit' --webs '" + data +
                           "/dc3.webs.json' --mode web_postselect --p 0.001,0.01,0.05 --shots 60 --seed 12";
  int c1 = 0, c4 = 0;
  const std::string one = run_capture(base + " --workers 1", &c1);
  const std::string four = run_capture(base + " --workers 4", &c4);
  const bool same = one == four && !one.empty();
  o.detail = std::string("workers 1 vs 4: ") + (same ? "byte-identical" : "DIFFERENT") + " (" +
             std::to_string(one.size()) + " bytes)";
  if (c1 != 0 || c4 != 0 || !same) o.status = Status::kFail;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance checks"};
  int only = 0;
  std::string cli, data;
  app.add_option("--criterion", only, "run one criterion (1-12); all by default");
  app.add_option("--cli", cli, "path to the zxcult executable");
  app.add_option("--data", data, "data directory");
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::function<Outcome()>> criteria = {
      c1, c2, c3, c4, c5, c6, c7, c8, c9, c10, c11, [&] { return c12(cli, data); }};
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  bool ok = true;
  for (size_t i = 0; i < criteria.size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = Outcome{Status::kFail, std::string("exception: ") + e.what()};
    }
    const char* label = o.status == Status::kPass ? "PASS" : o.status == Status::kFallback ? "FALLBACK" : "FAIL";
    std::printf("criterion %2zu: %-8s [%.2fs] %s\n", i + 1, label, since(start), o.detail.c_str());
    std::fflush(stdout);
    ok = ok && o.status != Status::kFail;
  }
  return ok ? 0 : 1;
}
