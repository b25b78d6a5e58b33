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

// zxcult: command-line front end for building, decomposing, sweeping and
// sampling ZX diagrams.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "zxcult/builders.h"
#include "zxcult/circuit.h"
#include "zxcult/decomposition.h"
#include "zxcult/diagram_io.h"
#include "zxcult/harness.h"
#include "zxcult/pauliweb.h"
#include "zxcult/sampler.h"
#include "zxcult/stabilizer_extract.h"
#include "zxcult/verify.h"

namespace {

using namespace zxcult;
using json = nlohmann::ordered_json;

// ---- logging --------------------------------------------------------------

enum class Level { kError = 0, kWarn = 1, kInfo = 2, kDebug = 3 };

Level log_level() {
  static const Level level = [] {
    const char* env = std::getenv("ZXCULT_LOG");
    const std::string v = env ? env : "warn";
    if (v == "error") return Level::kError;
    if (v == "info") return Level::kInfo;
    if (v == "debug") return Level::kDebug;
    return Level::kWarn;
  }();
  return level;
}

void log(Level l, const std::string& msg) {
  static const char* names[] = {"error", "warn", "info", "debug"};
  if (l <= log_level()) std::cerr << "[" << names[static_cast<int>(l)] << "] " << msg << "\n";
}

// ---- inputs ---------------------------------------------------------------

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  return read_text_file(path);
}

bool looks_like_json(const std::string& text) {
  const size_t i = text.find_first_not_of(" \t\r\n");
  return i != std::string::npos && text[i] == '{';
}

// A diagram from JSON, or the translation of circuit text.
ZxDiagram diagram_from_text(const std::string& text) {
  if (looks_like_json(text)) return diagram_from_json(text);
  return translate_circuit(parse_circuit(text)).diagram;
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  // Written only after all computation finished; a temporary keeps a failed
  // write from leaving a truncated file behind.
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw DomainError("cannot write '" + path + "'");
    out << text;
    if (!out) throw DomainError("cannot write '" + path + "'");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw DomainError("cannot write '" + path + "'");
}

// ---- strategy flags ---------------------------------------------------------

struct StrategyFlags {
  std::string secondary = "magic_cat";
  std::string target = "pure";
  int cut_budget = 64;
  int64_t chi_cap = 1000000;
  std::vector<int> fixed_cuts;
  bool no_collect = false;

  void add(CLI::App* app) {
    app->add_option("--secondary", secondary, "magic_cat | bss | cuts_then_bss")->capture_default_str();
    app->add_option("--target", target, "pure | one_t")->capture_default_str();
    app->add_option("--cut-budget", cut_budget, "greedy cuts per branch")->capture_default_str();
    app->add_option("--chi-cap", chi_cap, "abandon decompositions beyond this many terms")->capture_default_str();
    app->add_option("--fixed-cut", fixed_cuts, "spider ids cut before any heuristic");
    app->add_flag("--no-collect", no_collect, "keep duplicate terms");
  }
  void apply_json(const json& j) {
    if (j.contains("secondary")) secondary = j["secondary"].get<std::string>();
    if (j.contains("target")) target = j["target"].get<std::string>();
    if (j.contains("cut_budget")) cut_budget = j["cut_budget"].get<int>();
    if (j.contains("chi_cap")) chi_cap = j["chi_cap"].get<int64_t>();
    if (j.contains("fixed_cuts")) fixed_cuts = j["fixed_cuts"].get<std::vector<int>>();
    if (j.contains("collect")) no_collect = !j["collect"].get<bool>();
  }
  DecompositionStrategy build() const {
    DecompositionStrategy s;
    s.secondary = parse_secondary(secondary);
    s.target = parse_target(target);
    if (cut_budget < 0) throw DomainError("--cut-budget must be non-negative");
    if (chi_cap < 1) throw DomainError("--chi-cap must be positive");
    s.cut_budget = cut_budget;
    s.chi_cap = chi_cap;
    s.fixed_cuts = fixed_cuts;
    s.collect = !no_collect;
    return s;
  }
};

json scalar_json(const CliffordScalar& c) {
  return json{{"coeffs", c.coeffs()}, {"half_pow", c.half_pow()}};
}

// ---- subcommands --------------------------------------------------------------

int cmd_verify(const std::string& suite, uint64_t seed, int count) {
  bool ok = true;
  for (const CheckResult& r : run_verify_suite(suite, seed, count)) {
    std::printf("%-20s deviation=%.3e terms=%lld %s\n", r.name.c_str(), r.deviation,
                static_cast<long long>(r.terms), r.pass ? "ok" : "FAILED");
    ok = ok && r.pass;
  }
  return ok ? 0 : 1;
}

int cmd_decompose(const std::string& input, const StrategyFlags& flags, const std::string& dump) {
  const DecompositionStrategy strategy = flags.build();
  const ZxDiagram d = diagram_from_text(read_input(input));
  log(Level::kInfo, "decomposing diagram with " + std::to_string(d.num_spiders()) + " spiders, t-count " +
                        std::to_string(d.t_count()));
  const DecompositionResult r = decompose_full(d, strategy);
  if (!dump.empty()) {
    json j;
    j["chi"] = r.chi;
    j["terms"] = json::array();
    for (const Term& t : r.sum.terms) {
      j["terms"].push_back({{"coeff", scalar_json(t.coeff)}, {"diagram", json::parse(diagram_to_json(t.diagram))}});
    }
    if (r.sum.pure_clifford()) {
      j["tableaus"] = json::array();
      for (const TableauTerm& t : export_tableau_sum(r.sum)) {
        j["tableaus"].push_back({{"coeff", scalar_json(t.coeff)}, {"state", t.state.to_string()}});
      }
    }
    write_output(dump, j.dump(1) + "\n");
  }
  std::printf("chi=%lld\nraw_chi=%lld\ncuts=%d\nsecondary_steps=%d\ncomplete=%s\n", static_cast<long long>(r.chi),
              static_cast<long long>(r.raw_chi), r.cuts, r.secondary_steps, r.complete ? "true" : "false");
  return r.complete ? 0 : 1;
}

struct SweepFlags {
  std::string circuit, diagram, webs, config, out, dump_shots;
  std::vector<double> p;
  int shots = 100;
  std::string mode = "postselect_plus1";
  uint64_t seed = 0;
  int workers = 1;
  bool timing = false;
};

int cmd_sweep(SweepFlags f, StrategyFlags sf) {
  if (!f.config.empty()) {
    const json j = json::parse(read_text_file(f.config));
    if (j.contains("circuit")) f.circuit = j["circuit"].get<std::string>();
    if (j.contains("diagram")) f.diagram = j["diagram"].get<std::string>();
    if (j.contains("webs")) f.webs = j["webs"].get<std::string>();
    if (j.contains("p")) f.p = j["p"].get<std::vector<double>>();
    if (j.contains("shots")) f.shots = j["shots"].get<int>();
    if (j.contains("mode")) f.mode = j["mode"].get<std::string>();
    if (j.contains("seed")) f.seed = j["seed"].get<uint64_t>();
    if (j.contains("workers")) f.workers = j["workers"].get<int>();
    if (j.contains("timing")) f.timing = j["timing"].get<bool>();
    sf.apply_json(j);
  }
  if (f.circuit.empty() == f.diagram.empty()) throw DomainError("exactly one of --circuit and --diagram is required");
  if (f.p.empty()) throw DomainError("--p needs at least one error rate");
  for (double p : f.p) {
    if (!(p >= 0 && p <= 1)) throw DomainError("error rates must lie in [0, 1]");
  }
  SweepConfig cfg;
  cfg.p_list = f.p;
  cfg.shots = f.shots;
  cfg.mode = parse_shot_mode(f.mode);
  cfg.strategy = sf.build();
  cfg.master_seed = f.seed;
  cfg.workers = f.workers;
  const ZxDiagram d = f.circuit.empty() ? load_diagram(f.diagram)
                                        : translate_circuit(parse_circuit(read_text_file(f.circuit))).diagram;
  std::vector<PauliWeb> webs;
  if (cfg.mode == ShotMode::kWebPostselect) {
    if (f.webs.empty()) throw DomainError("--mode web_postselect needs --webs");
    webs = load_webs(f.webs, d).webs;
  }
  std::vector<std::vector<ShotRecord>> shots;
  const auto stats = run_sweep(d, cfg.mode == ShotMode::kWebPostselect ? &webs : nullptr, cfg,
                               f.dump_shots.empty() ? nullptr : &shots);
  if (!f.dump_shots.empty()) {
    std::string lines;
    for (size_t i = 0; i < shots.size(); ++i) {
      for (const ShotRecord& r : shots[i]) lines += shot_jsonl(r, cfg.p_list[i]) + "\n";
    }
    write_output(f.dump_shots, lines);
  }
  write_output(f.out, sweep_csv(stats, f.timing));
  return 0;
}

int cmd_sample(const std::string& circuit, const std::string& diagram, int shots, double p, uint64_t seed,
               const StrategyFlags& sf) {
  if (circuit.empty() == diagram.empty()) throw DomainError("exactly one of --circuit and --diagram is required");
  if (shots < 1) throw DomainError("--shots must be positive");
  const DecompositionStrategy strategy = sf.build();
  const ZxDiagram d =
      circuit.empty() ? load_diagram(diagram) : translate_circuit(parse_circuit(read_text_file(circuit))).diagram;
  std::map<std::string, int> counts;
  std::map<std::string, double> probs;
  auto key = [](const std::vector<int>& bits) {
    std::string s;
    for (int b : bits) s += static_cast<char>('0' + b);
    return s;
  };
  if (p == 0) {
    BornSampler sampler(d, strategy);
    for (int s = 0; s < shots; ++s) {
      auto rng = make_rng(derive_seed(seed, s));
      const std::vector<int> bits = sampler.sample(rng);
      ++counts[key(bits)];
      probs[key(bits)] = sampler.probability(bits);
    }
    log(Level::kInfo, "normalisation error " + std::to_string(sampler.max_normalisation_error()));
  } else {
    for (int s = 0; s < shots; ++s) {
      SampleResult r = sample_measurements(d, p, strategy, derive_seed(seed, s));
      ++counts[key(r.outcomes)];
    }
  }
  std::printf("outcome,count%s\n", p == 0 ? ",probability" : "");
  for (const auto& [k, c] : counts) {
    if (p == 0) {
      std::printf("%s,%d,%.12f\n", k.c_str(), c, probs[k]);
    } else {
      std::printf("%s,%d\n", k.c_str(), c);
    }
  }
  return 0;
}

ZxDiagram host_diagram(const std::string& circuit, const std::string& diagram) {
  if (circuit.empty() == diagram.empty()) throw DomainError("exactly one of --circuit and --diagram is required");
  return circuit.empty() ? load_diagram(diagram) : translate_circuit(parse_circuit(read_text_file(circuit))).diagram;
}

int cmd_webs_validate(const std::string& circuit, const std::string& diagram, const std::string& webs_path) {
  const ZxDiagram d = host_diagram(circuit, diagram);
  const WebFile f = load_webs(webs_path, d);
  int bad = 0;
  for (const PauliWeb& w : f.webs) {
    const auto v = validate_web(d, w);
    if (v.empty()) {
      std::printf("web %d: valid\n", w.id);
    } else {
      ++bad;
      for (const WebViolation& x : v) std::printf("web %d: spider %d: %s\n", w.id, x.spider, x.reason.c_str());
    }
  }
  return bad ? 1 : 0;
}

int cmd_webs_parity(const std::string& circuit, const std::string& diagram, const std::string& webs_path,
                    const std::string& errors_path) {
  const ZxDiagram d = host_diagram(circuit, diagram);
  const WebFile f = load_webs(webs_path, d);
  const ErrorRealization r = errors_path.empty() ? ErrorRealization{} : realization_from_json(read_text_file(errors_path));
  for (const auto& [e, p] : r.errors) {
    if (!d.has_edge(e)) throw DomainError("error on unknown edge " + std::to_string(e));
  }
  for (const PauliWeb& w : f.webs) std::printf("web %d: parity %+d\n", w.id, web_parity(w, r));
  const PostselectResult ps = postselect(f.webs, r);
  std::printf("accepted=%s\n", ps.accepted ? "true" : "false");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zxcult: stabiliser decompositions of ZX diagrams under noise"};
  app.require_subcommand(1);

  std::string suite = "all";
  uint64_t verify_seed = 1;
  int verify_count = 100;
  auto* verify = app.add_subcommand("verify", "check decomposition identities against the dense oracle");
  verify->add_option("--suite", suite, "cat | tstate | dc | bss | star | random | all")->capture_default_str();
  verify->add_option("--seed", verify_seed, "seed of the random suite")->capture_default_str();
  verify->add_option("--count", verify_count, "diagrams in the random suite")->capture_default_str();

  std::string input, dump;
  StrategyFlags decompose_flags;
  auto* decompose = app.add_subcommand("decompose", "stabiliser-decompose a diagram or circuit (stdin by default)");
  decompose->add_option("input", input, "diagram JSON or circuit text; - for stdin");
  decompose->add_option("--dump", dump, "write the terms as JSON");
  decompose_flags.add(decompose);

  SweepFlags sweep_flags;
  StrategyFlags sweep_strategy;
  auto* sweep = app.add_subcommand("sweep", "Monte-Carlo sweep over error rates; CSV on stdout");
  sweep->add_option("--circuit", sweep_flags.circuit, "circuit text file");
  sweep->add_option("--diagram", sweep_flags.diagram, "diagram JSON file");
  sweep->add_option("--webs", sweep_flags.webs, "Pauli webs JSON file");
  sweep->add_option("--p", sweep_flags.p, "error rates")->delimiter(',');
  sweep->add_option("--shots", sweep_flags.shots, "shots per error rate")->capture_default_str();
  sweep->add_option("--mode", sweep_flags.mode, "postselect_plus1 | measurement_flips | web_postselect")
      ->capture_default_str();
  sweep->add_option("--seed", sweep_flags.seed, "master seed")->capture_default_str();
  sweep->add_option("--workers", sweep_flags.workers, "worker threads")->capture_default_str();
  sweep->add_option("--config", sweep_flags.config, "JSON run config; its keys override flags");
  sweep->add_option("--out", sweep_flags.out, "CSV path (stdout by default)");
  sweep->add_option("--dump-shots", sweep_flags.dump_shots, "JSONL file with one record per shot");
  sweep->add_flag("--timing", sweep_flags.timing, "fill the seconds column");
  sweep_strategy.add(sweep);

  std::string sample_circuit, sample_diagram;
  int sample_shots = 1000;
  double sample_p = 0;
  uint64_t sample_seed = 0;
  StrategyFlags sample_strategy;
  auto* sample = app.add_subcommand("sample", "sample measurement outcomes by the chain rule");
  sample->add_option("--circuit", sample_circuit, "circuit text file");
  sample->add_option("--diagram", sample_diagram, "diagram JSON file");
  sample->add_option("--shots", sample_shots, "shots")->capture_default_str();
  sample->add_option("--p", sample_p, "error rate")->capture_default_str();
  sample->add_option("--seed", sample_seed, "seed")->capture_default_str();
  sample_strategy.add(sample);

  std::string web_circuit, web_diagram, web_file, web_errors;
  auto* webs = app.add_subcommand("webs", "Pauli web tools");
  webs->require_subcommand(1);
  auto* validate = webs->add_subcommand("validate", "check every web is a consistent labelling");
  auto* parity = webs->add_subcommand("parity", "web parities under an error realisation");
  for (CLI::App* sub : {validate, parity}) {
    sub->add_option("--circuit", web_circuit, "circuit text file");
    sub->add_option("--diagram", web_diagram, "diagram JSON file");
    sub->add_option("--webs", web_file, "Pauli webs JSON file")->required();
  }
  parity->add_option("--errors", web_errors, "error realisation JSON");

  int build_m = 4, build_n = 3, build_rounds = 1;
  std::string build_out, webs_out;
  bool build_circuit = false;
  auto* build = app.add_subcommand("build", "emit built-in diagrams as JSON");
  build->require_subcommand(1);
  auto* build_cat = build->add_subcommand("cat", "normalised cat state");
  build_cat->add_option("--m", build_m, "legs")->capture_default_str();
  auto* build_t = build->add_subcommand("tstates", "product of |T> states");
  build_t->add_option("--m", build_m, "states")->capture_default_str();
  auto* build_dc = build->add_subcommand("dc", "flag-free double check");
  build_dc->add_option("--n", build_n, "data qubits")->capture_default_str();
  build_dc->add_flag("--circuit", build_circuit, "emit circuit text instead of a diagram");
  build_dc->add_option("--rounds", build_rounds, "rounds (circuit form)")->capture_default_str();
  build_dc->add_option("--webs-out", webs_out, "write detector webs of the circuit form");
  for (CLI::App* sub : {build_cat, build_t, build_dc}) sub->add_option("--out", build_out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) return cmd_verify(suite, verify_seed, verify_count);
    if (*decompose) return cmd_decompose(input, decompose_flags, dump);
    if (*sweep) return cmd_sweep(sweep_flags, sweep_strategy);
    if (*sample) return cmd_sample(sample_circuit, sample_diagram, sample_shots, sample_p, sample_seed, sample_strategy);
    if (*validate) return cmd_webs_validate(web_circuit, web_diagram, web_file);
    if (*parity) return cmd_webs_parity(web_circuit, web_diagram, web_file, web_errors);
    if (*build_cat) {
      write_output(build_out, diagram_to_json(build_cat_state(build_m)) + "\n");
    } else if (*build_t) {
      write_output(build_out, diagram_to_json(build_t_states(build_m)) + "\n");
    } else if (*build_dc) {
      if (build_circuit || !webs_out.empty()) {
        const DcCircuit dc = build_dc_circuit(build_n, build_rounds);
        if (!webs_out.empty()) {
          const TranslatedCircuit tc = translate_circuit(dc.program);
          WebFile f;
          f.host = "dc" + std::to_string(build_n);
          for (size_t k = 0; k < dc.detectors.size(); ++k) {
            f.webs.push_back(web_from_detector(dc.program, tc, dc.detectors[k], static_cast<int>(k)));
          }
          write_output(webs_out, webs_to_json(f) + "\n");
        }
        write_output(build_out, serialize_circuit(dc.program));
      } else {
        write_output(build_out, diagram_to_json(build_flag_free_dc(build_n)) + "\n");
      }
    }
    return 0;
  } catch (const DomainError& e) {
    log(Level::kError, e.what());
    return 1;
  } catch (const nlohmann::json::exception& e) {
    log(Level::kError, std::string("malformed JSON: ") + e.what());
    return 1;
  }
}
