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

#include "zxcult/noise.h"

#include "json.hpp"

namespace zxcult {
namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

const char* to_string(Pauli p) {
  switch (p) {
    case Pauli::X: return "X";
    case Pauli::Y: return "Y";
    case Pauli::Z: return "Z";
  }
  return "?";
}

Pauli parse_pauli(const std::string& s) {
  if (s == "X") return Pauli::X;
  if (s == "Y") return Pauli::Y;
  if (s == "Z") return Pauli::Z;
  throw DomainError("unknown Pauli '" + s + "'");
}

std::mt19937_64 make_rng(uint64_t seed) { return std::mt19937_64(splitmix64(seed)); }

uint64_t derive_seed(uint64_t master, uint64_t index) {
  return splitmix64(splitmix64(master) ^ (index * 0xd1b54a32d192ed03ull + 1));
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

ErrorRealization sample_errors(const ZxDiagram& d, double p, uint64_t seed) {
  if (!(p >= 0 && p <= 1)) throw DomainError("sample_errors: p must lie in [0, 1]");
  ErrorRealization r;
  r.p = p;
  r.seed = seed;
  std::mt19937_64 rng = make_rng(seed);
  for (int e : d.edge_ids()) {
    // Two draws per edge regardless of outcome keeps streams aligned across p.
    double u = uniform01(rng);
    uint64_t k = rng() % 3;
    if (u < p) r.errors[e] = static_cast<Pauli>(k);
  }
  return r;
}

ZxDiagram apply_errors(const ZxDiagram& d0, const ErrorRealization& r) {
  ZxDiagram d = d0;
  for (const auto& [e, pauli] : r.errors) {
    if (!d0.has_edge(e)) throw DomainError("apply_errors: dangling edge key " + std::to_string(e));
    // Splitting twice at the first end keeps the order Z then X along a->b.
    if (pauli != Pauli::Z) d.split_edge(e, Color::X, Phase::pi());
    if (pauli != Pauli::X) d.split_edge(e, Color::Z, Phase::pi());
    if (pauli == Pauli::Y) d.mul_scalar(CliffordScalar::i());
  }
  return d;
}

FlipRecord flip_measurements(ZxDiagram& d, uint64_t seed) {
  FlipRecord rec;
  std::mt19937_64 rng = make_rng(seed);
  for (int v : d.measurement_spiders()) {
    int a = static_cast<int>(rng() >> 63);
    rec.outcomes[v] = a;
    d.set_phase(v, Phase(4 * a));
  }
  return rec;
}

std::string realization_to_json(const ErrorRealization& r) {
  nlohmann::json j;
  j["p"] = r.p;
  j["seed"] = r.seed;
  j["errors"] = nlohmann::json::array();
  for (const auto& [e, pauli] : r.errors) j["errors"].push_back({e, to_string(pauli)});
  return j.dump();
}

ErrorRealization realization_from_json(const std::string& text) {
  ErrorRealization r;
  try {
    auto j = nlohmann::json::parse(text);
    r.p = j.value("p", 0.0);
    r.seed = j.value("seed", uint64_t{0});
    for (const auto& item : j.at("errors")) {
      r.errors[item.at(0).get<int>()] = parse_pauli(item.at(1).get<std::string>());
    }
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError(std::string("error realization: ") + ex.what());
  }
  return r;
}

}  // namespace zxcult
