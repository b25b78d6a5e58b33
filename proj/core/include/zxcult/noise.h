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

#ifndef ZXCULT_NOISE_H_
#define ZXCULT_NOISE_H_

#include <cstdint>
#include <map>
#include <random>
#include <string>

#include "zxcult/diagram.h"

namespace zxcult {

enum class Pauli { X, Y, Z };

const char* to_string(Pauli p);
Pauli parse_pauli(const std::string& s);
// Distinct non-identity Paulis anticommute.
inline bool anticommute(Pauli a, Pauli b) { return a != b; }

struct ErrorRealization {
  std::map<int, Pauli> errors;  // edge id -> error
  double p = 0;
  uint64_t seed = 0;
};

// Per-shot generator: seeded through splitmix64 so nearby seeds decorrelate.
std::mt19937_64 make_rng(uint64_t seed);
// Seed of stream `index` derived from a master seed.
uint64_t derive_seed(uint64_t master, uint64_t index);
// Uniform double in [0, 1) from 53 random bits (portable across libraries).
double uniform01(std::mt19937_64& rng);

ErrorRealization sample_errors(const ZxDiagram& d, double p, uint64_t seed);

// Inserts Pauli spiders on every errored edge, next to the edge's first end
// (before any Hadamard). Y is Z then X with scalar i.
ZxDiagram apply_errors(const ZxDiagram& d, const ErrorRealization& r);

struct FlipRecord {
  std::map<int, int> outcomes;  // measurement spider id -> a in {0, 1}
};

FlipRecord flip_measurements(ZxDiagram& d, uint64_t seed);

std::string realization_to_json(const ErrorRealization& r);
ErrorRealization realization_from_json(const std::string& text);

}  // namespace zxcult

#endif  // ZXCULT_NOISE_H_
