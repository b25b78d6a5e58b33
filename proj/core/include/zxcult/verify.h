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

#ifndef ZXCULT_VERIFY_H_
#define ZXCULT_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

namespace zxcult {

// One identity checked against the dense oracle.
struct CheckResult {
  std::string name;
  double deviation = 0;  // worst oracle deviation
  int64_t terms = 0;     // terms of the decomposition (or applications)
  double seconds = 0;
  bool pass = false;     // deviation below tolerance
};

inline constexpr double kIdentityTolerance = 1e-9;

// cat, tstate, dc, bss, star, random
std::vector<std::string> verify_suites();
// Throws DomainError for unknown suites. `random_count` diagrams are drawn
// for the random suite.
std::vector<CheckResult> run_verify_suite(const std::string& suite, uint64_t seed = 1,
                                          int random_count = 100);

}  // namespace zxcult

#endif  // ZXCULT_VERIFY_H_
