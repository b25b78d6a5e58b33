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

#ifndef ZXCULT_TABLEAU_H_
#define ZXCULT_TABLEAU_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace zxcult {

// Hermitian Pauli string with a sign.
struct PauliString {
  std::vector<uint8_t> x;
  std::vector<uint8_t> z;
  bool negative = false;

  PauliString() = default;
  explicit PauliString(int n) : x(n, 0), z(n, 0) {}
  int size() const { return static_cast<int>(x.size()); }
  bool is_identity() const;
  bool commutes_with(const PauliString& o) const;
  // "+XZ_Y" style; '_' marks identity.
  std::string to_string() const;
  static PauliString parse(const std::string& text);
  bool operator==(const PauliString&) const = default;
  bool operator<(const PauliString& o) const;
};

// Product of two commuting Pauli strings (sign tracked exactly).
PauliString multiply(const PauliString& a, const PauliString& b);

// Aaronson-Gottesman stabiliser tableau over n qubits, initialised to |0...0>.
class Tableau {
 public:
  explicit Tableau(int n);
  int num_qubits() const { return n_; }

  void h(int q);
  void s(int q);
  void s_dag(int q);
  void x(int q);
  void y(int q);
  void z(int q);
  void cx(int c, int t);
  void cz(int a, int b);

  // Z-basis measurement. `coin` supplies the outcome when it is random.
  int measure(int q, const std::function<int()>& coin, bool* deterministic = nullptr);
  // Projects qubit q onto |value>; returns false if that has probability 0.
  bool postselect(int q, int value);

  std::vector<PauliString> stabilizers() const;

 private:
  void rowsum(int h, int i);
  int n_;
  std::vector<std::vector<uint8_t>> x_, z_;
  std::vector<uint8_t> r_;
};

}  // namespace zxcult

#endif  // ZXCULT_TABLEAU_H_
