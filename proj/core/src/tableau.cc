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

#include "zxcult/tableau.h"

#include <stdexcept>

namespace zxcult {
namespace {

// Exponent of i picked up when multiplying single-qubit Paulis (x1,z1)(x2,z2).
int g(int x1, int z1, int x2, int z2) {
  if (!x1 && !z1) return 0;
  if (x1 && z1) return z2 - x2;
  if (x1 && !z1) return z2 * (2 * x2 - 1);
  return x2 * (1 - 2 * z2);
}

}  // namespace

bool PauliString::is_identity() const {
  for (int q = 0; q < size(); ++q) {
    if (x[q] || z[q]) return false;
  }
  return true;
}

bool PauliString::commutes_with(const PauliString& o) const {
  int c = 0;
  for (int q = 0; q < size(); ++q) c ^= (x[q] & o.z[q]) ^ (z[q] & o.x[q]);
  return c == 0;
}

std::string PauliString::to_string() const {
  std::string s(1, negative ? '-' : '+');
  for (int q = 0; q < size(); ++q) s += "_XZY"[x[q] + 2 * z[q]];
  return s;
}

PauliString PauliString::parse(const std::string& text) {
  if (text.empty() || (text[0] != '+' && text[0] != '-')) {
    throw std::invalid_argument("Pauli string must start with a sign: " + text);
  }
  PauliString p(static_cast<int>(text.size()) - 1);
  p.negative = text[0] == '-';
  for (size_t i = 1; i < text.size(); ++i) {
    char c = text[i];
    int q = static_cast<int>(i) - 1;
    if (c == 'X' || c == 'Y') p.x[q] = 1;
    if (c == 'Z' || c == 'Y') p.z[q] = 1;
    if (c != 'X' && c != 'Y' && c != 'Z' && c != '_' && c != 'I') {
      throw std::invalid_argument("bad Pauli character in " + text);
    }
  }
  return p;
}

bool PauliString::operator<(const PauliString& o) const {
  if (x != o.x) return x < o.x;
  if (z != o.z) return z < o.z;
  return negative < o.negative;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  PauliString out(a.size());
  int phase = 2 * a.negative + 2 * b.negative;
  for (int q = 0; q < a.size(); ++q) {
    phase += g(a.x[q], a.z[q], b.x[q], b.z[q]);
    out.x[q] = a.x[q] ^ b.x[q];
    out.z[q] = a.z[q] ^ b.z[q];
  }
  phase = ((phase % 4) + 4) % 4;
  if (phase % 2) throw std::logic_error("multiply: Pauli strings anticommute");
  out.negative = phase == 2;
  return out;
}

Tableau::Tableau(int n)
    : n_(n), x_(2 * n + 1, std::vector<uint8_t>(n, 0)), z_(2 * n + 1, std::vector<uint8_t>(n, 0)),
      r_(2 * n + 1, 0) {
  for (int i = 0; i < n; ++i) {
    x_[i][i] = 1;
    z_[i + n][i] = 1;
  }
}

void Tableau::h(int q) {
  for (int i = 0; i < 2 * n_; ++i) {
    r_[i] ^= x_[i][q] & z_[i][q];
    std::swap(x_[i][q], z_[i][q]);
  }
}

void Tableau::s(int q) {
  for (int i = 0; i < 2 * n_; ++i) {
    r_[i] ^= x_[i][q] & z_[i][q];
    z_[i][q] ^= x_[i][q];
  }
}

void Tableau::s_dag(int q) {
  s(q);
  s(q);
  s(q);
}

void Tableau::x(int q) {
  for (int i = 0; i < 2 * n_; ++i) r_[i] ^= z_[i][q];
}

void Tableau::z(int q) {
  for (int i = 0; i < 2 * n_; ++i) r_[i] ^= x_[i][q];
}

void Tableau::y(int q) {
  for (int i = 0; i < 2 * n_; ++i) r_[i] ^= x_[i][q] ^ z_[i][q];
}

void Tableau::cx(int c, int t) {
  for (int i = 0; i < 2 * n_; ++i) {
    r_[i] ^= x_[i][c] & z_[i][t] & (x_[i][t] ^ z_[i][c] ^ 1);
    x_[i][t] ^= x_[i][c];
    z_[i][c] ^= z_[i][t];
  }
}

void Tableau::cz(int a, int b) {
  h(b);
  cx(a, b);
  h(b);
}

void Tableau::rowsum(int h, int i) {
  int phase = 2 * r_[h] + 2 * r_[i];
  for (int q = 0; q < n_; ++q) {
    phase += g(x_[i][q], z_[i][q], x_[h][q], z_[h][q]);
    x_[h][q] ^= x_[i][q];
    z_[h][q] ^= z_[i][q];
  }
  phase = ((phase % 4) + 4) % 4;
  r_[h] = phase == 2;
}

int Tableau::measure(int q, const std::function<int()>& coin, bool* deterministic) {
  int p = -1;
  for (int i = n_; i < 2 * n_; ++i) {
    if (x_[i][q]) {
      p = i;
      break;
    }
  }
  if (p >= 0) {
    if (deterministic) *deterministic = false;
    for (int i = 0; i < 2 * n_; ++i) {
      if (i != p && x_[i][q]) rowsum(i, p);
    }
    x_[p - n_] = x_[p];
    z_[p - n_] = z_[p];
    r_[p - n_] = r_[p];
    std::fill(x_[p].begin(), x_[p].end(), 0);
    std::fill(z_[p].begin(), z_[p].end(), 0);
    z_[p][q] = 1;
    r_[p] = coin() & 1;
    return r_[p];
  }
  if (deterministic) *deterministic = true;
  const int scratch = 2 * n_;
  std::fill(x_[scratch].begin(), x_[scratch].end(), 0);
  std::fill(z_[scratch].begin(), z_[scratch].end(), 0);
  r_[scratch] = 0;
  for (int i = 0; i < n_; ++i) {
    if (x_[i][q]) rowsum(scratch, i + n_);
  }
  return r_[scratch];
}

bool Tableau::postselect(int q, int value) {
  bool det = false;
  int out = measure(q, [value] { return value; }, &det);
  return out == value;
}

std::vector<PauliString> Tableau::stabilizers() const {
  std::vector<PauliString> out;
  for (int i = n_; i < 2 * n_; ++i) {
    PauliString p(n_);
    p.x = x_[i];
    p.z = z_[i];
    p.negative = r_[i];
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace zxcult
