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

#ifndef ZXCULT_DIAGRAM_H_
#define ZXCULT_DIAGRAM_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zxcult/scalar.h"

namespace zxcult {

// Thrown for violations of domain preconditions (bad ids, degree limits, ...).
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Color { Z, X };
enum class SpiderKind { Internal, Boundary, Measurement };
enum class EdgeKind { Plain, Hadamard };

// Phase in units of π/4, reduced mod 8.
struct Phase {
  int n = 0;

  Phase() = default;
  explicit Phase(int units) : n(((units % 8) + 8) % 8) {}
  static Phase pi4(int units) { return Phase(units); }
  static Phase pi() { return Phase(4); }

  bool is_clifford() const { return n % 2 == 0; }
  bool is_t_like() const { return n % 2 == 1; }
  bool is_pauli() const { return n % 4 == 0; }
  bool is_proper_clifford() const { return n == 2 || n == 6; }
  Phase operator+(Phase o) const { return Phase(n + o.n); }
  Phase operator-(Phase o) const { return Phase(n - o.n); }
  Phase operator-() const { return Phase(-n); }
  bool operator==(const Phase&) const = default;
};

struct Spider {
  Color color = Color::Z;
  Phase phase;
  SpiderKind kind = SpiderKind::Internal;
  int timeslice = -1;  // only meaningful for measurement spiders
};

struct Edge {
  int a = -1;
  int b = -1;
  EdgeKind kind = EdgeKind::Plain;

  int other(int v) const { return a == v ? b : a; }
  bool is_self_loop() const { return a == b; }
};

// Open graph of Z/X spiders with an exact global scalar.
//
// Spider and edge ids are stable: removal leaves a hole and ids are never
// reused, so external references (webs, error realisations, cut plans) survive
// rewriting.
class ZxDiagram {
 public:
  int add_spider(Color color, Phase phase, SpiderKind kind = SpiderKind::Internal,
                 int timeslice = -1);
  int add_input();
  int add_output();
  int connect(int a, int b, EdgeKind kind = EdgeKind::Plain);

  void remove_edge(int e);
  // Inserts a spider on edge e next to its first end: e becomes a plain
  // edge a-s and a new edge s-b takes e's kind. Returns s.
  int split_edge(int e, Color color, Phase phase);
  void remove_spider(int v);  // removes incident edges as well

  bool has_spider(int v) const;
  bool has_edge(int e) const;
  const Spider& spider(int v) const;
  Spider& spider(int v);
  const Edge& edge(int e) const;
  void set_phase(int v, Phase p);
  void add_phase(int v, Phase p);

  // Incident edge ids (a self-loop appears once).
  const std::vector<int>& incident(int v) const;
  int degree(int v) const;  // self-loops count twice
  std::vector<int> neighbors(int v) const;

  std::vector<int> spider_ids() const;
  std::vector<int> edge_ids() const;
  int num_spiders() const { return live_spiders_; }
  int num_edges() const { return live_edges_; }
  int spider_capacity() const { return static_cast<int>(spiders_.size()); }
  int edge_capacity() const { return static_cast<int>(edges_.size()); }

  const std::vector<int>& inputs() const { return inputs_; }
  const std::vector<int>& outputs() const { return outputs_; }
  std::vector<int>& mutable_inputs() { return inputs_; }
  std::vector<int>& mutable_outputs() { return outputs_; }
  // Inputs followed by outputs; the leg order of every dense tensor.
  std::vector<int> boundary_order() const;
  int arity() const { return static_cast<int>(inputs_.size() + outputs_.size()); }

  const CliffordScalar& scalar() const { return scalar_; }
  void set_scalar(const CliffordScalar& s) { scalar_ = s; }
  void mul_scalar(const CliffordScalar& s) { scalar_ *= s; }

  int t_count() const;
  std::vector<int> measurement_spiders() const;

  // Places a copy of `other` next to this diagram; returns the id offset
  // applied to `other`'s spiders. Boundary lists are appended.
  int append(const ZxDiagram& other);

  // Adjoint: conjugated phases and scalar, inputs and outputs swapped.
  ZxDiagram adjoint() const;

 private:
  void check_spider(int v) const;
  bool degree_limited(int v) const;

  std::vector<std::optional<Spider>> spiders_;
  std::vector<std::optional<Edge>> edges_;
  std::vector<std::vector<int>> incidence_;
  std::vector<int> inputs_;
  std::vector<int> outputs_;
  CliffordScalar scalar_ = CliffordScalar::one();
  int live_spiders_ = 0;
  int live_edges_ = 0;
};

const char* to_string(Color c);
const char* to_string(EdgeKind k);

}  // namespace zxcult

#endif  // ZXCULT_DIAGRAM_H_
