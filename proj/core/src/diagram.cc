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

#include "zxcult/diagram.h"

#include <algorithm>

namespace zxcult {

int ZxDiagram::add_spider(Color color, Phase phase, SpiderKind kind, int timeslice) {
  if (kind == SpiderKind::Boundary && phase.n != 0) {
    throw DomainError("boundary spiders must have phase 0");
  }
  if (kind == SpiderKind::Measurement && !phase.is_pauli()) {
    throw DomainError("measurement spiders carry phase 0 or pi");
  }
  spiders_.push_back(Spider{color, phase, kind, timeslice});
  incidence_.emplace_back();
  ++live_spiders_;
  return static_cast<int>(spiders_.size()) - 1;
}

int ZxDiagram::add_input() {
  int v = add_spider(Color::Z, Phase(), SpiderKind::Boundary);
  inputs_.push_back(v);
  return v;
}

int ZxDiagram::add_output() {
  int v = add_spider(Color::Z, Phase(), SpiderKind::Boundary);
  outputs_.push_back(v);
  return v;
}

bool ZxDiagram::degree_limited(int v) const {
  SpiderKind k = spiders_[v]->kind;
  return k == SpiderKind::Boundary || k == SpiderKind::Measurement;
}

int ZxDiagram::connect(int a, int b, EdgeKind kind) {
  check_spider(a);
  check_spider(b);
  int extra_a = (a == b) ? 2 : 1;
  if (degree_limited(a) && degree(a) + extra_a > 1) {
    throw DomainError("spider " + std::to_string(a) + " is limited to degree 1");
  }
  if (degree_limited(b) && degree(b) + 1 > 1) {
    throw DomainError("spider " + std::to_string(b) + " is limited to degree 1");
  }
  edges_.push_back(Edge{a, b, kind});
  int e = static_cast<int>(edges_.size()) - 1;
  incidence_[a].push_back(e);
  if (a != b) incidence_[b].push_back(e);
  ++live_edges_;
  return e;
}

void ZxDiagram::remove_edge(int e) {
  if (!has_edge(e)) throw DomainError("no edge " + std::to_string(e));
  const Edge ed = *edges_[e];
  auto drop = [&](int v) {
    auto& inc = incidence_[v];
    inc.erase(std::remove(inc.begin(), inc.end(), e), inc.end());
  };
  drop(ed.a);
  if (ed.b != ed.a) drop(ed.b);
  edges_[e].reset();
  --live_edges_;
}

int ZxDiagram::split_edge(int e, Color color, Phase phase) {
  if (!has_edge(e)) throw DomainError("no edge " + std::to_string(e));
  const Edge ed = *edges_[e];
  int s = add_spider(color, phase);
  if (ed.b != ed.a) {
    auto& inc = incidence_[ed.b];
    inc.erase(std::remove(inc.begin(), inc.end(), e), inc.end());
  }
  edges_[e] = Edge{ed.a, s, EdgeKind::Plain};
  incidence_[s].push_back(e);
  edges_.push_back(Edge{s, ed.b, ed.kind});
  int f = static_cast<int>(edges_.size()) - 1;
  incidence_[s].push_back(f);
  incidence_[ed.b].push_back(f);
  ++live_edges_;
  return s;
}

void ZxDiagram::remove_spider(int v) {
  check_spider(v);
  std::vector<int> inc = incidence_[v];
  for (int e : inc) {
    if (has_edge(e)) remove_edge(e);
  }
  spiders_[v].reset();
  --live_spiders_;
  auto drop = [v](std::vector<int>& list) {
    list.erase(std::remove(list.begin(), list.end(), v), list.end());
  };
  drop(inputs_);
  drop(outputs_);
}

bool ZxDiagram::has_spider(int v) const {
  return v >= 0 && v < static_cast<int>(spiders_.size()) && spiders_[v].has_value();
}

bool ZxDiagram::has_edge(int e) const {
  return e >= 0 && e < static_cast<int>(edges_.size()) && edges_[e].has_value();
}

void ZxDiagram::check_spider(int v) const {
  if (!has_spider(v)) throw DomainError("no spider " + std::to_string(v));
}

const Spider& ZxDiagram::spider(int v) const {
  check_spider(v);
  return *spiders_[v];
}

Spider& ZxDiagram::spider(int v) {
  check_spider(v);
  return *spiders_[v];
}

const Edge& ZxDiagram::edge(int e) const {
  if (!has_edge(e)) throw DomainError("no edge " + std::to_string(e));
  return *edges_[e];
}

void ZxDiagram::set_phase(int v, Phase p) { spider(v).phase = p; }
void ZxDiagram::add_phase(int v, Phase p) { spider(v).phase = spider(v).phase + p; }

const std::vector<int>& ZxDiagram::incident(int v) const {
  check_spider(v);
  return incidence_[v];
}

int ZxDiagram::degree(int v) const {
  int d = 0;
  for (int e : incident(v)) d += edges_[e]->is_self_loop() ? 2 : 1;
  return d;
}

std::vector<int> ZxDiagram::neighbors(int v) const {
  std::vector<int> out;
  for (int e : incident(v)) out.push_back(edges_[e]->other(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> ZxDiagram::spider_ids() const {
  std::vector<int> ids;
  ids.reserve(live_spiders_);
  for (int v = 0; v < static_cast<int>(spiders_.size()); ++v) {
    if (spiders_[v]) ids.push_back(v);
  }
  return ids;
}

std::vector<int> ZxDiagram::edge_ids() const {
  std::vector<int> ids;
  ids.reserve(live_edges_);
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    if (edges_[e]) ids.push_back(e);
  }
  return ids;
}

std::vector<int> ZxDiagram::boundary_order() const {
  std::vector<int> order = inputs_;
  order.insert(order.end(), outputs_.begin(), outputs_.end());
  return order;
}

int ZxDiagram::t_count() const {
  int t = 0;
  for (const auto& s : spiders_) {
    if (s && s->phase.is_t_like()) ++t;
  }
  return t;
}

std::vector<int> ZxDiagram::measurement_spiders() const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(spiders_.size()); ++v) {
    if (spiders_[v] && spiders_[v]->kind == SpiderKind::Measurement) out.push_back(v);
  }
  return out;
}

int ZxDiagram::append(const ZxDiagram& other) {
  const int offset = static_cast<int>(spiders_.size());
  for (const auto& s : other.spiders_) {
    spiders_.push_back(s);
    incidence_.emplace_back();
    if (s) ++live_spiders_;
  }
  for (const auto& e : other.edges_) {
    if (!e) {
      edges_.push_back(std::nullopt);
      continue;
    }
    edges_.push_back(Edge{e->a + offset, e->b + offset, e->kind});
    int id = static_cast<int>(edges_.size()) - 1;
    incidence_[e->a + offset].push_back(id);
    if (e->a != e->b) incidence_[e->b + offset].push_back(id);
    ++live_edges_;
  }
  for (int v : other.inputs_) inputs_.push_back(v + offset);
  for (int v : other.outputs_) outputs_.push_back(v + offset);
  scalar_ *= other.scalar_;
  return offset;
}

ZxDiagram ZxDiagram::adjoint() const {
  ZxDiagram d = *this;
  for (auto& s : d.spiders_) {
    if (s) s->phase = -s->phase;
  }
  std::swap(d.inputs_, d.outputs_);
  d.scalar_ = scalar_.conj();
  return d;
}

const char* to_string(Color c) { return c == Color::Z ? "Z" : "X"; }
const char* to_string(EdgeKind k) { return k == EdgeKind::Plain ? "plain" : "h"; }

}  // namespace zxcult
