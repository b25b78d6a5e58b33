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

#include "zxcult/graph_like.h"

#include <stdexcept>

namespace zxcult {

GraphLike GraphLike::from_diagram(const ZxDiagram& d, bool keep_measurements) {
  GraphLike g;
  g.next_id_ = d.spider_capacity();
  auto colour_changed = [&](int v) {
    const Spider& s = d.spider(v);
    return s.kind != SpiderKind::Boundary && s.color == Color::X;
  };
  for (int v : d.spider_ids()) {
    const Spider& s = d.spider(v);
    GVertex gv;
    gv.phase = s.phase;
    if (s.kind == SpiderKind::Boundary) {
      gv.kind = VKind::Boundary;
    } else if (s.kind == SpiderKind::Measurement && keep_measurements) {
      gv.kind = VKind::Meas;
      gv.meas_color = s.color;
      gv.timeslice = s.timeslice;
    }
    g.verts_[v] = gv;
    g.adj_[v];
  }
  g.inputs_ = d.inputs();
  g.outputs_ = d.outputs();
  g.scalar_ = d.scalar();
  for (int e : d.edge_ids()) {
    const Edge& ed = d.edge(e);
    EdgeKind k = ed.kind;
    if (colour_changed(ed.a)) k = toggled(k);
    if (colour_changed(ed.b)) k = toggled(k);
    g.add_edge(g.resolve(ed.a), g.resolve(ed.b), k);
  }
  g.merged_into_.clear();
  return g;
}

ZxDiagram GraphLike::to_diagram() const {
  ZxDiagram d;
  int max_id = verts_.empty() ? -1 : verts_.rbegin()->first;
  std::vector<int> holes;
  for (int v = 0; v <= max_id; ++v) {
    auto it = verts_.find(v);
    if (it == verts_.end()) {
      holes.push_back(d.add_spider(Color::Z, Phase(0)));
      continue;
    }
    const GVertex& gv = it->second;
    switch (gv.kind) {
      case VKind::Z:
        d.add_spider(Color::Z, gv.phase);
        break;
      case VKind::Boundary:
        d.add_spider(Color::Z, Phase(0), SpiderKind::Boundary);
        break;
      case VKind::Meas:
        d.add_spider(gv.meas_color, gv.phase, SpiderKind::Measurement, gv.timeslice);
        break;
    }
  }
  for (int h : holes) d.remove_spider(h);
  for (const auto& [a, nb] : adj_) {
    for (const auto& [b, k] : nb) {
      if (b < a) continue;
      EdgeKind kind = k;
      if (verts_.at(a).kind == VKind::Meas && verts_.at(a).meas_color == Color::X) {
        kind = toggled(kind);
      }
      if (verts_.at(b).kind == VKind::Meas && verts_.at(b).meas_color == Color::X) {
        kind = toggled(kind);
      }
      d.connect(a, b, kind);
    }
  }
  d.mutable_inputs() = inputs_;
  d.mutable_outputs() = outputs_;
  d.set_scalar(scalar_);
  return d;
}

std::vector<int> GraphLike::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& [w, k] : adj_.at(v)) out.push_back(w);
  return out;
}

std::vector<int> GraphLike::vertex_ids() const {
  std::vector<int> out;
  for (const auto& [v, gv] : verts_) out.push_back(v);
  return out;
}

int GraphLike::add_vertex(VKind kind, Phase phase) {
  int v = next_id_++;
  GVertex gv;
  gv.kind = kind;
  gv.phase = phase;
  verts_[v] = gv;
  adj_[v];
  return v;
}

void GraphLike::remove_vertex(int v) {
  for (const auto& [w, k] : adj_.at(v)) adj_.at(w).erase(v);
  adj_.erase(v);
  verts_.erase(v);
}

void GraphLike::remove_edge(int a, int b) {
  adj_.at(a).erase(b);
  adj_.at(b).erase(a);
}

void GraphLike::add_edge(int a, int b, EdgeKind kind) {
  if (a == b) {
    if (!is_z(a)) throw std::logic_error("self-loop on a degree-one vertex");
    if (kind == EdgeKind::Hadamard) {
      add_phase(a, Phase::pi());
      scalar_ = scalar_.mul_sqrt2_pow(-1);
    }
    return;
  }
  if (!is_z(a) || !is_z(b)) {
    if (connected(a, b)) throw std::logic_error("parallel edge at a degree-one vertex");
    adj_.at(a)[b] = kind;
    adj_.at(b)[a] = kind;
    return;
  }
  if (kind == EdgeKind::Plain) {
    fuse(a, b);
    return;
  }
  if (connected(a, b)) {
    remove_edge(a, b);
    scalar_ = scalar_.mul_sqrt2_pow(-2);
  } else {
    adj_.at(a)[b] = EdgeKind::Hadamard;
    adj_.at(b)[a] = EdgeKind::Hadamard;
  }
}

int GraphLike::toggle_edge(int a, int b) {
  if (connected(a, b)) {
    remove_edge(a, b);
    return -1;
  }
  adj_.at(a)[b] = EdgeKind::Hadamard;
  adj_.at(b)[a] = EdgeKind::Hadamard;
  return 1;
}

int GraphLike::resolve(int v) const {
  for (auto it = merged_into_.find(v); it != merged_into_.end(); it = merged_into_.find(v)) {
    v = it->second;
  }
  return v;
}

void GraphLike::fuse(int keep, int gone) {
  merged_into_[gone] = keep;
  add_phase(keep, phase(gone));
  std::map<int, EdgeKind> moved = adj_.at(gone);
  remove_vertex(gone);
  for (const auto& [w, k] : moved) {
    // `w` may already have been absorbed by a cascading fusion.
    if (w != keep && !has(w)) continue;
    add_edge(keep, w, k);
  }
}

bool GraphLike::is_interior(int v) const {
  if (!is_z(v)) return false;
  for (const auto& [w, k] : adj_.at(v)) {
    if (k != EdgeKind::Hadamard || !is_z(w)) return false;
  }
  return true;
}

int GraphLike::boundary_neighbors(int v) const {
  int n = 0;
  for (const auto& [w, k] : adj_.at(v)) n += !is_z(w);
  return n;
}

}  // namespace zxcult
