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

#ifndef ZXCULT_GRAPH_LIKE_H_
#define ZXCULT_GRAPH_LIKE_H_

#include <map>
#include <vector>

#include "zxcult/diagram.h"
#include "zxcult/scalar.h"

namespace zxcult {

// Working form for rewriting: every internal spider is a Z spider, edges
// between internal spiders are Hadamard edges, there are no parallel edges
// and no self-loops. Boundary and (protected) measurement vertices have
// degree one and keep their identity.
enum class VKind { Z, Boundary, Meas };

struct GVertex {
  VKind kind = VKind::Z;
  Phase phase;
  Color meas_color = Color::Z;  // colour to restore on output (Meas only)
  int timeslice = -1;
};

class GraphLike {
 public:
  static GraphLike from_diagram(const ZxDiagram& d, bool keep_measurements);
  ZxDiagram to_diagram() const;

  bool has(int v) const { return verts_.count(v) > 0; }
  const GVertex& vertex(int v) const { return verts_.at(v); }
  Phase phase(int v) const { return verts_.at(v).phase; }
  void set_phase(int v, Phase p) { verts_.at(v).phase = p; }
  void add_phase(int v, Phase p) { verts_.at(v).phase = verts_.at(v).phase + p; }
  bool is_z(int v) const { return verts_.at(v).kind == VKind::Z; }

  const std::map<int, EdgeKind>& adjacent(int v) const { return adj_.at(v); }
  std::vector<int> neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  bool connected(int a, int b) const { return adj_.at(a).count(b) > 0; }
  EdgeKind edge_kind(int a, int b) const { return adj_.at(a).at(b); }
  std::vector<int> vertex_ids() const;
  int num_vertices() const { return static_cast<int>(verts_.size()); }

  int add_vertex(VKind kind, Phase phase);
  void remove_vertex(int v);
  void remove_edge(int a, int b);
  // Adds an edge and immediately restores the graph-like invariants:
  // plain Z-Z edges fuse, parallel Hadamard edges cancel, self-loops
  // resolve into phases. Scalars are tracked exactly.
  void add_edge(int a, int b, EdgeKind kind);
  // Toggles a Hadamard edge between distinct Z vertices without any
  // scalar bookkeeping; returns +1 if an edge was added, -1 if removed.
  int toggle_edge(int a, int b);
  // Merges `gone` into `keep` (phases add, edges move).
  void fuse(int keep, int gone);

  // Z vertex whose neighbours are all Z vertices reached by Hadamard edges.
  bool is_interior(int v) const;
  // Number of boundary/measurement neighbours.
  int boundary_neighbors(int v) const;

  CliffordScalar& scalar() { return scalar_; }
  const CliffordScalar& scalar() const { return scalar_; }

 private:
  std::map<int, GVertex> verts_;
  std::map<int, std::map<int, EdgeKind>> adj_;
  std::vector<int> inputs_;
  std::vector<int> outputs_;
  CliffordScalar scalar_ = CliffordScalar::one();
  int next_id_ = 0;
  std::map<int, int> merged_into_;  // fused-away vertex -> survivor

  int resolve(int v) const;
};

inline EdgeKind toggled(EdgeKind k) {
  return k == EdgeKind::Plain ? EdgeKind::Hadamard : EdgeKind::Plain;
}

}  // namespace zxcult

#endif  // ZXCULT_GRAPH_LIKE_H_
