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

#include "zxcult/pauliweb.h"

#include "json.hpp"
#include "zxcult/diagram_io.h"

namespace zxcult {
namespace {

struct Bits {
  int x = 0;
  int z = 0;
};

Bits bits(Pauli p) { return {p != Pauli::Z, p != Pauli::X}; }

Pauli from_bits(Bits b) {
  if (b.x && b.z) return Pauli::Y;
  return b.x ? Pauli::X : Pauli::Z;
}

Pauli across(Pauli p, EdgeKind k) {
  if (k == EdgeKind::Plain || p == Pauli::Y) return p;
  return p == Pauli::X ? Pauli::Z : Pauli::X;
}

void check_half_edge(const ZxDiagram& d, const PauliWeb& w, const HalfEdge& h) {
  if (!d.has_edge(h.edge) || (h.end != 0 && h.end != 1)) {
    throw DomainError("web " + std::to_string(w.id) + ": dangling half-edge (" +
                      std::to_string(h.edge) + ", " + std::to_string(h.end) + ")");
  }
}

}  // namespace

PauliWeb complete_web(const ZxDiagram& d, PauliWeb web) {
  std::map<HalfEdge, Pauli> add;
  for (const auto& [h, p] : web.highlights) {
    check_half_edge(d, web, h);
    HalfEdge other{h.edge, 1 - h.end};
    if (!web.highlights.count(other)) add[other] = across(p, d.edge(h.edge).kind);
  }
  web.highlights.insert(add.begin(), add.end());
  return web;
}

std::vector<WebViolation> validate_web(const ZxDiagram& d, const PauliWeb& web0) {
  for (const auto& [h, p] : web0.highlights) check_half_edge(d, web0, h);
  std::vector<WebViolation> out;
  for (const auto& [h, p] : web0.highlights) {
    auto it = web0.highlights.find({h.edge, 1 - h.end});
    if (h.end == 0 && it != web0.highlights.end() && it->second != across(p, d.edge(h.edge).kind)) {
      out.push_back({web0.id, -1, "edge " + std::to_string(h.edge) + " halves disagree"});
    }
  }
  PauliWeb web = complete_web(d, web0);
  std::map<int, std::vector<Pauli>> at;  // labels on each spider's legs
  std::map<int, int> leg_count;
  for (int e : d.edge_ids()) {
    const Edge& ed = d.edge(e);
    for (int end = 0; end < 2; ++end) {
      int v = end == 0 ? ed.a : ed.b;
      ++leg_count[v];
      auto it = web.highlights.find({e, end});
      if (it != web.highlights.end()) at[v].push_back(it->second);
    }
  }
  for (const auto& [v, labels] : at) {
    const Spider& s = d.spider(v);
    if (s.kind == SpiderKind::Boundary) {
      out.push_back({web.id, v, "closed web touches a boundary"});
      continue;
    }
    // In the spider's own basis: "flip" labels anticommute with its phase.
    int flips = 0, parity = 0;
    for (Pauli p : labels) {
      Bits b = bits(p);
      if (s.color == Color::X) std::swap(b.x, b.z);
      flips += b.x;
      parity ^= b.z;
    }
    const int deg = leg_count[v];
    if (flips != 0 && flips != deg) {
      out.push_back({web.id, v, "flip-type labels on " + std::to_string(flips) + " of " +
                                    std::to_string(deg) + " legs"});
    } else if (flips == deg && deg > 0 && s.phase.is_t_like()) {
      out.push_back({web.id, v, "flip-type web through a non-Clifford spider"});
    } else {
      int want = (flips == deg && deg > 0 && s.phase.is_proper_clifford()) ? 1 : 0;
      if (parity != want) out.push_back({web.id, v, "odd phase-type parity"});
    }
  }
  return out;
}

int web_parity(const PauliWeb& web, const ErrorRealization& r) {
  int k = 0;
  for (const auto& [e, p] : r.errors) {
    auto it = web.highlights.find({e, 0});
    if (it != web.highlights.end() && anticommute(it->second, p)) ++k;
  }
  return k % 2 ? -1 : 1;
}

PostselectResult postselect(const std::vector<PauliWeb>& webs, const ErrorRealization& r) {
  for (const PauliWeb& w : webs) {
    if (web_parity(w, r) != w.expected_parity) return {false, w.id};
  }
  return {};
}

WebFile parse_webs(const std::string& text) {
  WebFile f;
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return f;
  try {
    auto j = nlohmann::json::parse(text);
    f.host = j.value("host", std::string());
    for (const auto& jw : j.at("webs")) {
      PauliWeb w;
      w.id = jw.at("id").get<int>();
      w.expected_parity = jw.value("expected_parity", 1);
      for (const auto& h : jw.at("highlights")) {
        HalfEdge he{h.at(0).get<int>(), h.at(1).get<int>()};
        try {
          w.highlights[he] = parse_pauli(h.at(2).get<std::string>());
        } catch (const DomainError& ex) {
          throw DomainError("web " + std::to_string(w.id) + ": " + ex.what());
        }
      }
      f.webs.push_back(std::move(w));
    }
  } catch (const nlohmann::json::exception& ex) {
    throw DomainError(std::string("web file: ") + ex.what());
  }
  return f;
}

std::string webs_to_json(const WebFile& f) {
  nlohmann::ordered_json j;
  j["host"] = f.host;
  j["webs"] = nlohmann::ordered_json::array();
  for (const PauliWeb& w : f.webs) {
    nlohmann::ordered_json jw;
    jw["id"] = w.id;
    jw["expected_parity"] = w.expected_parity;
    jw["highlights"] = nlohmann::ordered_json::array();
    for (const auto& [h, p] : w.highlights) jw["highlights"].push_back({h.edge, h.end, to_string(p)});
    j["webs"].push_back(std::move(jw));
  }
  return j.dump(1);
}

WebFile load_webs_text(const std::string& text, const ZxDiagram& host) {
  WebFile f = parse_webs(text);
  for (PauliWeb& w : f.webs) {
    auto bad = validate_web(host, w);
    if (!bad.empty()) {
      throw DomainError("web " + std::to_string(w.id) + " invalid at spider " +
                        std::to_string(bad.front().spider) + ": " + bad.front().reason);
    }
    w = complete_web(host, std::move(w));
  }
  return f;
}

WebFile load_webs(const std::string& path, const ZxDiagram& host) {
  return load_webs_text(read_text_file(path), host);
}

}  // namespace zxcult
