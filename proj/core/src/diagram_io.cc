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

#include "zxcult/diagram_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace zxcult {
namespace {

using ojson = nlohmann::ordered_json;

const char* kind_name(SpiderKind k) {
  switch (k) {
    case SpiderKind::Internal:
      return "internal";
    case SpiderKind::Boundary:
      return "boundary";
    case SpiderKind::Measurement:
      return "measurement";
  }
  return "internal";
}

SpiderKind parse_kind(const std::string& s) {
  if (s == "internal") return SpiderKind::Internal;
  if (s == "boundary") return SpiderKind::Boundary;
  if (s == "measurement") return SpiderKind::Measurement;
  throw DomainError("unknown spider kind '" + s + "'");
}

}  // namespace

std::string diagram_to_json(const ZxDiagram& d) {
  ojson j;
  ojson spiders = ojson::array();
  for (int v : d.spider_ids()) {
    const Spider& s = d.spider(v);
    ojson js;
    js["id"] = v;
    js["color"] = to_string(s.color);
    js["phase_pi4"] = s.phase.n;
    js["kind"] = kind_name(s.kind);
    if (s.kind == SpiderKind::Measurement) js["timeslice"] = s.timeslice;
    spiders.push_back(js);
  }
  ojson edges = ojson::array();
  for (int e : d.edge_ids()) {
    const Edge& ed = d.edge(e);
    edges.push_back(ojson::array({ed.a, ed.b, to_string(ed.kind)}));
  }
  j["spiders"] = spiders;
  j["edges"] = edges;
  j["inputs"] = d.inputs();
  j["outputs"] = d.outputs();
  const auto& c = d.scalar().coeffs();
  j["scalar"] = {{"coeffs", {c[0], c[1], c[2], c[3]}}, {"half_pow", d.scalar().half_pow()}};
  return j.dump(1) + "\n";
}

ZxDiagram diagram_from_json(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const std::exception& ex) {
    throw DomainError(std::string("diagram JSON parse error: ") + ex.what());
  }
  try {
    ZxDiagram d;
    std::vector<std::pair<int, Spider>> spiders;
    for (const auto& js : j.at("spiders")) {
      Spider s;
      std::string color = js.at("color").get<std::string>();
      if (color != "Z" && color != "X") throw DomainError("bad colour '" + color + "'");
      s.color = color == "Z" ? Color::Z : Color::X;
      s.phase = Phase(js.at("phase_pi4").get<int>());
      s.kind = parse_kind(js.value("kind", std::string("internal")));
      s.timeslice = js.value("timeslice", -1);
      spiders.emplace_back(js.at("id").get<int>(), s);
    }
    std::sort(spiders.begin(), spiders.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<int> holes;
    int next = 0;
    for (const auto& [id, s] : spiders) {
      if (id < next) throw DomainError("duplicate spider id " + std::to_string(id));
      while (next < id) {
        holes.push_back(d.add_spider(Color::Z, Phase()));
        ++next;
      }
      d.add_spider(s.color, s.phase, s.kind, s.timeslice);
      ++next;
    }
    for (int h : holes) d.remove_spider(h);
    for (const auto& je : j.at("edges")) {
      std::string k = je.at(2).get<std::string>();
      if (k != "plain" && k != "h") throw DomainError("bad edge kind '" + k + "'");
      d.connect(je.at(0).get<int>(), je.at(1).get<int>(),
                k == "plain" ? EdgeKind::Plain : EdgeKind::Hadamard);
    }
    for (int v : j.at("inputs")) {
      if (!d.has_spider(v) || d.spider(v).kind != SpiderKind::Boundary) {
        throw DomainError("input " + std::to_string(v) + " is not a boundary spider");
      }
      d.mutable_inputs().push_back(v);
    }
    for (int v : j.at("outputs")) {
      if (!d.has_spider(v) || d.spider(v).kind != SpiderKind::Boundary) {
        throw DomainError("output " + std::to_string(v) + " is not a boundary spider");
      }
      d.mutable_outputs().push_back(v);
    }
    if (j.contains("scalar")) {
      const auto& c = j["scalar"].at("coeffs");
      d.set_scalar(CliffordScalar({c.at(0).get<int64_t>(), c.at(1).get<int64_t>(),
                                   c.at(2).get<int64_t>(), c.at(3).get<int64_t>()},
                                  j["scalar"].at("half_pow").get<int>()));
    }
    return d;
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception& ex) {
    throw DomainError(std::string("malformed diagram JSON: ") + ex.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ZxDiagram load_diagram(const std::string& path) { return diagram_from_json(read_text_file(path)); }

void save_diagram(const ZxDiagram& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw DomainError("cannot write '" + path + "'");
  out << diagram_to_json(d);
}

}  // namespace zxcult
