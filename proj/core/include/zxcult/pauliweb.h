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

#ifndef ZXCULT_PAULIWEB_H_
#define ZXCULT_PAULIWEB_H_

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "zxcult/diagram.h"
#include "zxcult/noise.h"

namespace zxcult {

// End 0 is the edge's first spider, end 1 its second.
struct HalfEdge {
  int edge = -1;
  int end = 0;
  auto operator<=>(const HalfEdge&) const = default;
};

struct PauliWeb {
  int id = 0;
  std::map<HalfEdge, Pauli> highlights;
  int expected_parity = 1;
};

struct WebViolation {
  int web_id = 0;
  int spider = -1;  // -1 for edge-level problems
  std::string reason;
};

// Closure of a web as a stabiliser of every spider it touches: at a Z spider
// with phase a, X-type labels cover all legs or none and the Z-type labels
// have even parity (odd when X covers a +-pi/2 spider; X may not cover a
// T-like spider). Colours swap at X spiders. Both halves of an edge must
// agree, with X and Z exchanged across a Hadamard edge. Boundaries must stay
// unlabelled. Throws DomainError on half-edges that do not exist.
std::vector<WebViolation> validate_web(const ZxDiagram& d, const PauliWeb& web);

// Fills in the missing half of every labelled edge.
PauliWeb complete_web(const ZxDiagram& d, PauliWeb web);

// (-1)^k, k = errors anticommuting with the label at the errored edge's
// first end (where apply_errors inserts them). Webs must be complete.
int web_parity(const PauliWeb& web, const ErrorRealization& r);

struct PostselectResult {
  bool accepted = true;
  int first_violated = -1;  // web id
};

PostselectResult postselect(const std::vector<PauliWeb>& webs, const ErrorRealization& r);

struct WebFile {
  std::string host;
  std::vector<PauliWeb> webs;
};

// {"host": name, "webs": [{"id": k, "highlights": [[edge, end, "X"], ...]}]}
WebFile parse_webs(const std::string& text);
std::string webs_to_json(const WebFile& f);
// Parses, completes and validates every web against `host`; errors name the
// offending web (and spider).
WebFile load_webs(const std::string& path, const ZxDiagram& host);
WebFile load_webs_text(const std::string& text, const ZxDiagram& host);

}  // namespace zxcult

#endif  // ZXCULT_PAULIWEB_H_
