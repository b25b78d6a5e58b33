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

#ifndef ZXCULT_DIAGRAM_IO_H_
#define ZXCULT_DIAGRAM_IO_H_

#include <string>

#include "zxcult/diagram.h"

namespace zxcult {

// JSON diagram format:
//   {"spiders":[{"id":0,"color":"Z","phase_pi4":1,"kind":"internal"}, ...],
//    "edges":[[a,b,"plain"|"h"], ...], "inputs":[...], "outputs":[...],
//    "scalar":{"coeffs":[a,b,c,d],"half_pow":k}}
// Measurement spiders carry "kind":"measurement" and a "timeslice".
// Edge ids are the positions in "edges"; spider ids are preserved.
std::string diagram_to_json(const ZxDiagram& d);
ZxDiagram diagram_from_json(const std::string& text);

ZxDiagram load_diagram(const std::string& path);
void save_diagram(const ZxDiagram& d, const std::string& path);

std::string read_text_file(const std::string& path);

}  // namespace zxcult

#endif  // ZXCULT_DIAGRAM_IO_H_
