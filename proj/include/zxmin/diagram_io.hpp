// Copyright 2026 The zxmin Authors
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

#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "zxmin/diagram.hpp"

namespace zxmin {

// Document layout:
//   {"inputs":[id...],"outputs":[id...],
//    "vertices":[{"id":int,"kind":"Z"|"X"|"H"|"B","phase":0..3}...],
//    "edges":[[id,id]...],"circles":int}
// "phase" is required on Z/X and rejected on H/B. Duplicate edges encode
// parallel wires and [v,v] a self-loop.

nlohmann::json diagram_to_json(const Diagram& d);
/// `where` prefixes error locations when the diagram is embedded in a larger
/// document.
Diagram diagram_from_json(const nlohmann::json& doc, const std::string& where = "");

/// Deterministic text form: vertices and edges sorted by id.
std::string serialize_diagram(const Diagram& d);
Diagram parse_diagram(const std::string& text);

Diagram load_diagram(const std::string& path);
void save_diagram(const Diagram& d, const std::string& path);

/// Graphviz description with labels Z:phase, X:phase, H, in_k, out_k.
std::string render_dot(const Diagram& d);

}  // namespace zxmin
