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

#include "zxmin/diagram_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace zxmin {

using nlohmann::json;

json diagram_to_json(const Diagram& d) {
  json doc;
  doc["inputs"] = d.inputs();
  doc["outputs"] = d.outputs();
  json vertices = json::array();
  for (const auto& [id, v] : d.vertices()) {
    json jv = {{"id", id}, {"kind", kind_name(v.kind)}};
    if (v.is_spider()) jv["phase"] = v.phase.quarter_turns();
    vertices.push_back(std::move(jv));
  }
  doc["vertices"] = std::move(vertices);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& kv : d.edges()) edges.emplace_back(kv.second.a, kv.second.b);
  std::sort(edges.begin(), edges.end());
  json jedges = json::array();
  for (const auto& [a, b] : edges) jedges.push_back({a, b});
  doc["edges"] = std::move(jedges);
  doc["circles"] = d.circles();
  return doc;
}

namespace {

int as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where, "expected an integer");
  return j.get<int>();
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where, std::string("missing \"") + key + "\"");
  return *it;
}

}  // namespace

Diagram diagram_from_json(const json& doc, const std::string& where) {
  if (!doc.is_object()) throw ParseError(where.empty() ? "/" : where, "expected an object");
  Diagram d;

  const json& vertices = field(doc, "vertices", where);
  if (!vertices.is_array()) throw ParseError(where + "/vertices", "expected an array");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string loc = where + "/vertices/" + std::to_string(i);
    const json& jv = vertices[i];
    if (!jv.is_object()) throw ParseError(loc, "expected an object");
    Vertex v;
    v.id = as_int(field(jv, "id", loc), loc + "/id");
    const json& jk = field(jv, "kind", loc);
    if (!jk.is_string()) throw ParseError(loc + "/kind", "expected a string");
    const std::string k = jk.get<std::string>();
    if (k == "Z") v.kind = VertexKind::Z;
    else if (k == "X") v.kind = VertexKind::X;
    else if (k == "H") v.kind = VertexKind::H;
    else if (k == "B") v.kind = VertexKind::Boundary;
    else throw ParseError(loc + "/kind", "unknown kind \"" + k + "\"");
    const bool has_phase = jv.contains("phase");
    if (v.is_spider()) {
      if (!has_phase) throw ParseError(loc, "spider without \"phase\"");
      const int q = as_int(jv["phase"], loc + "/phase");
      if (q < 0 || q > 3) throw ParseError(loc + "/phase", "phase must be in 0..3");
      v.phase = Phase(q);
    } else if (has_phase) {
      throw ParseError(loc + "/phase", std::string("\"phase\" is not allowed on kind ") + k);
    }
    try {
      d.insert_vertex(v);
    } catch (const InvariantViolation& e) {
      throw ParseError(loc + "/id", e.what());
    }
  }

  const json& edges = field(doc, "edges", where);
  if (!edges.is_array()) throw ParseError(where + "/edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string loc = where + "/edges/" + std::to_string(i);
    const json& je = edges[i];
    if (!je.is_array() || je.size() != 2) throw ParseError(loc, "expected a pair of ids");
    const int a = as_int(je[0], loc + "/0");
    const int b = as_int(je[1], loc + "/1");
    if (!d.has_vertex(a) || !d.has_vertex(b)) {
      throw ParseError(loc, "endpoint " + std::to_string(d.has_vertex(a) ? b : a) +
                                " is not a declared vertex");
    }
    d.add_edge(a, b);
  }

  for (const char* key : {"inputs", "outputs"}) {
    const std::string loc = where + "/" + key;
    const json& list = field(doc, key, where);
    if (!list.is_array()) throw ParseError(loc, "expected an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const int b = as_int(list[i], loc + "/" + std::to_string(i));
      if (std::string(key) == "inputs") d.add_input(b);
      else d.add_output(b);
    }
  }

  const long circles = doc.contains("circles") ? as_int(doc["circles"], where + "/circles") : 0;
  if (circles < 0) throw ParseError(where + "/circles", "must be non-negative");
  d.add_circles(circles);

  try {
    d.validate();
  } catch (const InvariantViolation& e) {
    throw ParseError(where.empty() ? "/" : where, e.what());
  }
  return d;
}

std::string serialize_diagram(const Diagram& d) { return diagram_to_json(d).dump(1) + "\n"; }

Diagram parse_diagram(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), e.what());
  }
  return diagram_from_json(doc);
}

Diagram load_diagram(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_diagram(buf.str());
}

void save_diagram(const Diagram& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << serialize_diagram(d);
}

std::string render_dot(const Diagram& d) {
  std::map<VertexId, std::string> labels;
  for (std::size_t i = 0; i < d.inputs().size(); ++i) labels[d.inputs()[i]] = "in_" + std::to_string(i);
  for (std::size_t i = 0; i < d.outputs().size(); ++i) labels[d.outputs()[i]] = "out_" + std::to_string(i);
  std::ostringstream out;
  out << "graph diagram {\n";
  for (const auto& [id, v] : d.vertices()) {
    std::string label;
    std::string style;
    switch (v.kind) {
      case VertexKind::Z:
        label = "Z:" + v.phase.to_string();
        style = ", shape=circle, style=filled, fillcolor=green";
        break;
      case VertexKind::X:
        label = "X:" + v.phase.to_string();
        style = ", shape=circle, style=filled, fillcolor=red";
        break;
      case VertexKind::H:
        label = "H";
        style = ", shape=square, style=filled, fillcolor=yellow";
        break;
      case VertexKind::Boundary:
        label = labels.count(id) ? labels[id] : "B";
        style = ", shape=plaintext";
        break;
    }
    out << "  v" << id << " [label=\"" << label << "\"" << style << "];\n";
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& kv : d.edges()) edges.emplace_back(kv.second.a, kv.second.b);
  std::sort(edges.begin(), edges.end());
  for (const auto& [a, b] : edges) out << "  v" << a << " -- v" << b << ";\n";
  if (d.circles() > 0) out << "  // circles: " << d.circles() << "\n";
  out << "}\n";
  return out.str();
}

}  // namespace zxmin
