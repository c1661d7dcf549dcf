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

#include "zxmin/diagram.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace zxmin {

std::string Phase::to_string() const {
  static const char* kNames[4] = {"0", "pi/2", "pi", "-pi/2"};
  return kNames[q_];
}

const char* kind_name(VertexKind k) {
  switch (k) {
    case VertexKind::Z: return "Z";
    case VertexKind::X: return "X";
    case VertexKind::H: return "H";
    case VertexKind::Boundary: return "B";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Diagram

VertexId Diagram::add_vertex(VertexKind kind, Phase phase) {
  const VertexId id = next_vertex_++;
  vertices_[id] = Vertex{id, kind, phase};
  incidence_[id];
  return id;
}

void Diagram::insert_vertex(const Vertex& v) {
  if (vertices_.count(v.id) != 0) {
    throw InvariantViolation("duplicate vertex id " + std::to_string(v.id));
  }
  vertices_[v.id] = v;
  incidence_[v.id];
  next_vertex_ = std::max(next_vertex_, v.id + 1);
}

EdgeId Diagram::add_edge(VertexId a, VertexId b) {
  if (!has_vertex(a) || !has_vertex(b)) {
    throw InvariantViolation("edge endpoint " + std::to_string(has_vertex(a) ? b : a) +
                             " is not a vertex");
  }
  if (a > b) std::swap(a, b);
  const EdgeId id = next_edge_++;
  edges_[id] = Edge{a, b};
  incidence_[a].push_back(id);
  incidence_[b].push_back(id);
  return id;
}

void Diagram::remove_edge(EdgeId e) {
  const Edge edge = edges_.at(e);
  for (VertexId v : {edge.a, edge.b}) {
    auto& inc = incidence_[v];
    auto it = std::find(inc.begin(), inc.end(), e);
    if (it != inc.end()) inc.erase(it);
  }
  edges_.erase(e);
}

void Diagram::remove_vertex(VertexId v) {
  std::vector<EdgeId> inc = incidence_.at(v);
  std::sort(inc.begin(), inc.end());
  inc.erase(std::unique(inc.begin(), inc.end()), inc.end());
  for (EdgeId e : inc) remove_edge(e);
  incidence_.erase(v);
  vertices_.erase(v);
}

const std::vector<EdgeId>& Diagram::incident(VertexId v) const { return incidence_.at(v); }

std::size_t Diagram::multiplicity(VertexId a, VertexId b) const {
  std::size_t n = 0;
  for (EdgeId e : incidence_.at(a)) {
    const Edge& edge = edges_.at(e);
    if (edge.other(a) == b) ++n;
  }
  // A self-loop appears twice in the incidence list of its vertex.
  return a == b ? n / 2 : n;
}

std::size_t Diagram::spider_count() const {
  return static_cast<std::size_t>(std::count_if(vertices_.begin(), vertices_.end(),
                                                [](const auto& kv) { return kv.second.is_spider(); }));
}

void Diagram::validate() const {
  for (const auto& [id, e] : edges_) {
    if (!has_vertex(e.a) || !has_vertex(e.b)) {
      throw InvariantViolation("edge " + std::to_string(id) + " has a dangling endpoint");
    }
  }
  std::set<VertexId> declared;
  for (const auto* list : {&inputs_, &outputs_}) {
    for (VertexId b : *list) {
      if (!has_vertex(b)) {
        throw InvariantViolation("boundary " + std::to_string(b) + " is not a vertex");
      }
      if (vertex(b).kind != VertexKind::Boundary) {
        throw InvariantViolation("vertex " + std::to_string(b) + " listed as boundary but is " +
                                 kind_name(vertex(b).kind));
      }
      if (!declared.insert(b).second) {
        throw InvariantViolation("boundary " + std::to_string(b) + " listed twice");
      }
    }
  }
  for (const auto& [id, v] : vertices_) {
    const std::size_t deg = degree(id);
    switch (v.kind) {
      case VertexKind::Boundary:
        if (declared.count(id) == 0) {
          throw InvariantViolation("boundary vertex " + std::to_string(id) +
                                   " is in neither input nor output list");
        }
        if (deg != 1) {
          throw InvariantViolation("boundary vertex " + std::to_string(id) + " has degree " +
                                   std::to_string(deg));
        }
        break;
      case VertexKind::H:
        if (deg != 2) {
          throw InvariantViolation("hadamard vertex " + std::to_string(id) + " has degree " +
                                   std::to_string(deg));
        }
        if (!v.phase.is_zero()) {
          throw InvariantViolation("hadamard vertex " + std::to_string(id) + " carries a phase");
        }
        break;
      default:
        break;
    }
    if (v.kind == VertexKind::Boundary && !v.phase.is_zero()) {
      throw InvariantViolation("boundary vertex " + std::to_string(id) + " carries a phase");
    }
  }
  if (circles_ < 0) throw InvariantViolation("negative circle count");
}

void Diagram::compact() {
  std::map<VertexId, VertexId> vmap;
  VertexId next = 0;
  for (const auto& kv : vertices_) vmap[kv.first] = next++;
  Diagram out;
  for (const auto& [id, v] : vertices_) {
    Vertex nv = v;
    nv.id = vmap[id];
    out.insert_vertex(nv);
  }
  for (const auto& kv : edges_) out.add_edge(vmap[kv.second.a], vmap[kv.second.b]);
  for (VertexId b : inputs_) out.inputs_.push_back(vmap[b]);
  for (VertexId b : outputs_) out.outputs_.push_back(vmap[b]);
  out.circles_ = circles_;
  *this = std::move(out);
}

Diagram Diagram::relabelled(VertexId offset) const {
  Diagram out;
  for (const auto& [id, v] : vertices_) {
    Vertex nv = v;
    nv.id = id + offset;
    out.insert_vertex(nv);
  }
  for (const auto& kv : edges_) out.add_edge(kv.second.a + offset, kv.second.b + offset);
  for (VertexId b : inputs_) out.inputs_.push_back(b + offset);
  for (VertexId b : outputs_) out.outputs_.push_back(b + offset);
  out.circles_ = circles_;
  return out;
}

std::map<VertexId, VertexId> Diagram::absorb(const Diagram& other) {
  std::map<VertexId, VertexId> vmap;
  for (const auto& [id, v] : other.vertices_) vmap[id] = add_vertex(v.kind, v.phase);
  for (const auto& kv : other.edges_) add_edge(vmap[kv.second.a], vmap[kv.second.b]);
  circles_ += other.circles_;
  return vmap;
}

void Diagram::smooth(const std::vector<std::pair<VertexId, VertexId>>& pairs) {
  for (const auto& [p, q] : pairs) {
    if (degree(p) != 1 || degree(q) != 1) {
      throw InvariantViolation("smoothing requires degree-1 ports, got " + std::to_string(p) +
                               " and " + std::to_string(q));
    }
    const EdgeId ep = incident(p).front();
    const EdgeId eq = incident(q).front();
    if (ep == eq) {
      // p and q were directly joined: the chain closes into a loop.
      remove_vertex(p);
      remove_vertex(q);
      ++circles_;
      continue;
    }
    const VertexId x = edge(ep).other(p);
    const VertexId y = edge(eq).other(q);
    remove_vertex(p);
    remove_vertex(q);
    add_edge(x, y);
  }
}

bool operator==(const Diagram& a, const Diagram& b) {
  if (a.inputs_ != b.inputs_ || a.outputs_ != b.outputs_ || a.circles_ != b.circles_) return false;
  if (a.vertices_.size() != b.vertices_.size() || a.edges_.size() != b.edges_.size()) return false;
  for (auto it = a.vertices_.begin(), jt = b.vertices_.begin(); it != a.vertices_.end(); ++it, ++jt) {
    if (it->first != jt->first || it->second.kind != jt->second.kind ||
        it->second.phase != jt->second.phase) {
      return false;
    }
  }
  std::multiset<std::pair<VertexId, VertexId>> ea, eb;
  for (const auto& kv : a.edges_) ea.insert({kv.second.a, kv.second.b});
  for (const auto& kv : b.edges_) eb.insert({kv.second.a, kv.second.b});
  return ea == eb;
}

// ---------------------------------------------------------------------------
// Generators

Diagram spider(VertexKind colour, int n_inputs, int n_outputs, Phase phase) {
  Diagram d;
  const VertexId s = d.add_vertex(colour, phase);
  for (int i = 0; i < n_inputs; ++i) {
    const VertexId b = d.add_vertex(VertexKind::Boundary);
    d.add_edge(b, s);
    d.add_input(b);
  }
  for (int i = 0; i < n_outputs; ++i) {
    const VertexId b = d.add_vertex(VertexKind::Boundary);
    d.add_edge(s, b);
    d.add_output(b);
  }
  return d;
}

Diagram z_spider(int n_inputs, int n_outputs, Phase phase) {
  return spider(VertexKind::Z, n_inputs, n_outputs, phase);
}

Diagram x_spider(int n_inputs, int n_outputs, Phase phase) {
  return spider(VertexKind::X, n_inputs, n_outputs, phase);
}

Diagram hadamard() {
  Diagram d;
  const VertexId in = d.add_vertex(VertexKind::Boundary);
  const VertexId h = d.add_vertex(VertexKind::H);
  const VertexId out = d.add_vertex(VertexKind::Boundary);
  d.add_edge(in, h);
  d.add_edge(h, out);
  d.add_input(in);
  d.add_output(out);
  return d;
}

Diagram empty_diagram() { return Diagram(); }

Diagram swap_wires() {
  Diagram d;
  const VertexId i0 = d.add_vertex(VertexKind::Boundary);
  const VertexId i1 = d.add_vertex(VertexKind::Boundary);
  const VertexId o0 = d.add_vertex(VertexKind::Boundary);
  const VertexId o1 = d.add_vertex(VertexKind::Boundary);
  d.add_edge(i0, o1);
  d.add_edge(i1, o0);
  d.add_input(i0);
  d.add_input(i1);
  d.add_output(o0);
  d.add_output(o1);
  return d;
}

Diagram identity_wire() { return wires(1); }

Diagram wires(int n) {
  Diagram d;
  std::vector<VertexId> ins, outs;
  for (int i = 0; i < n; ++i) ins.push_back(d.add_vertex(VertexKind::Boundary));
  for (int i = 0; i < n; ++i) outs.push_back(d.add_vertex(VertexKind::Boundary));
  for (int i = 0; i < n; ++i) {
    d.add_edge(ins[i], outs[i]);
    d.add_input(ins[i]);
    d.add_output(outs[i]);
  }
  return d;
}

Diagram cup() {
  Diagram d;
  const VertexId a = d.add_vertex(VertexKind::Boundary);
  const VertexId b = d.add_vertex(VertexKind::Boundary);
  d.add_edge(a, b);
  d.add_input(a);
  d.add_input(b);
  return d;
}

Diagram cap() { return adjoint_flip(cup()); }

Diagram make_generator(const Generator& g) {
  switch (g.kind) {
    case Generator::Kind::Z: return z_spider(g.n_inputs, g.n_outputs, g.phase);
    case Generator::Kind::X: return x_spider(g.n_inputs, g.n_outputs, g.phase);
    case Generator::Kind::H: return hadamard();
    case Generator::Kind::Empty: return empty_diagram();
    case Generator::Kind::Swap: return swap_wires();
    case Generator::Kind::Identity: return identity_wire();
    case Generator::Kind::Cup: return cup();
    case Generator::Kind::Cap: return cap();
  }
  return empty_diagram();
}

// ---------------------------------------------------------------------------
// Composition

Diagram tensor(const Diagram& d1, const Diagram& d2) {
  Diagram out = d1;
  const auto vmap = out.absorb(d2);
  for (VertexId b : d2.inputs()) out.add_input(vmap.at(b));
  for (VertexId b : d2.outputs()) out.add_output(vmap.at(b));
  out.compact();
  return out;
}

Diagram tensor_all(const std::vector<Diagram>& parts) {
  Diagram out;
  for (const auto& p : parts) out = tensor(out, p);
  return out;
}

Diagram compose(const Diagram& d2, const Diagram& d1) {
  if (d1.outputs().size() != d2.inputs().size()) {
    throw ArityMismatch("cannot plug " + std::to_string(d1.outputs().size()) +
                        " outputs into " + std::to_string(d2.inputs().size()) + " inputs");
  }
  Diagram out = d1;
  const auto vmap = out.absorb(d2);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 0; i < d1.outputs().size(); ++i) {
    pairs.emplace_back(d1.outputs()[i], vmap.at(d2.inputs()[i]));
  }
  out.mutable_outputs().clear();
  for (VertexId b : d2.outputs()) out.add_output(vmap.at(b));
  out.smooth(pairs);
  out.compact();
  return out;
}

Diagram adjoint_flip(const Diagram& d) {
  Diagram out = d;
  std::swap(out.mutable_inputs(), out.mutable_outputs());
  return out;
}

Diagram colour_swap(const Diagram& d) {
  Diagram out = d;
  for (const auto& [id, v] : d.vertices()) {
    if (v.kind == VertexKind::Z) out.set_kind(id, VertexKind::X);
    if (v.kind == VertexKind::X) out.set_kind(id, VertexKind::Z);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

struct IsoSearch {
  const Diagram& g1;
  const Diagram& g2;
  std::vector<VertexId> order;
  Isomorphism map;
  std::set<VertexId> used;

  bool consistent(VertexId u, VertexId v) const {
    const Vertex& a = g1.vertex(u);
    const Vertex& b = g2.vertex(v);
    if (a.kind != b.kind || a.phase != b.phase) return false;
    if (g1.degree(u) != g2.degree(v)) return false;
    if (g1.multiplicity(u, u) != g2.multiplicity(v, v)) return false;
    for (const auto& [w1, w2] : map) {
      if (g1.multiplicity(u, w1) != g2.multiplicity(v, w2)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const VertexId u = order[depth];
    for (const auto& [v, vert] : g2.vertices()) {
      if (used.count(v) != 0 || vert.kind == VertexKind::Boundary) continue;
      if (!consistent(u, v)) continue;
      map[u] = v;
      used.insert(v);
      if (extend(depth + 1)) return true;
      map.erase(u);
      used.erase(v);
    }
    return false;
  }
};

}  // namespace

std::optional<Isomorphism> find_isomorphism(const Diagram& d1, const Diagram& d2) {
  if (d1.circles() != d2.circles() || d1.inputs().size() != d2.inputs().size() ||
      d1.outputs().size() != d2.outputs().size() ||
      d1.vertices().size() != d2.vertices().size() || d1.edges().size() != d2.edges().size()) {
    return std::nullopt;
  }
  std::map<std::tuple<int, int, std::size_t>, int> hist;
  for (const auto& [id, v] : d1.vertices()) {
    ++hist[{static_cast<int>(v.kind), v.phase.quarter_turns(), d1.degree(id)}];
  }
  for (const auto& [id, v] : d2.vertices()) {
    if (--hist[{static_cast<int>(v.kind), v.phase.quarter_turns(), d2.degree(id)}] < 0) {
      return std::nullopt;
    }
  }

  IsoSearch search{d1, d2, {}, {}, {}};
  auto pin = [&](VertexId a, VertexId b) {
    if (!search.consistent(a, b)) return false;
    search.map[a] = b;
    search.used.insert(b);
    return true;
  };
  for (std::size_t i = 0; i < d1.inputs().size(); ++i) {
    if (!pin(d1.inputs()[i], d2.inputs()[i])) return std::nullopt;
  }
  for (std::size_t i = 0; i < d1.outputs().size(); ++i) {
    if (!pin(d1.outputs()[i], d2.outputs()[i])) return std::nullopt;
  }

  // Breadth-first order from the boundary keeps candidate sets small.
  std::set<VertexId> seen;
  std::deque<VertexId> queue;
  for (const auto& kv : search.map) {
    seen.insert(kv.first);
    queue.push_back(kv.first);
  }
  auto drain = [&]() {
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop_front();
      if (d1.vertex(u).kind != VertexKind::Boundary) search.order.push_back(u);
      for (EdgeId e : d1.incident(u)) {
        const VertexId w = d1.edge(e).other(u);
        if (seen.insert(w).second) queue.push_back(w);
      }
    }
  };
  drain();
  for (const auto& kv : d1.vertices()) {
    if (seen.insert(kv.first).second) {
      queue.push_back(kv.first);
      drain();
    }
  }
  if (!search.extend(0)) return std::nullopt;
  return search.map;
}

}  // namespace zxmin
