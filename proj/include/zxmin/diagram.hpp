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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zxmin/errors.hpp"

namespace zxmin {

/// A stabilizer phase, stored in quarter turns (units of pi/2) modulo 4.
class Phase {
 public:
  constexpr Phase() = default;
  constexpr explicit Phase(int quarter_turns) : q_(((quarter_turns % 4) + 4) % 4) {}

  constexpr int quarter_turns() const { return q_; }
  constexpr bool is_zero() const { return q_ == 0; }

  friend constexpr Phase operator+(Phase a, Phase b) { return Phase(a.q_ + b.q_); }
  friend constexpr Phase operator-(Phase a, Phase b) { return Phase(a.q_ - b.q_); }
  constexpr Phase operator-() const { return Phase(-q_); }
  friend constexpr bool operator==(Phase a, Phase b) { return a.q_ == b.q_; }
  friend constexpr bool operator!=(Phase a, Phase b) { return a.q_ != b.q_; }
  friend constexpr bool operator<(Phase a, Phase b) { return a.q_ < b.q_; }

  /// "0", "pi/2", "pi", "-pi/2".
  std::string to_string() const;

  static std::vector<Phase> all() { return {Phase(0), Phase(1), Phase(2), Phase(3)}; }

 private:
  int q_ = 0;
};

inline constexpr Phase kZeroPhase{0};
inline constexpr Phase kHalfPi{1};
inline constexpr Phase kPi{2};
inline constexpr Phase kMinusHalfPi{3};

enum class VertexKind { Z, X, H, Boundary };

using VertexId = int;
using EdgeId = int;

struct Vertex {
  VertexId id = 0;
  VertexKind kind = VertexKind::Z;
  Phase phase;

  bool is_spider() const { return kind == VertexKind::Z || kind == VertexKind::X; }
};

/// Unordered pair of endpoints, stored with a <= b. a == b is a self-loop.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  VertexId other(VertexId v) const { return v == a ? b : a; }
  bool is_loop() const { return a == b; }
};

struct BoundarySignature {
  std::size_t n_inputs = 0;
  std::size_t n_outputs = 0;

  friend bool operator==(const BoundarySignature&, const BoundarySignature&) = default;
};

/**
 * Open multigraph form of a ZX-diagram.
 *
 * Spider legs are an unordered multiset of edges and there is no input/output
 * distinction on internal vertices, so any two drawings with the same
 * connectivity are the same value. Wires, swaps, cups and caps carry no
 * vertex: they are edges between whatever they connect. Closed plain loops
 * have no vertex to hang on and are counted in `circles`.
 *
 * Ids are allocated from monotone counters so the same construction sequence
 * always yields the same ids.
 */
class Diagram {
 public:
  Diagram() = default;

  VertexId add_vertex(VertexKind kind, Phase phase = {});
  /// Inserts a vertex with a caller-chosen id (used by parsers).
  void insert_vertex(const Vertex& v);
  EdgeId add_edge(VertexId a, VertexId b);
  void remove_edge(EdgeId e);
  /// Removes the vertex and all incident edges. Boundary lists are not touched.
  void remove_vertex(VertexId v);
  void set_phase(VertexId v, Phase p) { vertices_.at(v).phase = p; }
  void set_kind(VertexId v, VertexKind k) { vertices_.at(v).kind = k; }

  void add_input(VertexId b) { inputs_.push_back(b); }
  void add_output(VertexId b) { outputs_.push_back(b); }
  std::vector<VertexId>& mutable_inputs() { return inputs_; }
  std::vector<VertexId>& mutable_outputs() { return outputs_; }
  void add_circles(long n) { circles_ += n; }

  const std::map<VertexId, Vertex>& vertices() const { return vertices_; }
  const std::map<EdgeId, Edge>& edges() const { return edges_; }
  const Vertex& vertex(VertexId v) const { return vertices_.at(v); }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  bool has_vertex(VertexId v) const { return vertices_.count(v) != 0; }
  bool has_edge(EdgeId e) const { return edges_.count(e) != 0; }
  const std::vector<VertexId>& inputs() const { return inputs_; }
  const std::vector<VertexId>& outputs() const { return outputs_; }
  long circles() const { return circles_; }

  /// Incident edge ids; a self-loop is listed twice.
  const std::vector<EdgeId>& incident(VertexId v) const;
  /// Number of edge endpoints at v (self-loops count twice).
  std::size_t degree(VertexId v) const { return incident(v).size(); }
  /// Number of edges joining a and b.
  std::size_t multiplicity(VertexId a, VertexId b) const;

  BoundarySignature signature() const { return {inputs_.size(), outputs_.size()}; }
  std::size_t spider_count() const;
  bool is_boundary_free() const { return inputs_.empty() && outputs_.empty(); }

  /// Throws InvariantViolation describing the first broken invariant.
  void validate() const;

  /// Renumbers vertices and edges to 0..n-1 preserving their relative order.
  void compact();

  /// Shifts every vertex id up by `offset`.
  Diagram relabelled(VertexId offset) const;

  /// Vertices of `other` are appended with fresh ids; returns the id map.
  std::map<VertexId, VertexId> absorb(const Diagram& other);

  /**
   * Identifies each pair of degree-1 port vertices: both are deleted and their
   * neighbours joined by one edge. Chains of ports resolve transitively; a
   * chain that closes on itself becomes a circle.
   */
  void smooth(const std::vector<std::pair<VertexId, VertexId>>& pairs);

  friend bool operator==(const Diagram& a, const Diagram& b);

 private:
  std::map<VertexId, Vertex> vertices_;
  std::map<EdgeId, Edge> edges_;
  std::map<VertexId, std::vector<EdgeId>> incidence_;
  std::vector<VertexId> inputs_;
  std::vector<VertexId> outputs_;
  long circles_ = 0;
  VertexId next_vertex_ = 0;
  EdgeId next_edge_ = 0;
};

// ---------------------------------------------------------------------------
// Generators

struct Generator {
  enum class Kind { Z, X, H, Empty, Swap, Identity, Cup, Cap };
  Kind kind = Kind::Empty;
  int n_inputs = 0;
  int n_outputs = 0;
  Phase phase;
};

Diagram make_generator(const Generator& g);

Diagram z_spider(int n_inputs, int n_outputs, Phase phase = {});
Diagram x_spider(int n_inputs, int n_outputs, Phase phase = {});
Diagram spider(VertexKind colour, int n_inputs, int n_outputs, Phase phase = {});
Diagram hadamard();
Diagram empty_diagram();
Diagram swap_wires();
Diagram identity_wire();
/// Effect joining two inputs (epsilon : 2 -> 0).
Diagram cup();
/// State joining two outputs (eta : 0 -> 2).
Diagram cap();
/// n parallel identity wires.
Diagram wires(int n);

// ---------------------------------------------------------------------------
// Composition and symmetries

/// Side-by-side placement, d2 to the right of d1.
Diagram tensor(const Diagram& d1, const Diagram& d2);
Diagram tensor_all(const std::vector<Diagram>& parts);
/// d2 after d1: the outputs of d1 are plugged into the inputs of d2.
Diagram compose(const Diagram& d2, const Diagram& d1);
/// Upside-down variant: input and output lists exchanged.
Diagram adjoint_flip(const Diagram& d);
/// Red and green exchanged, phases kept.
Diagram colour_swap(const Diagram& d);

/// Vertex map from d1 to d2 when an isomorphism exists.
using Isomorphism = std::map<VertexId, VertexId>;

/**
 * Kind- and phase-preserving multigraph isomorphism that fixes input and
 * output positions and requires equal circle counts.
 */
std::optional<Isomorphism> find_isomorphism(const Diagram& d1, const Diagram& d2);
inline bool isomorphic(const Diagram& d1, const Diagram& d2) {
  return find_isomorphism(d1, d2).has_value();
}

const char* kind_name(VertexKind k);

}  // namespace zxmin
