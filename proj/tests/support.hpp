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

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "zxmin/diagram.hpp"
#include "zxmin/semantics.hpp"

namespace zxmin::testing {

using cplx = std::complex<double>;

/// Row-major 2^m x 2^n float matrix, same index convention as Tensor.
struct FloatMatrix {
  std::size_t rows = 1;
  std::size_t cols = 1;
  std::vector<cplx> data{1.0};
  cplx at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/**
 * Brute force over all edge labellings. Shares no code with the contraction
 * engine: each vertex reads its leg bits straight off the edge labels.
 */
inline FloatMatrix brute_force(const Diagram& d, InterpretationKind kind = InterpretationKind::Standard) {
  const std::size_t n_in = d.inputs().size();
  const std::size_t n_out = d.outputs().size();
  FloatMatrix m;
  m.rows = std::size_t{1} << n_out;
  m.cols = std::size_t{1} << n_in;
  m.data.assign(m.rows * m.cols, 0.0);

  std::vector<EdgeId> edge_ids;
  std::map<EdgeId, std::size_t> slot;
  for (const auto& kv : d.edges()) {
    slot[kv.first] = edge_ids.size();
    edge_ids.push_back(kv.first);
  }
  const double r2 = std::sqrt(2.0);
  const cplx i(0.0, 1.0);
  const std::size_t n_edges = edge_ids.size();
  for (std::uint64_t labels = 0; labels < (std::uint64_t{1} << n_edges); ++labels) {
    auto bit = [&](EdgeId e) { return static_cast<int>((labels >> slot.at(e)) & 1); };
    cplx value = 1.0;
    for (const auto& [id, v] : d.vertices()) {
      if (v.kind == VertexKind::Boundary) continue;
      std::vector<int> legs;
      for (EdgeId e : d.incident(id)) legs.push_back(bit(e));
      const double alpha = v.phase.quarter_turns() * M_PI / 2;
      const cplx phase = std::exp(i * alpha);
      const int deg = static_cast<int>(legs.size());
      int ones = 0;
      for (int b : legs) ones += b;
      cplx f;
      if (v.kind == VertexKind::Z) {
        f = (ones == 0 ? cplx(1.0) : cplx(0.0)) + (ones == deg ? phase : cplx(0.0));
      } else if (v.kind == VertexKind::X) {
        f = std::pow(1 / r2, deg) * (1.0 + phase * (ones % 2 ? -1.0 : 1.0));
        if (kind == InterpretationKind::Flat) f *= std::pow(i, deg % 4);
      } else {
        f = (legs[0] & legs[1] ? -1.0 : 1.0) / r2;
        if (kind == InterpretationKind::Flat) f *= -i;
      }
      value *= f;
      if (value == 0.0) break;
    }
    if (value == 0.0) continue;
    std::size_t row = 0;
    std::size_t col = 0;
    for (VertexId b : d.outputs()) row = (row << 1) | bit(d.incident(b).front());
    for (VertexId b : d.inputs()) col = (col << 1) | bit(d.incident(b).front());
    m.data[row * m.cols + col] += value;
  }
  const double loops = std::pow(2.0, static_cast<double>(d.circles()));
  for (auto& x : m.data) x *= loops;
  return m;
}

inline bool close_to(const Tensor& t, const FloatMatrix& m, double tol = 1e-9) {
  if (t.rows() != m.rows || t.cols() != m.cols) return false;
  for (std::size_t r = 0; r < m.rows; ++r)
    for (std::size_t c = 0; c < m.cols; ++c)
      if (std::abs(t.at(r, c).to_complex() - m.at(r, c)) > tol) return false;
  return true;
}

/// Re-numbers vertices with a random permutation (same graph, new ids).
inline Diagram permute_ids(const Diagram& d, std::mt19937_64& rng) {
  std::vector<VertexId> ids;
  for (const auto& kv : d.vertices()) ids.push_back(kv.first);
  std::vector<VertexId> shuffled = ids;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::map<VertexId, VertexId> to;
  for (std::size_t k = 0; k < ids.size(); ++k) to[ids[k]] = shuffled[k];
  Diagram out;
  for (const auto& kv : d.vertices()) {
    Vertex v = kv.second;
    v.id = to[kv.first];
    out.insert_vertex(v);
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& kv : d.edges()) edges.emplace_back(to[kv.second.a], to[kv.second.b]);
  std::shuffle(edges.begin(), edges.end(), rng);
  for (auto [a, b] : edges) out.add_edge(a, b);
  for (VertexId b : d.inputs()) out.add_input(to[b]);
  for (VertexId b : d.outputs()) out.add_output(to[b]);
  out.add_circles(d.circles());
  return out;
}

}  // namespace zxmin::testing
