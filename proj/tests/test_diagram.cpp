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

#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "zxmin/diagram.hpp"
#include "zxmin/diagram_io.hpp"
#include "zxmin/errors.hpp"
#include "zxmin/harness.hpp"

namespace zxmin {
namespace {

Diagram worked_example() {
  return compose(tensor(z_spider(2, 1), identity_wire()), tensor(x_spider(1, 1, kHalfPi), x_spider(1, 2)));
}

TEST(Diagram, GeneratorShapes) {
  const Diagram z = z_spider(2, 3, kPi);
  EXPECT_EQ(z.inputs().size(), 2u);
  EXPECT_EQ(z.outputs().size(), 3u);
  EXPECT_EQ(z.spider_count(), 1u);
  EXPECT_NO_THROW(z.validate());

  const Diagram w = identity_wire();
  EXPECT_EQ(w.spider_count(), 0u);
  EXPECT_EQ(w.edges().size(), 1u);

  EXPECT_TRUE(empty_diagram().vertices().empty());
  EXPECT_EQ(hadamard().vertices().size(), 3u);
}

TEST(Diagram, WorkedExampleShape) {
  const Diagram d = worked_example();
  EXPECT_EQ(d.inputs().size(), 2u);
  EXPECT_EQ(d.outputs().size(), 2u);
  EXPECT_EQ(d.spider_count(), 3u);
}

TEST(Diagram, ComposeChecksArity) {
  EXPECT_THROW(compose(z_spider(2, 1), z_spider(1, 1)), ArityMismatch);
}

TEST(Diagram, CupAfterCapIsACircle) {
  const Diagram loop = compose(cup(), cap());
  EXPECT_TRUE(loop.vertices().empty());
  EXPECT_EQ(loop.circles(), 1);
}

TEST(Diagram, SnakeIsAWire) {
  const Diagram snake = compose(tensor(identity_wire(), cup()), tensor(cap(), identity_wire()));
  EXPECT_TRUE(isomorphic(snake, identity_wire()));
}

TEST(Diagram, InvariantChecks) {
  Diagram d;
  const VertexId h = d.add_vertex(VertexKind::H);
  const VertexId z = d.add_vertex(VertexKind::Z);
  d.add_edge(h, z);
  EXPECT_THROW(d.validate(), InvariantViolation);
  d.add_edge(h, z);
  EXPECT_NO_THROW(d.validate());
  d.add_edge(h, z);
  EXPECT_THROW(d.validate(), InvariantViolation);
}

TEST(Diagram, FlipAndSwapAreInvolutions) {
  std::mt19937_64 rng(5);
  FuzzConfig cfg;
  for (int k = 0; k < 200; ++k) {
    const Diagram d = random_diagram(cfg, rng);
    EXPECT_TRUE(isomorphic(adjoint_flip(adjoint_flip(d)), d));
    EXPECT_TRUE(isomorphic(colour_swap(colour_swap(d)), d));
  }
}

TEST(Diagram, IsomorphismDistinguishesPhasesAndBoundaryOrder) {
  EXPECT_FALSE(isomorphic(z_spider(1, 1, kPi), z_spider(1, 1)));
  EXPECT_FALSE(isomorphic(z_spider(1, 1), x_spider(1, 1)));
  // Legs of one spider are interchangeable.
  EXPECT_TRUE(isomorphic(compose(z_spider(2, 1), swap_wires()), z_spider(2, 1)));
  // Boundary positions are not.
  const Diagram a = tensor(z_spider(1, 1, kPi), identity_wire());
  const Diagram b = tensor(identity_wire(), z_spider(1, 1, kPi));
  EXPECT_FALSE(isomorphic(a, b));
  EXPECT_FALSE(isomorphic(tensor(empty_diagram(), compose(cup(), cap())), empty_diagram()));
}

TEST(Diagram, IsomorphismIgnoresVertexIds) {
  std::mt19937_64 rng(9);
  FuzzConfig cfg;
  for (int k = 0; k < 500; ++k) {
    const Diagram d = random_diagram(cfg, rng);
    const Diagram p = testing::permute_ids(d, rng);
    ASSERT_TRUE(isomorphic(d, p));
    ASSERT_TRUE(isomorphic(p, d));
  }
}

TEST(DiagramIo, RoundTripRandomDiagrams) {
  std::mt19937_64 rng(13);
  FuzzConfig cfg;
  for (int k = 0; k < 1000; ++k) {
    const Diagram d = random_diagram(cfg, rng);
    const std::string text = serialize_diagram(d);
    const Diagram back = parse_diagram(text);
    ASSERT_TRUE(isomorphic(back, d));
    ASSERT_EQ(serialize_diagram(back), text);
  }
}

TEST(DiagramIo, RejectsMalformedDocuments) {
  auto expect_error_at = [](const std::string& text, const std::string& where) {
    try {
      parse_diagram(text);
      ADD_FAILURE() << "accepted: " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.where().rfind(where, 0), 0u) << e.what();
    }
  };
  // Degree-3 Hadamard.
  expect_error_at(
      R"({"inputs":[],"outputs":[],"vertices":[{"id":0,"kind":"H"},{"id":1,"kind":"Z","phase":0}],)"
      R"("edges":[[0,1],[0,1],[0,1]],"circles":0})",
      "");
  // Phase on a boundary.
  expect_error_at(
      R"({"inputs":[0],"outputs":[1],"vertices":[{"id":0,"kind":"B","phase":1},{"id":1,"kind":"B"}],)"
      R"("edges":[[0,1]],"circles":0})",
      "/vertices/0/phase");
  // Missing phase on a spider.
  expect_error_at(R"({"inputs":[],"outputs":[],"vertices":[{"id":0,"kind":"Z"}],"edges":[],"circles":0})",
                  "/vertices/0");
  // Unknown kind, dangling edge, bad JSON.
  expect_error_at(R"({"inputs":[],"outputs":[],"vertices":[{"id":0,"kind":"Q"}],"edges":[],"circles":0})",
                  "/vertices/0/kind");
  expect_error_at(R"({"inputs":[],"outputs":[],"vertices":[],"edges":[[0,1]],"circles":0})", "");
  EXPECT_THROW(parse_diagram("{"), ParseError);
}

TEST(DiagramIo, RenderIsStableUnderRenumbering) {
  std::mt19937_64 rng(17);
  const Diagram d = worked_example();
  const std::string dot = render_dot(d);
  EXPECT_NE(dot.find("X:pi/2"), std::string::npos);
  EXPECT_NE(dot.find("in_1"), std::string::npos);
  EXPECT_NE(dot.find("out_0"), std::string::npos);
  // Node names follow ids, so a renumbered copy is compared by its labels.
  const Diagram p = testing::permute_ids(d, rng);
  auto labels = [](const std::string& text) {
    std::multiset<std::string> out;
    std::size_t pos = 0;
    while ((pos = text.find("label=\"", pos)) != std::string::npos) {
      const std::size_t end = text.find('"', pos + 7);
      out.insert(text.substr(pos + 7, end - pos - 7));
      pos = end;
    }
    return out;
  };
  EXPECT_EQ(labels(render_dot(p)), labels(dot));
  EXPECT_EQ(render_dot(p), render_dot(p));
  EXPECT_EQ(render_dot(empty_diagram()), "graph diagram {\n}\n");
}

}  // namespace
}  // namespace zxmin
