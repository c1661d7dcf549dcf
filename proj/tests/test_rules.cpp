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
#include <set>

#include "support.hpp"
#include "zxmin/errors.hpp"
#include "zxmin/harness.hpp"
#include "zxmin/rules.hpp"
#include "zxmin/semantics.hpp"

namespace zxmin {
namespace {

TEST(Rules, RegistryContents) {
  const auto simplified = rule_registry("simplified");
  std::vector<std::string> names;
  std::set<std::string> groups;
  for (const auto& r : simplified) {
    names.push_back(r.name());
    groups.insert(r.group());
  }
  EXPECT_EQ(names, (std::vector<std::string>{"S1", "S3p_L", "S3p_R", "B1", "B2p", "EUp", "H", "IVp", "ZOp"}));
  EXPECT_EQ(groups.size(), 8u);  // S3p_L and S3p_R are one axiom
  EXPECT_EQ(rule_registry("simplified+S2p").size(), 10u);
  EXPECT_EQ(rule_registry("modified_3_3").size(), 9u);
  EXPECT_NO_THROW(find_rule(rule_registry("legacy"), "K2_cs_flip"));
  EXPECT_THROW(find_rule(simplified, "nope"), UnknownRule);
  EXPECT_THROW(rule_registry("nope"), UnknownRule);
}

TEST(Rules, EveryInstanceIsStandardSound) {
  for (const auto& set : registry_names()) {
    for (const auto& rule : rule_registry(set)) {
      for (const auto& inst : rule.instantiate({})) {
        ASSERT_TRUE(tensors_equal(interpret(inst.lhs), interpret(inst.rhs)))
            << set << " " << rule.name() << " " << params_to_string(inst.params);
      }
    }
  }
}

TEST(Rules, VariantsAreNamedAndTransformed) {
  const auto b1 = find_rule(rule_registry("simplified"), "B1");
  const auto cs = b1.variant(RewriteRule::Transform::ColourSwap);
  const auto fl = b1.variant(RewriteRule::Transform::Flip);
  const auto both = b1.variant(RewriteRule::Transform::Both);
  EXPECT_EQ(cs.name(), "B1_cs");
  EXPECT_EQ(fl.name(), "B1_flip");
  EXPECT_EQ(both.name(), "B1_cs_flip");
  const auto orig = b1.instantiate({}).front();
  EXPECT_TRUE(isomorphic(cs.instantiate({}).front().lhs, colour_swap(orig.lhs)));
  EXPECT_TRUE(isomorphic(fl.instantiate({}).front().rhs, adjoint_flip(orig.rhs)));
}

TEST(Rules, FusionMatchAndApply) {
  const auto s1 = find_rule(rule_registry("simplified"), "S1");
  // Two green spiders joined by one wire, with a Hadamard hanging off one leg.
  const Diagram host = compose(tensor(hadamard(), identity_wire()), compose(z_spider(1, 2, kHalfPi), z_spider(1, 1, kPi)));
  const auto matches = s1.find_matches(host, Direction::LeftToRight);
  ASSERT_EQ(matches.size(), 1u);
  const Diagram out = s1.apply(matches.front(), host);
  EXPECT_TRUE(isomorphic(out, compose(tensor(hadamard(), identity_wire()), z_spider(1, 2, kMinusHalfPi))));
  EXPECT_EQ(interpret(out), interpret(host));
}

TEST(Rules, UnfusionUsesMask) {
  const auto s1 = find_rule(rule_registry("simplified"), "S1");
  const Diagram host = z_spider(2, 2, kPi);
  // Incidences 0 and 1 move to the first spider, which takes phase pi/2.
  const auto matches = s1.find_matches(host, Direction::RightToLeft, {{"mask", 3}, {"alpha", 1}});
  ASSERT_EQ(matches.size(), 1u);
  const Diagram out = s1.apply(matches.front(), host);
  EXPECT_EQ(out.spider_count(), 2u);
  EXPECT_EQ(interpret(out), interpret(host));
}

TEST(Rules, PlainWirePatternCutsAnyEdge) {
  const auto s3l = find_rule(rule_registry("simplified"), "S3p_L");
  const Diagram host = compose(z_spider(1, 1, kPi), x_spider(1, 1, kHalfPi));
  const auto matches = s3l.find_matches(host, Direction::RightToLeft);
  ASSERT_EQ(matches.size(), 6u);  // each wire, in both orientations
  for (const auto& m : matches) {
    const Diagram out = s3l.apply(m, host);
    EXPECT_EQ(out.spider_count(), 3u);
    EXPECT_EQ(interpret(out), interpret(host));
  }
}

TEST(Rules, StaleMatchIsRejected) {
  const auto s1 = find_rule(rule_registry("simplified"), "S1");
  const Diagram host = compose(z_spider(1, 1), z_spider(1, 1));
  const auto matches = s1.find_matches(host, Direction::LeftToRight);
  ASSERT_FALSE(matches.empty());
  Diagram changed = host;
  for (const auto& [id, v] : host.vertices())
    if (v.is_spider()) {
      changed.set_phase(id, kPi);
      break;
    }
  EXPECT_THROW(s1.apply(matches.front(), changed), StaleMatch);
}

TEST(Rules, MatchOrderIsDeterministic) {
  const auto h = find_rule(rule_registry("simplified"), "H");
  std::mt19937_64 rng(3);
  FuzzConfig cfg;
  for (int k = 0; k < 50; ++k) {
    const Diagram d = random_diagram(cfg, rng);
    const auto a = h.find_matches(d, Direction::RightToLeft);
    const auto b = h.find_matches(d, Direction::RightToLeft);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      ASSERT_EQ(a[i].vertices, b[i].vertices);
      ASSERT_EQ(a[i].params, b[i].params);
    }
    for (std::size_t i = 1; i < a.size(); ++i) ASSERT_LE(a[i - 1].anchor(), a[i].anchor());
  }
}

TEST(Rules, RandomApplicationsPreserveSemantics) {
  std::mt19937_64 rng(47);
  FuzzConfig cfg;
  const auto registry = rule_registry("simplified+S2p");
  int applied = 0;
  for (int k = 0; k < 150; ++k) {
    const Diagram host = random_diagram(cfg, rng);
    const Tensor before = interpret(host);
    for (const auto& rule : registry) {
      for (Direction dir : {Direction::LeftToRight, Direction::RightToLeft}) {
        const auto matches = rule.find_matches(host, dir, {{"mask", 1}, {"alpha", 2}});
        if (matches.empty()) continue;
        const Diagram out = rule.apply(matches[rng() % matches.size()], host);
        ASSERT_NO_THROW(out.validate());
        ASSERT_EQ(interpret(out), before) << rule.name() << " " << direction_name(dir);
        ++applied;
      }
    }
  }
  EXPECT_GT(applied, 500);
}

}  // namespace
}  // namespace zxmin
