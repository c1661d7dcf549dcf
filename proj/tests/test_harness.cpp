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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "zxmin/diagram_io.hpp"
#include "zxmin/harness.hpp"
#include "zxmin/semantics.hpp"

namespace zxmin {
namespace {

namespace fs = std::filesystem;

TEST(RandomDiagram, SeedFixesTheDiagram) {
  FuzzConfig cfg;
  cfg.seed = 99;
  EXPECT_EQ(serialize_diagram(random_diagram(cfg)), serialize_diagram(random_diagram(cfg)));
  cfg.seed = 100;
  const Diagram other = random_diagram(cfg);
  cfg.seed = 99;
  EXPECT_NE(serialize_diagram(other), serialize_diagram(random_diagram(cfg)));
}

TEST(RandomDiagram, ManySamplesAreWellFormed) {
  std::mt19937_64 rng(1);
  FuzzConfig cfg;
  std::size_t max_spiders = 0;
  for (int k = 0; k < 10000; ++k) {
    const Diagram d = random_diagram(cfg, rng);
    ASSERT_NO_THROW(d.validate());
    ASSERT_LE(d.inputs().size() + d.outputs().size(), static_cast<std::size_t>(cfg.max_wires));
    ASSERT_LE(d.spider_count(), static_cast<std::size_t>(cfg.max_spiders));
    max_spiders = std::max(max_spiders, d.spider_count());
  }
  EXPECT_EQ(max_spiders, static_cast<std::size_t>(cfg.max_spiders));
}

TEST(RandomDiagram, InterpretationsStayExact) {
  std::mt19937_64 rng(2);
  FuzzConfig cfg;
  for (int k = 0; k < 500; ++k) {
    const Tensor t = interpret(random_diagram(cfg, rng));
    for (const auto& a : t.entries()) {
      Amplitude c = a;
      c.canonicalize();
      ASSERT_EQ(c, a);
    }
  }
}

TEST(Fuzz, SoundSetHasNoViolations) {
  FuzzConfig cfg;
  cfg.seed = 1;
  cfg.steps = 1000;
  const auto report = run_fuzz(cfg);
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.applications, 1000);
}

TEST(Fuzz, ReportsAreByteIdentical) {
  FuzzConfig cfg;
  cfg.seed = 5;
  cfg.steps = 300;
  cfg.rule_set = "simplified+S2p";
  const auto a = run_fuzz(cfg);
  const auto b = run_fuzz(cfg);
  EXPECT_EQ(a.to_text(), b.to_text());
  EXPECT_EQ(a.summary().dump(), b.summary().dump());
}

TEST(Fuzz, PlantedBugIsCaughtAndReproducible) {
  FuzzConfig cfg;
  cfg.seed = 3;
  cfg.steps = 2000;
  cfg.rule_set = "planted_bug";
  const auto report = run_fuzz(cfg);
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violation->rule, "S2p_planted");
  // The reproducer file replays to the same failure.
  const Derivation d = parse_derivation(report.reproducer_json());
  const auto r = replay(d, rule_registry("planted_bug"));
  EXPECT_EQ(r.status, ReplayStatus::SemanticsChanged);
  EXPECT_EQ(r.failed_step, 0);
  EXPECT_EQ(report.reproducer_json(), run_fuzz(cfg).reproducer_json());
}

TEST(Reports, FilesAndManifest) {
  const fs::path dir = fs::temp_directory_path() / "zxmin_reports_test";
  fs::remove_all(dir);
  const auto first = write_report(dir.string(), "fuzz", "hello\n", {{"k", 1}});
  const auto second = write_report(dir.string(), "fuzz", "again\n", {{"k", 2}});
  EXPECT_NE(first.text_path, second.text_path);
  EXPECT_TRUE(fs::exists(first.text_path));
  std::ifstream in(dir / "latest.json");
  const auto manifest = nlohmann::json::parse(in);
  EXPECT_EQ(manifest["fuzz"]["text"], fs::path(second.text_path).filename().string());
  std::ifstream text(second.text_path);
  std::stringstream buf;
  buf << text.rdbuf();
  EXPECT_EQ(buf.str(), "again\n");
  fs::remove_all(dir);
}

}  // namespace
}  // namespace zxmin
