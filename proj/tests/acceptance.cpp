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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "zxmin/diagram_io.hpp"
#include "zxmin/errors.hpp"
#include "zxmin/harness.hpp"
#include "zxmin/semantics.hpp"
#include "zxmin/verifier.hpp"

#ifndef ZXMIN_DATA_DIR
#error "ZXMIN_DATA_DIR must point at data/"
#endif

namespace {

using namespace zxmin;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string join(const std::set<std::string>& s) {
  std::string out = "{";
  for (const auto& x : s) out += (out.size() > 1 ? ", " : "") + x;
  return out + "}";
}

Outcome worked_example() {
  const auto t0 = Clock::now();
  const Diagram d = load_diagram(std::string(ZXMIN_DATA_DIR) + "/diagrams/worked-example.json");
  const Tensor t = interpret(d);
  const double secs = seconds_since(t0);
  // (e^{i pi/4} / 2) [[1,0,-i,0],[0,1,0,-i],[0,-i,0,1],[-i,0,1,0]]
  const Amplitude s = Amplitude::omega_pow(1) * Amplitude::inv_sqrt2() * Amplitude::inv_sqrt2();
  const Amplitude m = -(s * Amplitude::i());
  const Amplitude z;
  const Tensor expected(BoundarySignature{2, 2}, {s, z, m, z, z, s, z, m, z, m, z, s, m, z, s, z});
  std::ostringstream msg;
  msg << "exact match " << (t == expected ? "yes" : "no") << ", " << std::fixed << std::setprecision(3) << secs
      << " s";
  return {t == expected && secs < 1.0, msg.str()};
}

Outcome standard_sweep() {
  const auto t0 = Clock::now();
  std::size_t instances = 0;
  std::set<std::string> bad;
  for (const auto& set : registry_names()) {
    const auto r = sweep_soundness(set, InterpretationKind::Standard);
    instances += r.verdicts.size();
    for (const auto& rule : r.unequal_rules()) bad.insert(set + ":" + rule);
  }
  const double secs = seconds_since(t0);
  std::ostringstream msg;
  msg << instances << " instances over " << registry_names().size() << " sets, unequal " << join(bad) << ", "
      << std::fixed << std::setprecision(2) << secs << " s";
  return {bad.empty() && secs < 60.0, msg.str()};
}

Outcome flat_partition(const std::string& set, const std::set<std::string>& expected) {
  const auto r = sweep_soundness(set, InterpretationKind::Flat);
  const auto got = r.unequal_rules();
  const bool predictor_ok = r.predictor_mismatches().empty();
  return {got == expected && predictor_ok,
          set + " unequal " + join(got) + ", predictor " + (predictor_ok ? "consistent" : "INCONSISTENT")};
}

Outcome flat_factorization() {
  std::mt19937_64 rng(2024);
  FuzzConfig cfg;
  int failures = 0;
  int skipped = 0;
  for (int k = 0; k < 10000; ++k) {
    const Diagram d = random_diagram(cfg, rng);
    // Exponent counted here rather than through flat_phase_exponent.
    long q = 0;
    for (const auto& [id, v] : d.vertices()) {
      if (v.kind == VertexKind::X) q += static_cast<long>(d.degree(id));
      if (v.kind == VertexKind::H) q -= 1;
    }
    q = ((q % 4) + 4) % 4;
    try {
      const Tensor flat = interpret(d, InterpretationKind::Flat);
      const Tensor standard = interpret(d).scaled(Amplitude::phase(static_cast<int>(q)));
      if (!(flat == standard)) ++failures;
    } catch (const ContractionCapExceeded&) {
      ++skipped;
    }
  }
  return {failures == 0 && skipped == 0,
          "10000 diagrams, " + std::to_string(failures) + " mismatches, " + std::to_string(skipped) + " skipped"};
}

Outcome audits() {
  std::ostringstream msg;
  bool ok = true;
  for (const auto& a : structural_audits("simplified")) {
    ok = ok && a.passed();
    msg << a.id << "=" << join(a.observed) << " ";
  }
  return {ok, msg.str()};
}

Outcome lemmas() {
  const auto t0 = Clock::now();
  const auto results = lemma_suite();
  const double secs = seconds_since(t0);
  std::set<std::string> names;
  std::size_t failed = 0;
  for (const auto& r : results) {
    names.insert(r.lemma.name);
    if (!r.equal) ++failed;
  }
  std::ostringstream msg;
  msg << names.size() << " lemmas, " << results.size() << " cases, " << failed << " failures, " << std::fixed
      << std::setprecision(2) << secs << " s";
  return {failed == 0 && names.size() >= 25 && secs < 30.0, msg.str()};
}

Outcome derivations() {
  const std::vector<std::string> scripts = {"green_identity", "hadamard_self_inverse", "colour_swapped_h", "hopf",
                                            "colour_swapped_b1"};
  const auto registry = rule_registry("simplified+S2p");
  std::ostringstream msg;
  bool ok = true;
  for (const auto& name : scripts) {
    try {
      const auto d = load_derivation(std::string(ZXMIN_DATA_DIR) + "/derivations/" + name + ".deriv.json");
      const auto r = replay(d, registry);
      ok = ok && r.ok();
      msg << name << ":" << (r.ok() ? std::to_string(d.steps.size()) + " steps" : replay_status_name(r.status)) << " ";
    } catch (const Error& e) {
      ok = false;
      msg << name << ": " << e.what() << " ";
    }
  }
  return {ok, msg.str()};
}

Outcome fuzz() {
  FuzzConfig cfg;
  cfg.seed = 1;
  cfg.steps = 10000;
  cfg.rule_set = "simplified+S2p";
  const auto sound = run_fuzz(cfg);
  FuzzConfig bug = cfg;
  bug.rule_set = "planted_bug";
  bug.steps = 2000;
  const auto planted = run_fuzz(bug);
  bool replays = false;
  if (!planted.ok()) {
    const auto r = replay(parse_derivation(planted.reproducer_json()), rule_registry("planted_bug"));
    replays = r.status == ReplayStatus::SemanticsChanged;
  }
  std::ostringstream msg;
  msg << sound.applications << " sound applications, " << (sound.ok() ? 0 : 1) << " violations; planted bug "
      << (planted.ok() ? "MISSED" : "caught") << ", reproducer " << (replays ? "replays" : "DOES NOT replay");
  return {sound.ok() && sound.applications == 10000 && !planted.ok() && replays, msg.str()};
}

Outcome serialization() {
  std::mt19937_64 rng(77);
  FuzzConfig cfg;
  int failures = 0;
  for (int k = 0; k < 1000; ++k) {
    const Diagram d = random_diagram(cfg, rng);
    if (!isomorphic(parse_diagram(serialize_diagram(d)), d)) ++failures;
  }
  auto rejected = [](const std::string& text) {
    try {
      parse_diagram(text);
      return false;
    } catch (const ParseError&) {
      return true;
    }
  };
  const bool h3 = rejected(
      R"({"inputs":[],"outputs":[],"vertices":[{"id":0,"kind":"H"},{"id":1,"kind":"Z","phase":0}],)"
      R"("edges":[[0,1],[0,1],[0,1]],"circles":0})");
  const bool bphase = rejected(
      R"({"inputs":[0],"outputs":[1],"vertices":[{"id":0,"kind":"B","phase":2},{"id":1,"kind":"B"}],)"
      R"("edges":[[0,1]],"circles":0})");
  return {failures == 0 && h3 && bphase, "1000 round trips, " + std::to_string(failures) +
                                             " failures; degree-3 H " + (h3 ? "rejected" : "ACCEPTED") +
                                             ", boundary phase " + (bphase ? "rejected" : "ACCEPTED")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"worked example", worked_example},
      {"standard soundness sweep", standard_sweep},
      {"flat partition of the simplified set", [] { return flat_partition("simplified", {"B2p", "S3p_R"}); }},
      {"flat partition of the modified set", [] { return flat_partition("modified_3_3", {"B2p"}); }},
      {"flat factorization law", flat_factorization},
      {"structural audits", audits},
      {"lemma suite", lemmas},
      {"derivation replay", derivations},
      {"fuzz invariance", fuzz},
      {"serialization", serialization},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << (i + 1) << " " << (o.pass ? "PASS" : "FAIL") << ": " << criteria[i].first << " ("
              << o.detail << ")" << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
