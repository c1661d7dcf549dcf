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

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "zxmin/diagram.hpp"
#include "zxmin/verifier.hpp"

namespace zxmin {

struct FuzzConfig {
  std::uint64_t seed = 1;
  int max_wires = 6;     // must stay <= contraction cap - 2
  int max_spiders = 10;
  int steps = 20;
  std::string rule_set = "simplified";
  /// Rewrites applied to one host before a fresh one is drawn.
  int walk_length = 5;

  void validate() const;
};

/// Random composition of generators. Identical configs give identical
/// diagrams, vertex ids included.
Diagram random_diagram(const FuzzConfig& config);
Diagram random_diagram(const FuzzConfig& config, std::mt19937_64& rng);

struct FuzzViolation {
  int application = 0;
  std::string rule;
  /// Single-step derivation from the offending host. Replaying it with the
  /// fuzzed rule set reports SemanticsChanged at step 0.
  Derivation reproducer;
};

struct FuzzReport {
  FuzzConfig config;
  int applications = 0;
  int hosts = 0;
  /// Hosts dropped because a contraction would exceed the cap.
  int skipped = 0;
  std::map<std::string, int> per_rule;  // "S1 LR" -> count
  std::optional<FuzzViolation> violation;

  bool ok() const { return !violation; }
  std::string to_text() const;
  nlohmann::json summary() const;
  /// Reproducer document (a derivation plus seed and rule set), or "" if none.
  std::string reproducer_json() const;
};

/// Applies `config.steps` random rewrites and checks exact standard
/// interpretation after each one; stops at the first change.
FuzzReport run_fuzz(const FuzzConfig& config);

// ---------------------------------------------------------------------------
// Report persistence

struct WrittenReport {
  std::string text_path;
  std::string summary_path;
};

/// Writes `<dir>/<command>-<stamp>.txt` and `.json`, then points
/// `<dir>/latest.json` at them. The stamp is the UTC time of the call; the
/// report bodies do not contain it.
WrittenReport write_report(const std::string& dir, const std::string& command, const std::string& text,
                           const nlohmann::json& summary);

}  // namespace zxmin
