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

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "zxmin/rules.hpp"
#include "zxmin/semantics.hpp"

namespace zxmin {

// ---------------------------------------------------------------------------
// Soundness sweeps

struct InstanceVerdict {
  std::string rule;
  Params params;
  bool equal = true;
  int lhs_flat_exponent = 0;
  int rhs_flat_exponent = 0;
  /// Standard interpretation of the left side is zero (every predictor fits).
  bool degenerate = false;
  /// Filled for unequal instances only.
  std::optional<Tensor> lhs_tensor;
  std::optional<Tensor> rhs_tensor;
  Diagram lhs;
  Diagram rhs;
};

struct RuleTally {
  std::string rule;
  std::size_t instances = 0;
  std::size_t unequal = 0;
};

struct SoundnessReport {
  std::string set_name;
  InterpretationKind kind = InterpretationKind::Standard;
  InstantiationBounds bounds;
  std::vector<InstanceVerdict> verdicts;
  std::vector<RuleTally> tallies;  // registry order

  std::set<std::string> unequal_rules() const;
  /// Instances whose flat verdict disagrees with the predictor comparison,
  /// skipping degenerate (zero) instances.
  std::vector<const InstanceVerdict*> predictor_mismatches() const;
  std::string to_text() const;
  nlohmann::json summary() const;
};

SoundnessReport sweep_soundness(const std::string& set_name, InterpretationKind kind,
                                const InstantiationBounds& bounds = {});

/// Rules the sweep is expected to find unequal, or nullopt when no claim is
/// made for that combination.
std::optional<std::set<std::string>> claimed_unequal(const std::string& set_name, InterpretationKind kind);

// ---------------------------------------------------------------------------
// Structural audits

struct AuditResult {
  std::string id;           // "a".."e"
  std::string description;
  std::set<std::string> expected;
  std::set<std::string> observed;
  bool passed() const { return expected == observed; }
};

/// Shape predicates evaluated on every instance of every rule in the set.
std::vector<AuditResult> structural_audits(const std::string& set_name,
                                           const InstantiationBounds& bounds = {});

// Individual predicates, exposed for tests.
bool has_empty_side(const Diagram& lhs, const Diagram& rhs);
bool changes_boundary_connectivity(const Diagram& lhs, const Diagram& rhs);
bool frees_plain_wire(const Diagram& lhs, const Diagram& rhs);
bool reduces_high_degree_dot(const Diagram& lhs, const Diagram& rhs);
bool has_wild_red_spider(const Diagram& lhs, const Diagram& rhs);

// ---------------------------------------------------------------------------
// Lemma suite

struct LemmaCase {
  std::string name;
  Params params;
  Diagram lhs;
  Diagram rhs;
};

std::vector<LemmaCase> lemma_cases();

struct LemmaResult {
  LemmaCase lemma;
  bool equal = false;
};

std::vector<LemmaResult> lemma_suite(InterpretationKind kind = InterpretationKind::Standard);

// ---------------------------------------------------------------------------
// Derivations

struct DerivationStep {
  std::string rule;
  Direction direction = Direction::LeftToRight;
  int match = 0;
  Params params;
  std::optional<Diagram> checkpoint;
};

struct Derivation {
  Diagram start;
  std::vector<DerivationStep> steps;
  Diagram goal;
};

Derivation parse_derivation(const std::string& text);
Derivation load_derivation(const std::string& path);
std::string serialize_derivation(const Derivation& d);

enum class ReplayStatus { Verified, StepInapplicable, SemanticsChanged, CheckpointMismatch, GoalMismatch, UnknownRule };
const char* replay_status_name(ReplayStatus s);

struct ReplayResult {
  ReplayStatus status = ReplayStatus::Verified;
  /// Index of the failing step, or -1.
  int failed_step = -1;
  std::string message;
  std::vector<std::string> trace;
  Diagram final_diagram;
  bool ok() const { return status == ReplayStatus::Verified; }
};

ReplayResult replay(const Derivation& derivation, const std::vector<RewriteRule>& registry);

// ---------------------------------------------------------------------------
// Necessity report

std::string necessity_report(const SoundnessReport& simplified_flat, const SoundnessReport& modified_flat,
                             const std::vector<AuditResult>& audits);

}  // namespace zxmin
