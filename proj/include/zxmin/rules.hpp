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

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "zxmin/diagram.hpp"

namespace zxmin {

enum class Direction { LeftToRight, RightToLeft };

const char* direction_name(Direction d);  // "LR" / "RL"
Direction parse_direction(const std::string& s);

/// Named integer parameters of an instance or match ("a", "alpha", ...).
using Params = std::map<std::string, int>;

std::string params_to_string(const Params& p);

struct InstantiationBounds {
  int max_legs = 3;
  std::vector<Phase> phases = Phase::all();
};

struct RuleInstance {
  Params params;
  Diagram lhs;
  Diagram rhs;
};

/// Where a pattern boundary attaches in the host. For a leg the stub takes
/// the place of end `end` of `edge`; for a plain pattern wire the host edge
/// is cut and the stub hangs off end `end`.
struct Attachment {
  EdgeId edge = 0;
  int end = 0;
  bool cuts_wire = false;
};

struct Match {
  std::string rule;
  Direction direction = Direction::LeftToRight;
  Params params;
  /// Pattern side and replacement side of the chosen instance.
  std::shared_ptr<const RuleInstance> instance;
  std::map<VertexId, VertexId> vertices;        // pattern -> host
  std::map<EdgeId, EdgeId> edges;               // internal pattern edge -> host
  std::map<VertexId, Attachment> attachments;   // pattern boundary -> host
  std::uint64_t host_fingerprint = 0;

  const Diagram& pattern() const;
  const Diagram& replacement() const;
  /// Smallest bound host vertex id (or edge id for vertex-free patterns),
  /// used for the deterministic ordering.
  long anchor() const;
};

std::uint64_t fingerprint(const Diagram& d);

class RewriteRule;

/// Optional hand-written matcher. Receives the rule it is attached to so
/// colour-swapped copies can share one implementation.
using CustomMatcher =
    std::function<std::vector<Match>(const RewriteRule&, const Diagram&, Direction, const Params&)>;

class RewriteRule {
 public:
  using Family = std::function<std::vector<RuleInstance>(const InstantiationBounds&)>;

  RewriteRule(std::string name, std::string provenance, Family family);

  const std::string& name() const { return name_; }
  const std::string& provenance() const { return provenance_; }
  /// Rules that are parts of one axiom share a group (S3p_L and S3p_R form "S3p").
  const std::string& group() const { return group_.empty() ? name_ : group_; }
  RewriteRule& set_group(std::string g) {
    group_ = std::move(g);
    return *this;
  }
  RewriteRule& set_matcher(CustomMatcher m) {
    matcher_ = std::move(m);
    return *this;
  }
  /// Colour of the spiders a hand-written matcher looks for.
  VertexKind colour() const { return colour_; }
  RewriteRule& set_colour(VertexKind c) {
    colour_ = c;
    return *this;
  }

  std::vector<RuleInstance> instantiate(const InstantiationBounds& bounds) const;

  /// All occurrences, sorted by anchor then instance order. `params` is only
  /// consulted by rules that need caller input (S1 unfusion: "mask", "alpha").
  std::vector<Match> find_matches(const Diagram& host, Direction dir, const Params& params = {}) const;

  /// Occurrences of the `dir` pattern of a single instance (no custom matcher).
  std::vector<Match> match_instance(const std::shared_ptr<const RuleInstance>& inst,
                                    const Diagram& host, Direction dir) const;

  /// Replaces the matched occurrence. Throws StaleMatch if `host` is not the
  /// diagram the match was computed for.
  Diagram apply(const Match& m, const Diagram& host) const;

  /// Copy with both sides transformed and the name suffixed.
  enum class Transform { ColourSwap, Flip, Both };
  RewriteRule variant(Transform t) const;

 private:
  std::shared_ptr<const std::vector<RuleInstance>> cached_instances(int max_legs) const;

  std::string name_;
  std::string provenance_;
  std::string group_;
  Family family_;
  CustomMatcher matcher_;
  VertexKind colour_ = VertexKind::Z;

  struct Cache {
    std::mutex mu;
    std::map<int, std::shared_ptr<const std::vector<RuleInstance>>> by_legs;
  };
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Replaces the pattern occurrence described by `m` in `host` with
/// m.replacement(). Exposed for rules whose matcher builds its own binding.
Diagram glue(const Match& m, const Diagram& host);

/// "simplified", "simplified+S2p", "legacy", "modified_3_3"; the fixture set
/// "planted_bug" adds a red identity with a deliberately wrong phase for
/// harness tests.
std::vector<RewriteRule> rule_registry(const std::string& set_name);
const std::vector<std::string>& registry_names();
const RewriteRule& find_rule(const std::vector<RewriteRule>& registry, const std::string& name);

// Small scalar diagrams shared by rule and lemma tables.
namespace scalars {
/// Z(0,1) into X(1,0): sqrt2.
Diagram root2();
/// Z and X joined by k parallel wires.
Diagram joined(int k);
/// Z(0,0,a): 1 + e^{ia}.
Diagram dot(Phase a);
}  // namespace scalars

}  // namespace zxmin
