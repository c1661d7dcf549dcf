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

#include "zxmin/harness.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "zxmin/errors.hpp"
#include "zxmin/semantics.hpp"

namespace zxmin {

using nlohmann::json;
namespace fs = std::filesystem;

void FuzzConfig::validate() const {
  if (max_wires < 0 || max_wires > 12) throw Error("max_wires must be in 0..12");
  if (max_spiders < 0) throw Error("max_spiders must be non-negative");
  if (steps < 0) throw Error("steps must be non-negative");
  if (walk_length < 1) throw Error("walk_length must be positive");
}

namespace {

// Plain modulo keeps the stream identical across standard libraries, which
// std::uniform_int_distribution does not promise.
int pick(std::mt19937_64& rng, int n) { return n <= 0 ? 0 : static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

}  // namespace

Diagram random_diagram(const FuzzConfig& config) {
  std::mt19937_64 rng(config.seed);
  return random_diagram(config, rng);
}

Diagram random_diagram(const FuzzConfig& config, std::mt19937_64& rng) {
  config.validate();
  const int n_in = pick(rng, config.max_wires / 2 + 1);
  Diagram d = wires(n_in);
  int w = n_in;  // current number of open output wires
  int spiders = 0;
  const int layers = 1 + pick(rng, config.max_spiders + 3);
  for (int layer = 0; layer < layers && spiders < config.max_spiders; ++layer) {
    const int room = config.max_wires - n_in - w;  // wires we may still add
    Diagram g;
    int k = 0;  // wires consumed
    int m = 0;  // wires produced
    const int choice = pick(rng, 10);
    if (choice <= 6) {
      k = pick(rng, std::min(w, 3) + 1);
      m = pick(rng, std::max(0, std::min(3, room + k)) + 1);
      g = spider(choice <= 3 ? VertexKind::Z : VertexKind::X, k, m, Phase(pick(rng, 4)));
      ++spiders;
    } else if (choice == 7 && w >= 1) {
      k = m = 1;
      g = hadamard();
    } else if (choice == 8 && w >= 2) {
      k = m = 2;
      g = swap_wires();
    } else if (choice == 9 && w >= 2 && pick(rng, 2) == 0) {
      k = 2;
      g = cup();
    } else if (choice == 9 && room >= 2) {
      m = 2;
      g = cap();
    } else {
      continue;
    }
    const int pos = pick(rng, w - k + 1);
    d = compose(tensor_all({wires(pos), g, wires(w - k - pos)}), d);
    w += m - k;
  }
  return d;
}

// ---------------------------------------------------------------------------

std::string FuzzReport::to_text() const {
  std::ostringstream out;
  out << "fuzz: rules=" << config.rule_set << " seed=" << config.seed << " steps=" << config.steps
      << " max_wires=" << config.max_wires << " max_spiders=" << config.max_spiders << "\n";
  out << "  applications: " << applications << "\n";
  out << "  hosts: " << hosts << " (skipped at contraction cap: " << skipped << ")\n";
  for (const auto& [rule, n] : per_rule) out << "  " << rule << ": " << n << "\n";
  if (violation) {
    const auto& st = violation->reproducer.steps.front();
    out << "  VIOLATION at application " << violation->application << ": " << st.rule << " "
        << direction_name(st.direction) << " match " << st.match << " " << params_to_string(st.params) << "\n";
  } else {
    out << "  violations: 0\n";
  }
  return out.str();
}

json FuzzReport::summary() const {
  json doc;
  doc["rule_set"] = config.rule_set;
  doc["seed"] = config.seed;
  doc["steps"] = config.steps;
  doc["max_wires"] = config.max_wires;
  doc["max_spiders"] = config.max_spiders;
  doc["applications"] = applications;
  doc["hosts"] = hosts;
  doc["skipped"] = skipped;
  doc["per_rule"] = per_rule;
  doc["violations"] = violation ? 1 : 0;
  if (violation) doc["violation_rule"] = violation->rule;
  return doc;
}

std::string FuzzReport::reproducer_json() const {
  if (!violation) return "";
  json doc = json::parse(serialize_derivation(violation->reproducer));
  doc["seed"] = config.seed;
  doc["rule_set"] = config.rule_set;
  doc["application"] = violation->application;
  return doc.dump(1) + "\n";
}

FuzzReport run_fuzz(const FuzzConfig& config) {
  config.validate();
  FuzzReport report;
  report.config = config;
  const auto registry = rule_registry(config.rule_set);
  std::mt19937_64 rng(config.seed);

  struct Candidate {
    const RewriteRule* rule;
    Direction dir;
    Params params;
    std::vector<Match> matches;
  };

  std::optional<Diagram> host;
  Tensor host_meaning;
  int walk = 0;
  const long max_attempts = 50L * config.steps + 100;
  for (long attempt = 0; attempt < max_attempts && report.applications < config.steps; ++attempt) {
    if (!host || walk >= config.walk_length) {
      host = random_diagram(config, rng);
      ++report.hosts;
      walk = 0;
      try {
        host_meaning = interpret(*host);
      } catch (const ContractionCapExceeded&) {
        ++report.skipped;
        host.reset();
        continue;
      }
    }
    // Uniform over (rule, direction) first; wire insertions would swamp a
    // uniform draw over matches.
    std::vector<Candidate> candidates;
    for (const auto& rule : registry) {
      for (Direction dir : {Direction::LeftToRight, Direction::RightToLeft}) {
        Params params;
        if (rule.group() == "S1" && dir == Direction::RightToLeft)
          params = {{"mask", pick(rng, 16)}, {"alpha", pick(rng, 4)}};
        auto ms = rule.find_matches(*host, dir, params);
        if (!ms.empty()) candidates.push_back({&rule, dir, params, std::move(ms)});
      }
    }
    if (candidates.empty()) {
      host.reset();
      continue;
    }
    const Candidate& c = candidates[pick(rng, static_cast<int>(candidates.size()))];
    const int index = pick(rng, static_cast<int>(c.matches.size()));
    Diagram next = c.rule->apply(c.matches[index], *host);
    Tensor next_meaning;
    try {
      next_meaning = interpret(next);
    } catch (const ContractionCapExceeded&) {
      ++report.skipped;
      host.reset();
      continue;
    }
    ++report.per_rule[c.rule->name() + " " + direction_name(c.dir)];
    if (!tensors_equal(host_meaning, next_meaning)) {
      FuzzViolation v;
      v.application = report.applications;
      v.rule = c.rule->name();
      DerivationStep step;
      step.rule = c.rule->name();
      step.direction = c.dir;
      step.match = index;
      step.params = c.params;
      v.reproducer = Derivation{*host, {step}, next};
      report.violation = std::move(v);
      ++report.applications;
      break;
    }
    ++report.applications;
    ++walk;
    if (static_cast<int>(next.spider_count()) > config.max_spiders + 8) walk = config.walk_length;
    host = std::move(next);
    host_meaning = std::move(next_meaning);
  }
  return report;
}

// ---------------------------------------------------------------------------

WrittenReport write_report(const std::string& dir, const std::string& command, const std::string& text,
                           const json& summary) {
  fs::create_directories(dir);
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y%m%dT%H%M%SZ", &utc);
  std::string base = command + "-" + stamp;
  for (int n = 2; fs::exists(fs::path(dir) / (base + ".txt")); ++n) base = command + "-" + stamp + "-" + std::to_string(n);

  WrittenReport out{(fs::path(dir) / (base + ".txt")).string(), (fs::path(dir) / (base + ".json")).string()};
  std::ofstream(out.text_path) << text;
  std::ofstream(out.summary_path) << summary.dump(1) << "\n";

  const fs::path latest = fs::path(dir) / "latest.json";
  json manifest = json::object();
  if (fs::exists(latest)) {
    try {
      std::ifstream in(latest);
      manifest = json::parse(in);
    } catch (const json::exception&) {
      manifest = json::object();
    }
  }
  manifest[command] = {{"text", base + ".txt"}, {"summary", base + ".json"}};
  std::ofstream(latest) << manifest.dump(1) << "\n";
  return out;
}

}  // namespace zxmin
