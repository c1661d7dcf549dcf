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

// zxmin command-line front end. Exit codes: 0 success, 1 claim mismatch or
// invariance violation, 2 usage, parse or bounds error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "zxmin/diagram_io.hpp"
#include "zxmin/errors.hpp"
#include "zxmin/harness.hpp"
#include "zxmin/semantics.hpp"
#include "zxmin/verifier.hpp"

namespace {

using namespace zxmin;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

InterpretationKind parse_kind(const std::string& s) {
  return s == "flat" ? InterpretationKind::Flat : InterpretationKind::Standard;
}

int cmd_eval(const std::string& path, const std::string& kind) {
  const Diagram d = load_diagram(path);
  std::cout << interpret(d, parse_kind(kind)).dump();
  return kOk;
}

int cmd_render(const std::string& path) {
  std::cout << render_dot(load_diagram(path));
  return kOk;
}

void dump_instance(const std::string& dir, const std::string& name, const InstanceVerdict& v) {
  std::filesystem::create_directories(dir);
  json doc;
  doc["rule"] = v.rule;
  doc["params"] = v.params;
  doc["lhs"] = diagram_to_json(v.lhs);
  doc["rhs"] = diagram_to_json(v.rhs);
  std::ofstream(std::filesystem::path(dir) / name) << doc.dump(1) << "\n";
}

int cmd_check(const std::string& rules, const std::string& kind_name, int max_legs, const std::string& out) {
  const InterpretationKind kind = parse_kind(kind_name);
  InstantiationBounds bounds;
  bounds.max_legs = max_legs;
  std::ostringstream text;
  json summary;
  bool ok = true;

  const SoundnessReport sweep = sweep_soundness(rules, kind, bounds);
  text << sweep.to_text();
  summary["sweep"] = sweep.summary();
  const auto claim = claimed_unequal(rules, kind);
  if (claim) {
    const bool match = *claim == sweep.unequal_rules();
    text << "  claim: " << (match ? "matches" : "MISMATCH") << "\n";
    ok = ok && match;
    if (!match) {
      for (const auto& v : sweep.verdicts) {
        if (!v.equal && !claim->count(v.rule)) {
          dump_instance(out, "mismatch-" + v.rule + ".json", v);
          text << "  offending instance written to " << out << "/mismatch-" << v.rule << ".json\n";
          break;
        }
      }
    }
  } else {
    text << "  claim: none for this set and interpretation\n";
  }
  summary["claim_holds"] = claim ? json(*claim == sweep.unequal_rules()) : json(nullptr);

  if (kind == InterpretationKind::Flat) {
    const auto bad = sweep.predictor_mismatches();
    text << "  phase predictor disagreements: " << bad.size() << "\n";
    summary["predictor_mismatches"] = bad.size();
    ok = ok && bad.empty();
  }

  const auto audits = structural_audits(rules, bounds);
  json audit_doc = json::array();
  for (const auto& a : audits) {
    text << "  audit " << a.id << " (" << a.description << "): " << (a.passed() ? "pass" : "FAIL") << " {";
    bool first = true;
    for (const auto& r : a.observed) {
      text << (first ? "" : ", ") << r;
      first = false;
    }
    text << "}\n";
    audit_doc.push_back({{"id", a.id}, {"passed", a.passed()}, {"observed", a.observed}});
    ok = ok && a.passed();
  }
  summary["audits"] = audit_doc;

  if (kind == InterpretationKind::Standard) {
    const auto lemmas = lemma_suite();
    std::size_t failed = 0;
    for (const auto& l : lemmas) {
      if (l.equal) continue;
      ++failed;
      text << "  lemma FAILED: " << l.lemma.name << " " << params_to_string(l.lemma.params) << "\n";
    }
    text << "  lemmas: " << lemmas.size() - failed << "/" << lemmas.size() << " cases hold\n";
    summary["lemma_cases"] = lemmas.size();
    summary["lemma_failures"] = failed;
    ok = ok && failed == 0;
  }

  if (rules == "simplified" && kind == InterpretationKind::Flat) {
    const auto modified = sweep_soundness("modified_3_3", kind, bounds);
    text << "\n" << necessity_report(sweep, modified, audits);
  }

  text << (ok ? "PASS\n" : "FAIL\n");
  summary["passed"] = ok;
  std::cout << text.str();
  const auto written = write_report(out, "check-" + rules + "-" + kind_name, text.str(), summary);
  std::cerr << "report: " << written.text_path << "\n";
  return ok ? kOk : kMismatch;
}

int cmd_replay(const std::string& path, const std::string& rules, const std::string& out_path) {
  const Derivation d = load_derivation(path);
  const ReplayResult r = replay(d, rule_registry(rules));
  for (const auto& line : r.trace) std::cout << line << "\n";
  std::cout << replay_status_name(r.status) << "\n";
  if (!out_path.empty()) save_diagram(r.final_diagram, out_path);
  return r.ok() ? kOk : kMismatch;
}

int cmd_fuzz(const FuzzConfig& config, const std::string& out) {
  const FuzzReport report = run_fuzz(config);
  std::cout << report.to_text();
  const auto written = write_report(out, "fuzz", report.to_text(), report.summary());
  std::cerr << "report: " << written.text_path << "\n";
  if (!report.ok()) {
    const auto path = std::filesystem::path(out) / ("reproducer-seed" + std::to_string(config.seed) + ".json");
    std::ofstream(path) << report.reproducer_json();
    std::cout << "reproducer: " << path.string() << "\n";
    return kMismatch;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checker for stabilizer ZX rewrite rules"};
  app.require_subcommand(1);

  std::string path;
  std::string kind = "standard";
  std::string rules = "simplified";
  std::string out = "reports";
  std::string final_out;
  int max_legs = 3;
  FuzzConfig fuzz;

  const std::vector<std::string> kinds{"standard", "flat"};
  std::vector<std::string> sets = registry_names();
  sets.push_back("planted_bug");  // test fixture

  auto* eval = app.add_subcommand("eval", "Print the exact interpretation of a diagram file");
  eval->add_option("path", path, "Diagram JSON file")->required();
  eval->add_option("--kind", kind, "Interpretation")->check(CLI::IsMember(kinds))->capture_default_str();

  auto* check = app.add_subcommand("check", "Sweep a rule set and compare against the claim table");
  check->add_option("--rules", rules, "Rule set")->check(CLI::IsMember(sets))->capture_default_str();
  check->add_option("--kind", kind, "Interpretation")->check(CLI::IsMember(kinds))->capture_default_str();
  check->add_option("--max-legs", max_legs, "Largest ellipsis arity")->check(CLI::Range(0, 4))->capture_default_str();
  check->add_option("--out", out, "Report directory")->capture_default_str();

  std::string replay_rules = "simplified+S2p";
  auto* replay_cmd = app.add_subcommand("replay", "Replay a derivation script step by step");
  replay_cmd->add_option("path", path, "Derivation JSON file")->required();
  replay_cmd->add_option("--rules", replay_rules, "Rule set")->check(CLI::IsMember(sets))->capture_default_str();
  replay_cmd->add_option("--out", final_out, "Write the final diagram here");

  auto* fuzz_cmd = app.add_subcommand("fuzz", "Random rewrites with exact invariance checks");
  fuzz_cmd->add_option("--rules", fuzz.rule_set, "Rule set")->check(CLI::IsMember(sets))->capture_default_str();
  fuzz_cmd->add_option("--seed", fuzz.seed, "RNG seed")->capture_default_str();
  fuzz_cmd->add_option("--steps", fuzz.steps, "Rewrite applications")->check(CLI::NonNegativeNumber)->capture_default_str();
  fuzz_cmd->add_option("--max-wires", fuzz.max_wires, "Boundary wires per host")->check(CLI::Range(0, 12))->capture_default_str();
  fuzz_cmd->add_option("--max-spiders", fuzz.max_spiders, "Spiders per host")->check(CLI::NonNegativeNumber)->capture_default_str();
  fuzz_cmd->add_option("--out", out, "Report directory")->capture_default_str();

  auto* render = app.add_subcommand("render", "Print a diagram in dot format");
  render->add_option("path", path, "Diagram JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(path, kind);
    if (*check) return cmd_check(rules, kind, max_legs, out);
    if (*replay_cmd) return cmd_replay(path, replay_rules, final_out);
    if (*fuzz_cmd) return cmd_fuzz(fuzz, out);
    if (*render) return cmd_render(path);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const ContractionCapExceeded& e) {
    std::cerr << "contraction cap exceeded: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
