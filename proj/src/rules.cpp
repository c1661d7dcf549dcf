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

#include "zxmin/rules.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "zxmin/diagram_io.hpp"

namespace zxmin {

const char* direction_name(Direction d) { return d == Direction::LeftToRight ? "LR" : "RL"; }

Direction parse_direction(const std::string& s) {
  if (s == "LR") return Direction::LeftToRight;
  if (s == "RL") return Direction::RightToLeft;
  throw ParseError("dir", "expected \"LR\" or \"RL\", got \"" + s + "\"");
}

std::string params_to_string(const Params& p) {
  std::ostringstream out;
  out << "{";
  bool first = true;
  for (const auto& [k, v] : p) {
    out << (first ? "" : ",") << k << "=" << v;
    first = false;
  }
  out << "}";
  return out.str();
}

const Diagram& Match::pattern() const {
  return direction == Direction::LeftToRight ? instance->lhs : instance->rhs;
}

const Diagram& Match::replacement() const {
  return direction == Direction::LeftToRight ? instance->rhs : instance->lhs;
}

long Match::anchor() const {
  if (!vertices.empty()) {
    long best = vertices.begin()->second;
    for (const auto& kv : vertices) best = std::min<long>(best, kv.second);
    return best;
  }
  if (!attachments.empty()) {
    long best = attachments.begin()->second.edge;
    for (const auto& kv : attachments) best = std::min<long>(best, kv.second.edge);
    // Vertex-anchored matches sort first.
    return (1L << 40) + best;
  }
  return -1;
}

std::uint64_t fingerprint(const Diagram& d) {
  // FNV-1a over the canonical serialization.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : serialize_diagram(d)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

// ---------------------------------------------------------------------------
// Gluing

namespace {

// Host incidences at v as (edge, end) pairs, self-loops contributing both ends.
std::vector<std::pair<EdgeId, int>> incidences(const Diagram& d, VertexId v) {
  std::vector<std::pair<EdgeId, int>> out;
  std::set<EdgeId> seen_loop;
  for (EdgeId e : d.incident(v)) {
    const Edge& ed = d.edge(e);
    if (ed.is_loop()) {
      if (seen_loop.insert(e).second) {
        out.emplace_back(e, 0);
        out.emplace_back(e, 1);
      }
    } else {
      out.emplace_back(e, ed.a == v ? 0 : 1);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Pattern boundaries adjacent to core vertex p, in input-then-output order.
std::vector<VertexId> legs_of(const Diagram& p, VertexId core) {
  std::vector<VertexId> out;
  auto visit = [&](const std::vector<VertexId>& list) {
    for (VertexId b : list) {
      const Edge& e = p.edge(p.incident(b).front());
      if (e.other(b) == core) out.push_back(b);
    }
  };
  visit(p.inputs());
  visit(p.outputs());
  return out;
}

}  // namespace

Diagram glue(const Match& m, const Diagram& host) {
  if (fingerprint(host) != m.host_fingerprint) {
    throw StaleMatch("match for rule " + m.rule + " does not belong to this diagram");
  }
  const Diagram& pat = m.pattern();
  const Diagram& rep = m.replacement();
  Diagram out = host;

  std::map<EdgeId, std::vector<std::pair<VertexId, Attachment>>> by_edge;
  for (const auto& [b, att] : m.attachments) by_edge[att.edge].emplace_back(b, att);

  std::map<VertexId, VertexId> stub;
  for (const auto& [b, att] : m.attachments) stub[b] = out.add_vertex(VertexKind::Boundary);

  for (const auto& [e, claims] : by_edge) {
    const Edge ed = out.edge(e);
    const VertexId ends[2] = {ed.a, ed.b};
    out.remove_edge(e);
    if (claims.front().second.cuts_wire) {
      for (const auto& [b, att] : claims) out.add_edge(ends[att.end], stub[b]);
    } else {
      VertexId nends[2] = {ends[0], ends[1]};
      for (const auto& [b, att] : claims) nends[att.end] = stub[b];
      out.add_edge(nends[0], nends[1]);
    }
  }
  for (const auto& kv : m.vertices) out.remove_vertex(kv.second);
  out.add_circles(-pat.circles());

  const auto idmap = out.absorb(rep);
  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (std::size_t i = 0; i < pat.inputs().size(); ++i)
    pairs.emplace_back(stub.at(pat.inputs()[i]), idmap.at(rep.inputs()[i]));
  for (std::size_t i = 0; i < pat.outputs().size(); ++i)
    pairs.emplace_back(stub.at(pat.outputs()[i]), idmap.at(rep.outputs()[i]));
  out.smooth(pairs);
  out.compact();
  out.validate();
  return out;
}

// ---------------------------------------------------------------------------
// RewriteRule

RewriteRule::RewriteRule(std::string name, std::string provenance, Family family)
    : name_(std::move(name)), provenance_(std::move(provenance)), family_(std::move(family)) {}

std::vector<RuleInstance> RewriteRule::instantiate(const InstantiationBounds& bounds) const {
  return family_(bounds);
}

std::shared_ptr<const std::vector<RuleInstance>> RewriteRule::cached_instances(int max_legs) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto& slot = cache_->by_legs[max_legs];
  if (!slot) {
    InstantiationBounds b;
    b.max_legs = max_legs;
    slot = std::make_shared<const std::vector<RuleInstance>>(family_(b));
  }
  return slot;
}

std::vector<Match> RewriteRule::match_instance(const std::shared_ptr<const RuleInstance>& inst,
                                               const Diagram& host, Direction dir) const {
  const Diagram& pat = dir == Direction::LeftToRight ? inst->lhs : inst->rhs;
  std::vector<Match> found;
  if (host.circles() < pat.circles()) return found;

  // Core vertices in a connected-first order so multiplicity checks prune early.
  std::vector<VertexId> order;
  {
    std::set<VertexId> left;
    for (const auto& [id, v] : pat.vertices())
      if (v.kind != VertexKind::Boundary) left.insert(id);
    while (!left.empty()) {
      VertexId next = *left.begin();
      for (VertexId c : left) {
        bool linked = false;
        for (VertexId o : order) linked = linked || pat.multiplicity(c, o) > 0;
        if (linked) {
          next = c;
          break;
        }
      }
      order.push_back(next);
      left.erase(next);
    }
  }
  const std::size_t n = order.size();
  std::vector<std::size_t> pat_loops(n);
  for (std::size_t i = 0; i < n; ++i) pat_loops[i] = pat.multiplicity(order[i], order[i]);

  // Quick histogram rejection.
  {
    std::map<std::tuple<int, int, std::size_t>, int> need;
    for (VertexId p : order) {
      const Vertex& v = pat.vertex(p);
      need[{static_cast<int>(v.kind), v.phase.quarter_turns(), pat.degree(p)}]++;
    }
    for (const auto& [id, v] : host.vertices()) {
      auto it = need.find({static_cast<int>(v.kind), v.phase.quarter_turns(), host.degree(id)});
      if (it != need.end()) --it->second;
    }
    for (const auto& kv : need)
      if (kv.second > 0) return found;
  }

  std::vector<std::pair<VertexId, VertexId>> plain;
  for (const auto& [e, ed] : pat.edges())
    if (pat.vertex(ed.a).kind == VertexKind::Boundary && pat.vertex(ed.b).kind == VertexKind::Boundary)
      plain.emplace_back(ed.a, ed.b);

  std::set<std::tuple<std::vector<VertexId>, std::vector<EdgeId>, std::vector<std::pair<EdgeId, int>>>> seen;
  const std::uint64_t fp = fingerprint(host);

  std::vector<VertexId> assign(n);
  std::set<VertexId> used;

  auto emit = [&]() {
    Match m;
    m.rule = name_;
    m.direction = dir;
    m.params = inst->params;
    m.instance = inst;
    m.host_fingerprint = fp;
    for (std::size_t i = 0; i < n; ++i) m.vertices[order[i]] = assign[i];

    // Internal pattern edges take the lowest-id host edges of each pair.
    std::set<EdgeId> taken;
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> pat_groups;
    for (const auto& [e, ed] : pat.edges()) {
      if (pat.vertex(ed.a).kind == VertexKind::Boundary || pat.vertex(ed.b).kind == VertexKind::Boundary)
        continue;
      pat_groups[{ed.a, ed.b}].push_back(e);
    }
    for (const auto& [pq, pes] : pat_groups) {
      const VertexId u = m.vertices.at(pq.first);
      const VertexId w = m.vertices.at(pq.second);
      std::vector<EdgeId> hes;
      for (EdgeId he : host.incident(u)) {
        const Edge& hed = host.edge(he);
        if (hed.other(u) == w && !taken.count(he) &&
            std::find(hes.begin(), hes.end(), he) == hes.end())
          hes.push_back(he);
      }
      std::sort(hes.begin(), hes.end());
      for (std::size_t k = 0; k < pes.size(); ++k) {
        m.edges[pes[k]] = hes[k];
        taken.insert(hes[k]);
      }
    }

    // Remaining incidences become legs.
    std::set<EdgeId> claimed = taken;
    for (std::size_t i = 0; i < n; ++i) {
      const auto pl = legs_of(pat, order[i]);
      std::vector<std::pair<EdgeId, int>> free;
      for (const auto& inc : incidences(host, assign[i]))
        if (!taken.count(inc.first)) free.push_back(inc);
      for (std::size_t k = 0; k < pl.size(); ++k) {
        m.attachments[pl[k]] = {free[k].first, free[k].second, false};
        claimed.insert(free[k].first);
      }
    }

    // Plain pattern wires: every unclaimed host edge, both orientations.
    std::vector<EdgeId> candidates;
    for (const auto& kv : host.edges())
      if (!claimed.count(kv.first)) candidates.push_back(kv.first);

    std::vector<Match> partials{m};
    for (const auto& [b1, b2] : plain) {
      std::vector<Match> next;
      for (const Match& pm : partials) {
        std::set<EdgeId> busy;
        for (const auto& kv : pm.attachments) busy.insert(kv.second.edge);
        for (EdgeId he : candidates) {
          if (busy.count(he)) continue;
          const int orientations = host.edge(he).is_loop() ? 1 : 2;
          for (int o = 0; o < orientations; ++o) {
            Match nm = pm;
            nm.attachments[b1] = {he, o, true};
            nm.attachments[b2] = {he, 1 - o, true};
            next.push_back(std::move(nm));
          }
        }
      }
      partials = std::move(next);
    }

    for (Match& pm : partials) {
      std::vector<VertexId> vs;
      for (const auto& kv : pm.vertices) vs.push_back(kv.second);
      std::sort(vs.begin(), vs.end());
      std::vector<EdgeId> es;
      for (const auto& kv : pm.edges) es.push_back(kv.second);
      std::sort(es.begin(), es.end());
      std::vector<std::pair<EdgeId, int>> cuts;
      for (VertexId b : pat.inputs())
        if (pm.attachments.at(b).cuts_wire) cuts.emplace_back(pm.attachments.at(b).edge, pm.attachments.at(b).end);
      for (VertexId b : pat.outputs())
        if (pm.attachments.at(b).cuts_wire) cuts.emplace_back(pm.attachments.at(b).edge, pm.attachments.at(b).end);
      if (seen.insert({vs, es, cuts}).second) found.push_back(std::move(pm));
    }
  };

  std::function<void(std::size_t)> search = [&](std::size_t i) {
    if (i == n) {
      emit();
      return;
    }
    const VertexId p = order[i];
    const Vertex& pv = pat.vertex(p);
    const std::size_t pdeg = pat.degree(p);
    for (const auto& [u, hv] : host.vertices()) {
      if (used.count(u) || hv.kind != pv.kind) continue;
      if (pv.is_spider() && hv.phase != pv.phase) continue;
      if (host.degree(u) != pdeg) continue;
      if (host.multiplicity(u, u) < pat_loops[i]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = host.multiplicity(u, assign[j]) >= pat.multiplicity(p, order[j]);
      if (!ok) continue;
      assign[i] = u;
      used.insert(u);
      search(i + 1);
      used.erase(u);
    }
  };
  search(0);
  return found;
}

std::vector<Match> RewriteRule::find_matches(const Diagram& host, Direction dir,
                                             const Params& params) const {
  std::vector<Match> out;
  if (matcher_) {
    out = matcher_(*this, host, dir, params);
  } else {
    std::size_t max_deg = 0;
    for (const auto& kv : host.vertices()) max_deg = std::max(max_deg, host.degree(kv.first));
    const auto insts = cached_instances(std::max<int>(1, static_cast<int>(max_deg)));
    std::set<std::pair<std::vector<VertexId>, std::vector<std::pair<EdgeId, int>>>> seen;
    for (const auto& inst : *insts) {
      auto shared = std::make_shared<const RuleInstance>(inst);
      for (Match& m : match_instance(shared, host, dir)) {
        // Instances that differ only in how ellipses split into inputs and
        // outputs match the same occurrence; keep the first.
        std::vector<VertexId> vs;
        for (const auto& kv : m.vertices) vs.push_back(kv.second);
        std::sort(vs.begin(), vs.end());
        std::vector<std::pair<EdgeId, int>> cuts;
        for (const auto& kv : m.attachments)
          if (kv.second.cuts_wire) cuts.emplace_back(kv.second.edge, kv.second.end);
        if (seen.insert({vs, cuts}).second) out.push_back(std::move(m));
      }
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Match& a, const Match& b) { return a.anchor() < b.anchor(); });
  return out;
}

Diagram RewriteRule::apply(const Match& m, const Diagram& host) const {
  if (m.rule != name_) throw StaleMatch("match belongs to rule " + m.rule + ", not " + name_);
  return glue(m, host);
}

RewriteRule RewriteRule::variant(Transform t) const {
  const bool swap = t != Transform::Flip;
  const bool flip = t != Transform::ColourSwap;
  auto fam = family_;
  Family family = [fam, swap, flip](const InstantiationBounds& b) {
    auto insts = fam(b);
    for (auto& inst : insts) {
      if (swap) {
        inst.lhs = colour_swap(inst.lhs);
        inst.rhs = colour_swap(inst.rhs);
      }
      if (flip) {
        inst.lhs = adjoint_flip(inst.lhs);
        inst.rhs = adjoint_flip(inst.rhs);
      }
    }
    return insts;
  };
  std::string suffix = swap && flip ? "_cs_flip" : (swap ? "_cs" : "_flip");
  RewriteRule r(name_ + suffix, provenance_ + " (" + suffix.substr(1) + " variant)", family);
  r.matcher_ = matcher_;
  r.colour_ = colour_;
  if (swap && (colour_ == VertexKind::Z || colour_ == VertexKind::X))
    r.colour_ = colour_ == VertexKind::Z ? VertexKind::X : VertexKind::Z;
  return r;
}

const RewriteRule& find_rule(const std::vector<RewriteRule>& registry, const std::string& name) {
  for (const auto& r : registry)
    if (r.name() == name) return r;
  throw UnknownRule("no rule named \"" + name + "\" in the active registry");
}

// ---------------------------------------------------------------------------
// Rule tables

namespace scalars {

Diagram root2() { return compose(x_spider(1, 0), z_spider(0, 1)); }

Diagram joined(int k) { return compose(x_spider(k, 0), z_spider(0, k)); }

Diagram dot(Phase a) { return z_spider(0, 0, a); }

}  // namespace scalars

namespace {

using Family = RewriteRule::Family;

Diagram hadamards(int n) {
  std::vector<Diagram> hs(n, hadamard());
  return tensor_all(hs);
}

Diagram repeat(const Diagram& d, int n) {
  std::vector<Diagram> parts(std::max(n, 0), d);
  return tensor_all(parts);
}

// colour alpha spider with `a` input legs joined by one edge to a colour beta
// spider with `b` output legs. Vertex 0 is the first spider, edge 0 the link.
Diagram fusion_pair(VertexKind colour, int a, int b, Phase alpha, Phase beta) {
  Diagram d;
  const VertexId s1 = d.add_vertex(colour, alpha);
  const VertexId s2 = d.add_vertex(colour, beta);
  d.add_edge(s1, s2);
  for (int i = 0; i < a; ++i) {
    const VertexId bnd = d.add_vertex(VertexKind::Boundary);
    d.add_edge(bnd, s1);
    d.add_input(bnd);
  }
  for (int i = 0; i < b; ++i) {
    const VertexId bnd = d.add_vertex(VertexKind::Boundary);
    d.add_edge(s2, bnd);
    d.add_output(bnd);
  }
  return d;
}

Family single(Diagram lhs, Diagram rhs) {
  return [lhs, rhs](const InstantiationBounds&) {
    return std::vector<RuleInstance>{{{}, lhs, rhs}};
  };
}

Family per_phase(std::function<RuleInstance(Phase)> make) {
  return [make](const InstantiationBounds& b) {
    std::vector<RuleInstance> out;
    for (Phase p : b.phases) {
      RuleInstance inst = make(p);
      inst.params["alpha"] = p.quarter_turns();
      out.push_back(std::move(inst));
    }
    return out;
  };
}

// phase_shift > 0 plants a wrong phase for the harness fixture.
std::vector<Match> s1_matcher(const RewriteRule& rule, const Diagram& host, Direction dir,
                              const Params& params, int phase_shift) {
  const VertexKind colour = rule.colour();
  std::vector<Match> out;
  const std::uint64_t fp = fingerprint(host);
  if (dir == Direction::LeftToRight) {
    for (const auto& [e, ed] : host.edges()) {
      if (ed.is_loop()) continue;
      const VertexId u = ed.a;
      const VertexId v = ed.b;
      const Vertex& uv = host.vertex(u);
      const Vertex& vv = host.vertex(v);
      if (uv.kind != colour || vv.kind != colour) continue;
      const int a = static_cast<int>(host.degree(u)) - 1;
      const int b = static_cast<int>(host.degree(v)) - 1;
      auto inst = std::make_shared<RuleInstance>();
      inst->params = {{"a", a}, {"b", b}, {"alpha", uv.phase.quarter_turns()},
                      {"beta", vv.phase.quarter_turns()}};
      inst->lhs = fusion_pair(colour, a, b, uv.phase, vv.phase);
      inst->rhs = spider(colour, a, b, uv.phase + vv.phase + Phase(phase_shift));
      Match m;
      m.rule = rule.name();
      m.direction = dir;
      m.params = inst->params;
      m.instance = inst;
      m.host_fingerprint = fp;
      m.vertices = {{0, u}, {1, v}};
      m.edges = {{0, e}};
      std::vector<std::pair<EdgeId, int>> fu;
      std::vector<std::pair<EdgeId, int>> fv;
      bool skipped_u = false;
      bool skipped_v = false;
      for (const auto& inc : incidences(host, u)) {
        if (!skipped_u && inc.first == e) skipped_u = true;
        else fu.push_back(inc);
      }
      for (const auto& inc : incidences(host, v)) {
        if (!skipped_v && inc.first == e) skipped_v = true;
        else fv.push_back(inc);
      }
      const auto& in = inst->lhs.inputs();
      const auto& outs = inst->lhs.outputs();
      for (int i = 0; i < a; ++i) m.attachments[in[i]] = {fu[i].first, fu[i].second, false};
      for (int i = 0; i < b; ++i) m.attachments[outs[i]] = {fv[i].first, fv[i].second, false};
      out.push_back(std::move(m));
    }
    return out;
  }
  // Unfusion: "mask" selects which incidences (sorted by edge id) move to the
  // first spider, "alpha" is that spider's phase.
  const long mask = params.count("mask") ? params.at("mask") : 0;
  const Phase alpha(params.count("alpha") ? params.at("alpha") : 0);
  for (const auto& [w, wv] : host.vertices()) {
    if (wv.kind != colour) continue;
    const auto inc = incidences(host, w);
    if (mask < 0 || (inc.size() < 62 && mask >= (1L << inc.size()))) continue;
    std::vector<std::pair<EdgeId, int>> first;
    std::vector<std::pair<EdgeId, int>> second;
    for (std::size_t i = 0; i < inc.size(); ++i) ((mask >> i) & 1 ? first : second).push_back(inc[i]);
    const int a = static_cast<int>(first.size());
    const int b = static_cast<int>(second.size());
    const Phase beta = wv.phase - alpha;
    auto inst = std::make_shared<RuleInstance>();
    inst->params = {{"a", a}, {"b", b}, {"alpha", alpha.quarter_turns()},
                    {"beta", beta.quarter_turns()}, {"mask", static_cast<int>(mask)}};
    inst->lhs = fusion_pair(colour, a, b, alpha, beta);
    inst->rhs = spider(colour, a, b, wv.phase);
    Match m;
    m.rule = rule.name();
    m.direction = dir;
    m.params = inst->params;
    m.instance = inst;
    m.host_fingerprint = fp;
    m.vertices = {{0, w}};
    const auto& in = inst->rhs.inputs();
    const auto& outs = inst->rhs.outputs();
    for (int i = 0; i < a; ++i) m.attachments[in[i]] = {first[i].first, first[i].second, false};
    for (int i = 0; i < b; ++i) m.attachments[outs[i]] = {second[i].first, second[i].second, false};
    out.push_back(std::move(m));
  }
  return out;
}

RewriteRule make_s1(const std::string& name, int phase_shift = 0) {
  Family fam = [](const InstantiationBounds& bounds) {
    std::vector<RuleInstance> out;
    for (int a = 0; a <= bounds.max_legs; ++a)
      for (int b = 0; b <= bounds.max_legs; ++b)
        for (Phase alpha : bounds.phases)
          for (Phase beta : bounds.phases)
            out.push_back({{{"a", a}, {"b", b}, {"alpha", alpha.quarter_turns()}, {"beta", beta.quarter_turns()}},
                           fusion_pair(VertexKind::Z, a, b, alpha, beta),
                           z_spider(a, b, alpha + beta)});
    return out;
  };
  RewriteRule r(name, "spider fusion", fam);
  r.set_matcher([phase_shift](const RewriteRule& rule, const Diagram& host, Direction dir,
                              const Params& p) { return s1_matcher(rule, host, dir, p, phase_shift); });
  return r;
}

Diagram k22() {
  const Diagram cross = tensor_all({identity_wire(), swap_wires(), identity_wire()});
  return compose(tensor(z_spider(2, 1), z_spider(2, 1)),
                 compose(cross, tensor(x_spider(1, 2), x_spider(1, 2))));
}

Diagram bialgebra_lhs() { return compose(x_spider(1, 2), z_spider(2, 1)); }

RewriteRule make_h() {
  Family fam = [](const InstantiationBounds& bounds) {
    std::vector<RuleInstance> out;
    for (int n = 0; n <= bounds.max_legs; ++n)
      for (int m = 0; m <= bounds.max_legs; ++m)
        for (Phase a : bounds.phases)
          out.push_back({{{"n", n}, {"m", m}, {"alpha", a.quarter_turns()}},
                         compose(hadamards(m), compose(x_spider(n, m, a), hadamards(n))),
                         z_spider(n, m, a)});
    return out;
  };
  return RewriteRule("H", "colour change", fam);
}

RewriteRule make_s3p_l() {
  return RewriteRule("S3p_L", "green cap", single(z_spider(0, 2), cap())).set_group("S3p");
}

RewriteRule make_s3p_r() {
  return RewriteRule("S3p_R", "red cap equals green cap", single(z_spider(0, 2), x_spider(0, 2)))
      .set_group("S3p");
}

RewriteRule make_b1() {
  return RewriteRule("B1", "copy of the red state",
                     single(tensor(compose(z_spider(1, 2), x_spider(0, 1)), scalars::root2()),
                            tensor(x_spider(0, 1), x_spider(0, 1))));
}

RewriteRule make_b2p() {
  return RewriteRule("B2p", "bialgebra",
                     single(tensor(bialgebra_lhs(), scalars::root2()),
                            tensor(k22(), scalars::dot(kZeroPhase))));
}

Diagram euler_chain(Phase p) {
  const Diagram middle = compose(x_spider(2, 1), tensor(identity_wire(), z_spider(0, 1, -p)));
  return compose(z_spider(1, 1, p), compose(middle, z_spider(1, 1, p)));
}

RewriteRule make_eup() {
  return RewriteRule("EUp", "Euler decomposition", single(hadamard(), euler_chain(kHalfPi)));
}

RewriteRule make_ivp() {
  return RewriteRule("IVp", "scalar inverse",
                     single(tensor(scalars::root2(), scalars::joined(3)), empty_diagram()));
}

RewriteRule make_zop() {
  return RewriteRule("ZOp", "zero scalar absorbs phases",
                     single(tensor(scalars::dot(kPi), z_spider(0, 1)),
                            tensor(scalars::dot(kPi), z_spider(0, 1, kPi))));
}

RewriteRule make_s2p(Phase p = kZeroPhase, const std::string& name = "S2p") {
  return RewriteRule(name, "red identity", single(x_spider(1, 1, p), identity_wire()));
}

// Legacy rules.

RewriteRule make_s1prime() {
  Family fam = [](const InstantiationBounds& bounds) {
    std::vector<RuleInstance> out;
    for (int n = 0; n <= bounds.max_legs; ++n)
      for (int m = 0; m <= bounds.max_legs; ++m)
        for (Phase a : bounds.phases) {
          Diagram looped = z_spider(n, m, a);
          looped.add_edge(0, 0);
          out.push_back({{{"n", n}, {"m", m}, {"alpha", a.quarter_turns()}}, looped, z_spider(n, m, a)});
        }
    return out;
  };
  return RewriteRule("S1p", "plain self-loop removal", fam);
}

RewriteRule make_s3() { return RewriteRule("S3", "green cap", single(z_spider(0, 2), cap())); }

RewriteRule make_sr() {
  return RewriteRule("SR", "scalar cancellation",
                     single(tensor_all({scalars::joined(3), scalars::joined(3), scalars::dot(kZeroPhase)}),
                            empty_diagram()));
}

RewriteRule make_b2() {
  return RewriteRule("B2", "bialgebra", single(bialgebra_lhs(), tensor(k22(), scalars::root2())));
}

RewriteRule make_k1() {
  Family fam = [](const InstantiationBounds& bounds) {
    std::vector<RuleInstance> out;
    const Diagram pi_state = z_spider(0, 1, kPi);
    for (int n = 0; n <= bounds.max_legs; ++n) {
      Diagram lhs = compose(x_spider(1, n), pi_state);
      Diagram rhs = repeat(pi_state, n);
      lhs = tensor(lhs, repeat(scalars::root2(), n - 1));
      rhs = tensor(rhs, repeat(scalars::root2(), 1 - n));
      out.push_back({{{"n", n}}, lhs, rhs});
    }
    return out;
  };
  return RewriteRule("K1", "pi copy", fam);
}

Diagram k2_scalar(Phase a) {
  switch (a.quarter_turns()) {
    case 0:
      return empty_diagram();
    case 2:
      return tensor(compose(x_spider(1, 0, kPi), z_spider(0, 1, kPi)), scalars::joined(3));
    default:
      return tensor_all({scalars::dot(a), scalars::dot(a), scalars::joined(3), scalars::joined(3)});
  }
}

RewriteRule make_k2() {
  Family fam = [](const InstantiationBounds& bounds) {
    std::vector<RuleInstance> out;
    for (int n = 0; n <= bounds.max_legs; ++n)
      for (Phase a : bounds.phases) {
        Diagram lhs = compose(z_spider(1, n, a), x_spider(1, 1, kPi));
        Diagram rhs = tensor(compose(repeat(x_spider(1, 1, kPi), n), z_spider(1, n, -a)), k2_scalar(a));
        out.push_back({{{"n", n}, {"alpha", a.quarter_turns()}}, lhs, rhs});
      }
    return out;
  };
  return RewriteRule("K2", "pi commutation", fam);
}

RewriteRule make_eu() {
  const Diagram chain = compose(z_spider(1, 1, kHalfPi),
                                compose(x_spider(1, 1, kHalfPi), z_spider(1, 1, kHalfPi)));
  return RewriteRule("EU", "Euler decomposition",
                     single(hadamard(),
                            tensor_all({chain, scalars::dot(kMinusHalfPi), scalars::joined(3)})));
}

RewriteRule make_zo() {
  return RewriteRule("ZO", "zero disconnects",
                     single(tensor(scalars::dot(kPi), identity_wire()),
                            tensor_all({scalars::dot(kPi), x_spider(1, 0), x_spider(0, 1)})));
}

RewriteRule make_zs() {
  return RewriteRule("ZS", "zero absorbs scalars", per_phase([](Phase a) {
                       return RuleInstance{{}, tensor(scalars::dot(kPi), scalars::dot(a)), scalars::dot(kPi)};
                     }));
}

RewriteRule make_iv() {
  return RewriteRule("IV", "scalar inverse",
                     single(tensor_all({scalars::dot(kHalfPi), scalars::dot(kMinusHalfPi),
                                        scalars::joined(3), scalars::joined(3)}),
                            empty_diagram()));
}

RewriteRule make_s3_tilde() {
  return RewriteRule("S3_tilde", "red cap with compensating scalars",
                     single(tensor_all({x_spider(0, 2), scalars::dot(kZeroPhase), scalars::joined(3),
                                        scalars::joined(3)}),
                            cap()));
}

RewriteRule make_iv_tilde() {
  return RewriteRule("IV_tilde", "scalar inverse",
                     single(tensor_all({scalars::joined(2), scalars::joined(3), scalars::joined(3)}),
                            empty_diagram()));
}

std::vector<RewriteRule> simplified() {
  return {make_s1("S1"), make_s3p_l(), make_s3p_r(), make_b1(), make_b2p(),
          make_eup(),    make_h(),     make_ivp(),   make_zop()};
}

std::vector<RewriteRule> with_variants(std::vector<RewriteRule> base) {
  std::vector<RewriteRule> out;
  for (const auto& r : base) {
    out.push_back(r);
    out.push_back(r.variant(RewriteRule::Transform::ColourSwap));
    out.push_back(r.variant(RewriteRule::Transform::Flip));
    out.push_back(r.variant(RewriteRule::Transform::Both));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& registry_names() {
  static const std::vector<std::string> names = {"simplified", "simplified+S2p", "legacy", "modified_3_3"};
  return names;
}

std::vector<RewriteRule> rule_registry(const std::string& set_name) {
  if (set_name == "simplified") return simplified();
  if (set_name == "simplified+S2p") {
    auto rules = simplified();
    rules.push_back(make_s2p());
    return rules;
  }
  if (set_name == "legacy") {
    return with_variants({make_s1("S1_legacy"), make_s1prime(), make_s3(), make_sr(), make_b1(),
                          make_b2(), make_k1(), make_k2(), make_eu(), make_h(), make_zo(), make_zs(),
                          make_iv()});
  }
  if (set_name == "modified_3_3") {
    return {make_s1("S1"), make_s3(),  make_s3_tilde(), make_b1(),       make_b2p(),
            make_eup(),    make_h(),   make_iv_tilde(), make_zop()};
  }
  if (set_name == "planted_bug") {
    auto rules = simplified();
    rules.push_back(make_s2p(kPi, "S2p_planted"));
    return rules;
  }
  throw UnknownRule("unknown rule set \"" + set_name + "\"");
}

}  // namespace zxmin
