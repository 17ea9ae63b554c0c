// Copyright 2026 The Gridlink Authors
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


#include "gridlink/lemmas.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "gridlink/campaign.hpp"
#include "gridlink/local_planner.hpp"
#include "gridlink/symmetry.hpp"

namespace gridlink {

namespace canon {

const GridGraph& grid() {
  static const GridGraph g(3, 3);
  return g;
}

VertexSet line_a() { return row_set(grid(), 3); }
VertexSet line_b() { return col_set(grid(), 3); }

VertexSet cycle_vertices(int alpha) {
  const auto& g = grid();
  VertexSet out;
  if (alpha == 0) {
    out.set(g.id(kX0));
  } else {
    for (Vertex v : {Vertex{2, 3}, Vertex{2, 2}, Vertex{3, 2}}) out.set(g.id(v));
  }
  return out;
}

EdgeSet c1_edges() {
  const auto& g = grid();
  EdgeSet out;
  out.set(g.grid_edge_index({2, 2}, {2, 3}));
  out.set(g.grid_edge_index({2, 2}, {3, 2}));
  return out;
}

EdgeSet q0_edges() {
  const auto& g = grid();
  EdgeSet out = g.edges();
  out.reset(g.grid_edge_index({3, 1}, {3, 2}));
  out.reset(g.grid_edge_index({3, 2}, {3, 3}));
  return out;
}

}  // namespace canon

Vertex QuadFrame::to_host(Vertex c) const {
  const Vertex v = apply_symmetry(sym, c, 3, 3);
  const auto quad = quadrant(q);
  return {v.row + quad.row0 - 1, v.col + quad.col0 - 1};
}

Vertex QuadFrame::to_canon(Vertex h) const {
  const auto quad = quadrant(q);
  return apply_symmetry(inverse(sym), Vertex{h.row - quad.row0 + 1, h.col - quad.col0 + 1}, 3, 3);
}

Path QuadFrame::to_host(const Path& p) const {
  Path out;
  for (Vertex v : p.vertices) out.vertices.push_back(to_host(v));
  return out;
}

QuadFrame quad_frame(QuadrantId q, bool swap_lines) { return {q, quadrant_frame(q, swap_lines)}; }

namespace {

using canon::grid;

Demand link(Vertex from, Vertex to) {
  Demand d;
  d.from = from;
  d.to = to;
  return d;
}

Demand mate(Vertex from, const VertexSet& targets, const LemmaOptions& opt) {
  Demand d;
  d.from = from;
  d.targets = targets;
  d.avoid_ends = opt.avoid_ends;
  return d;
}

EdgeSet mask(const EdgeSet& base, const LemmaOptions& opt) {
  EdgeSet m = base;
  m -= opt.blocked;
  return m;
}

// Apex candidates for C_alpha, x_alpha first.
std::vector<Vertex> apexes(int alpha) {
  if (alpha == 0) return {canon::kX0};
  return {canon::kX1, Vertex{2, 3}, Vertex{3, 2}};
}

const std::vector<std::vector<int>>& subsets_desc(int n) {
  // All subsets of {0..n-1} as index lists, larger first, then by mask.
  static std::vector<std::vector<std::vector<int>>> cache(5);
  auto& c = cache[n];
  if (c.empty()) {
    std::vector<int> masks;
    for (int m = 0; m < (1 << n); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(), [](int a, int b) {
      return __builtin_popcount(a) > __builtin_popcount(b);
    });
    for (int m : masks) {
      std::vector<int> s;
      for (int i = 0; i < n; ++i) {
        if (m >> i & 1) s.push_back(i);
      }
      c.push_back(s);
    }
  }
  return c;
}

}  // namespace

std::optional<EscapePlan> escape_crowded(CrowdedVariant v, const std::vector<TerminalPair>& pairs,
                                         const std::vector<Vertex>& singles,
                                         const LemmaOptions& opt) {
  const auto& g = grid();
  const int np = static_cast<int>(pairs.size());
  if (np > 4) throw InputError("escape_crowded: at most four pairs fit in a quadrant");
  VertexSet exits = canon::line_a() | canon::line_b();
  VertexSet b_only = canon::line_b() - canon::line_a();
  const int min_linked = v == CrowdedVariant::k78 ? 2 : 1;

  auto attempt = [&](const std::vector<int>& linked) -> std::optional<EscapePlan> {
    PlanRequest req;
    req.allowed = mask(g.edges(), opt);
    std::vector<int> term_of;  // demand index -> terminal index (-1 for links)
    for (int i : linked) {
      req.demands.push_back(link(pairs[i].s, pairs[i].t));
      term_of.push_back(-1);
    }
    std::vector<int> mates;
    for (int i = 0; i < np; ++i) {
      if (std::find(linked.begin(), linked.end(), i) != linked.end()) continue;
      for (int side = 0; side < 2; ++side) {
        mates.push_back(static_cast<int>(req.demands.size()));
        req.demands.push_back(mate(side ? pairs[i].t : pairs[i].s, exits, opt));
        term_of.push_back(2 * i + side);
      }
    }
    for (std::size_t j = 0; j < singles.size(); ++j) {
      mates.push_back(static_cast<int>(req.demands.size()));
      req.demands.push_back(mate(singles[j], exits, opt));
      term_of.push_back(2 * np + static_cast<int>(j));
    }
    req.distinct.push_back(mates);
    if (v != CrowdedVariant::k78) {
      req.capped = mates;
      req.cap_set = b_only;
      req.cap = 1;
    }
    auto paths = plan_paths(g, req);
    if (!paths) return std::nullopt;
    EscapePlan plan;
    for (std::size_t d = 0; d < paths->size(); ++d) {
      if (term_of[d] < 0) {
        plan.linked.emplace_back(linked[d], (*paths)[d]);
      } else {
        plan.mating.emplace_back(term_of[d], (*paths)[d]);
        plan.exits.push_back((*paths)[d].back());
      }
    }
    return plan;
  };

  if (v == CrowdedVariant::k5) {
    if (np < 1) throw InputError("escape_crowded: variant 5 needs the designated pair");
    return attempt({0});
  }
  for (const auto& subset : subsets_desc(np)) {
    if (static_cast<int>(subset.size()) < min_linked) continue;
    if (auto plan = attempt(subset)) return plan;
  }
  return std::nullopt;
}

std::optional<std::vector<Path>> mate_to_cycles(const std::vector<Vertex>& s,
                                                const std::vector<int>& gamma,
                                                const LemmaOptions& opt) {
  if (s.size() != gamma.size() || s.empty() || s.size() > 2) {
    throw InputError("mate_to_cycles: one or two terminals with one target each");
  }
  PlanRequest req;
  req.allowed = mask(grid().edges() - canon::c1_edges(), opt);
  for (std::size_t j = 0; j < s.size(); ++j) {
    req.demands.push_back(mate(s[j], canon::cycle_vertices(gamma[j]), opt));
  }
  return plan_paths(grid(), req);
}

std::optional<Frame> build_framing(Vertex s1, Vertex s2, int alpha, const LemmaOptions& opt) {
  for (Vertex apex : apexes(alpha)) {
    PlanRequest req;
    req.allowed = mask(grid().edges() - canon::c1_edges(), opt);
    req.demands = {link(s1, apex), link(s2, apex)};
    if (auto paths = plan_paths(grid(), req)) {
      return Frame{alpha, apex, {(*paths)[0], (*paths)[1]}};
    }
  }
  return std::nullopt;
}

std::optional<FramePlusOne> framing_two_plus_one(Vertex sp, Vertex sq, Vertex sr,
                                                 std::optional<int> alpha,
                                                 const LemmaOptions& opt) {
  for (int a = 0; a < 2; ++a) {
    if (alpha && *alpha != a) continue;
    for (Vertex apex : apexes(a)) {
      PlanRequest req;
      req.allowed = mask(grid().edges() - canon::c1_edges(), opt);
      req.demands = {link(sp, apex), link(sq, apex), mate(sr, canon::cycle_vertices(1 - a), opt)};
      if (auto paths = plan_paths(grid(), req)) {
        return FramePlusOne{Frame{a, apex, {(*paths)[0], (*paths)[1]}}, (*paths)[2]};
      }
    }
  }
  return std::nullopt;
}

std::optional<ChosenFrame> framing_choose_pq(const std::array<Vertex, 3>& s, int variant, Vertex z,
                                             const LemmaOptions& opt) {
  static constexpr std::array<std::array<int, 3>, 3> kChoices = {{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};
  const int alpha = variant == 0 ? 0 : 1;
  for (const auto& c : kChoices) {
    for (Vertex apex : apexes(alpha)) {
      PlanRequest req;
      req.allowed = mask(grid().edges() - canon::c1_edges(), opt);
      req.demands = {link(s[c[0]], apex), link(s[c[1]], apex)};
      if (variant == 0) {
        req.demands.push_back(mate(s[c[2]], canon::cycle_vertices(1), opt));
      } else {
        req.demands.push_back(link(s[c[2]], z));
      }
      if (auto paths = plan_paths(grid(), req)) {
        return ChosenFrame{c[0], c[1], c[2], Frame{alpha, apex, {(*paths)[0], (*paths)[1]}},
                           (*paths)[2]};
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Path>> exit_mating(Adjusted h, ExitVariant v,
                                             const std::vector<Vertex>& terminals,
                                             const LemmaOptions& opt) {
  if (terminals.size() != 3) throw InputError("exit_mating: three terminals expected");
  if ((v == ExitVariant::kAdjusted) == (h == Adjusted::kQ0)) {
    throw InputError("exit_mating: variant does not match the adjusted shape");
  }
  const GridGraph hg = adjusted_quadrant(h);
  for (Vertex t : terminals) {
    if (!hg.has_vertex(t)) throw InputError("exit_mating: terminal " + to_string(t) + " not in shape");
  }
  const VertexSet a = row_set(hg, 3);
  PlanRequest req;
  req.allowed = mask(hg.edges(), opt);
  switch (v) {
    case ExitVariant::kAdjusted:
      for (Vertex t : terminals) req.demands.push_back(mate(t, a, opt));
      break;
    case ExitVariant::kLinkAndMate:
      req.demands = {link(terminals[0], terminals[1]), mate(terminals[2], a, opt)};
      break;
    case ExitVariant::kDistinct:
      for (Vertex t : terminals) req.demands.push_back(mate(t, a, opt));
      req.distinct.push_back({0, 1, 2});
      break;
  }
  return plan_paths(hg, req);
}

Projection project_to_A(const std::vector<Vertex>& T, int s_index, const LemmaOptions& opt) {
  if (T.empty() || T.size() > 4 || s_index < 0 || s_index >= static_cast<int>(T.size())) {
    throw InputError("project_to_A: one to four terminals and a valid choice");
  }
  PlanRequest req;
  req.allowed = mask(canon::q0_edges(), opt);
  req.demands.push_back(link(T[s_index], canon::kB));
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (static_cast<int>(i) != s_index) req.demands.push_back(mate(T[i], canon::line_a(), opt));
  }
  Projection out;
  auto paths = plan_paths(grid(), req);
  if (!paths) return out;
  out.refused = false;
  out.link = (*paths)[0];
  out.mates.assign(paths->begin() + 1, paths->end());
  return out;
}

std::vector<int> projection_choices(const std::vector<Vertex>& T, const LemmaOptions& opt) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(T.size()); ++i) {
    if (!project_to_A(T, i, opt).refused) out.push_back(i);
  }
  return out;
}

const std::vector<Vertex>& shape_t1() {
  static const std::vector<Vertex> t = {{1, 1}, {2, 1}, {3, 1}};
  return t;
}

const std::vector<Vertex>& shape_t2() {
  static const std::vector<Vertex> t = {{2, 3}, {1, 3}, {1, 2}, {1, 1}};
  return t;
}

std::optional<BoundaryPlan> boundary_linkage(Vertex s1, Vertex t1, Vertex s2, Vertex s3, Line psi2,
                                             Line psi3, const LemmaOptions& opt) {
  auto line = [](Line l) { return l == Line::kA ? canon::line_a() : canon::line_b(); };
  PlanRequest req;
  req.allowed = mask(grid().edges(), opt);
  req.demands = {link(s1, t1), mate(s2, line(psi2), opt), mate(s3, line(psi3), opt)};
  req.distinct.push_back({1, 2});
  auto paths = plan_paths(grid(), req);
  if (!paths) return std::nullopt;
  return BoundaryPlan{(*paths)[0], {(*paths)[1], (*paths)[2]}};
}

// ---------------------------------------------------------------------------
// Certification.

namespace {

// Independent plan checks: every path is a walk on edges of `g` inside
// `allowed` without a repeated edge, and the paths are pairwise
// edge-disjoint.
bool paths_ok(const GridGraph& g, const EdgeSet& allowed, const std::vector<Path>& ps) {
  EdgeSet used;
  for (const auto& p : ps) {
    if (p.vertices.empty()) return false;
    EdgeSet mine;
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      const auto e = g.edge_between(p.vertices[i], p.vertices[i + 1]);
      if (!e || !allowed.test(*e) || mine.test(*e)) return false;
      mine.set(*e);
    }
    if (mine.intersects(used)) return false;
    used |= mine;
  }
  return true;
}

bool starts(const GridGraph& g, const Path& p, Vertex v) {
  return g.representative(p.front()) == g.representative(v);
}

bool ends_in(const GridGraph& g, const Path& p, const VertexSet& set) {
  return set.test(g.id(g.representative(p.back())));
}

struct Tally {
  LemmaCertificate& cert;
  void check(bool ok, const std::string& what) {
    ++cert.configurations;
    if (ok) return;
    ++cert.violations;
    if (cert.failures.size() < 20) cert.failures.push_back(what);
  }
};

std::string vlist(const std::vector<Vertex>& vs) {
  std::string s;
  for (Vertex v : vs) {
    if (!s.empty()) s += ' ';
    s += to_string(v);
  }
  return s;
}

std::vector<Vertex> cells() {
  std::vector<Vertex> out;
  for (int r = 1; r <= 3; ++r) {
    for (int c = 1; c <= 3; ++c) out.push_back({r, c});
  }
  return out;
}

// All perfect matchings of the given vertex list.
void matchings(std::vector<Vertex> vs, std::vector<TerminalPair>& cur,
               const std::function<void(const std::vector<TerminalPair>&)>& f) {
  if (vs.empty()) {
    f(cur);
    return;
  }
  const Vertex a = vs.front();
  for (std::size_t j = 1; j < vs.size(); ++j) {
    std::vector<Vertex> rest;
    for (std::size_t k = 1; k < vs.size(); ++k) {
      if (k != j) rest.push_back(vs[k]);
    }
    cur.push_back({a, vs[j]});
    matchings(rest, cur, f);
    cur.pop_back();
  }
}

void subsets(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> idx(k);
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (int i = from; i < n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

bool escape_ok(CrowdedVariant v, const std::vector<TerminalPair>& pairs,
               const std::vector<Vertex>& singles, const std::optional<EscapePlan>& plan) {
  if (!plan) return false;
  const auto& g = grid();
  std::vector<Path> all;
  std::vector<bool> linked(pairs.size(), false);
  for (const auto& [i, p] : plan->linked) {
    if (!starts(g, p, pairs[i].s) || !starts(g, reversed(p), pairs[i].t)) return false;
    linked[i] = true;
    all.push_back(p);
  }
  const int nlinked = static_cast<int>(plan->linked.size());
  if (v == CrowdedVariant::k78 && nlinked < 2) return false;
  if (v == CrowdedVariant::k6 && nlinked < 1) return false;
  if (v == CrowdedVariant::k5 && !linked[0]) return false;
  const VertexSet exits = canon::line_a() | canon::line_b();
  const VertexSet b_only = canon::line_b() - canon::line_a();
  // Every unlinked terminal escapes exactly once.
  std::vector<int> need;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (!linked[i]) {
      need.push_back(2 * static_cast<int>(i));
      need.push_back(2 * static_cast<int>(i) + 1);
    }
  }
  for (std::size_t j = 0; j < singles.size(); ++j) need.push_back(2 * static_cast<int>(pairs.size()) + j);
  std::vector<int> got;
  VertexSet seen;
  int in_b = 0;
  for (const auto& [t, p] : plan->mating) {
    got.push_back(t);
    const Vertex term = t < 2 * static_cast<int>(pairs.size())
                            ? (t % 2 ? pairs[t / 2].t : pairs[t / 2].s)
                            : singles[t - 2 * pairs.size()];
    if (!starts(g, p, term) || !ends_in(g, p, exits)) return false;
    const int end = g.id(p.back());
    if (seen.test(end)) return false;
    seen.set(end);
    if (b_only.test(end)) ++in_b;
    all.push_back(p);
  }
  std::sort(got.begin(), got.end());
  std::sort(need.begin(), need.end());
  if (got != need) return false;
  if (v != CrowdedVariant::k78 && in_b > 1) return false;
  return paths_ok(g, g.edges(), all);
}

void certify_crowded(LemmaCertificate& cert, int size) {
  Tally tally{cert};
  const auto cs = cells();
  subsets(9, size, [&](const std::vector<int>& pick) {
    std::vector<Vertex> vs;
    for (int i : pick) vs.push_back(cs[i]);
    auto run = [&](CrowdedVariant v, const std::vector<TerminalPair>& pairs,
                   const std::vector<Vertex>& singles) {
      const auto plan = escape_crowded(v, pairs, singles);
      std::string what = "pairs:";
      for (const auto& p : pairs) what += " " + to_string(p.s) + "-" + to_string(p.t);
      what += " singles: " + vlist(singles);
      tally.check(escape_ok(v, pairs, singles, plan), what);
    };
    if (size == 8) {
      std::vector<TerminalPair> cur;
      matchings(vs, cur, [&](const auto& m) { run(CrowdedVariant::k78, m, {}); });
    } else if (size == 7) {
      for (std::size_t s = 0; s < vs.size(); ++s) {
        std::vector<Vertex> rest;
        for (std::size_t k = 0; k < vs.size(); ++k) {
          if (k != s) rest.push_back(vs[k]);
        }
        std::vector<TerminalPair> cur;
        matchings(rest, cur, [&](const auto& m) { run(CrowdedVariant::k78, m, {vs[s]}); });
      }
    } else if (size == 6) {
      // Choose the singles, pair up the rest. With four pairs in the grid a
      // quadrant holding six terminals has at least two internal pairs.
      for (int ns : {0, 2}) {
        subsets(6, ns, [&](const std::vector<int>& sing) {
          std::vector<Vertex> singles;
          std::vector<Vertex> rest;
          for (int k = 0; k < 6; ++k) {
            if (std::find(sing.begin(), sing.end(), k) != sing.end()) {
              singles.push_back(vs[k]);
            } else {
              rest.push_back(vs[k]);
            }
          }
          std::vector<TerminalPair> cur;
          matchings(rest, cur, [&](const auto& m) { run(CrowdedVariant::k6, m, singles); });
        });
      }
    } else {
      // Designated pair plus three other terminals.
      subsets(5, 2, [&](const std::vector<int>& pr) {
        std::vector<Vertex> singles;
        for (int k = 0; k < 5; ++k) {
          if (k != pr[0] && k != pr[1]) singles.push_back(vs[k]);
        }
        run(CrowdedVariant::k5, {{vs[pr[0]], vs[pr[1]]}}, singles);
      });
    }
  });
}

bool frame_ok(const std::optional<Frame>& f, Vertex s1, Vertex s2, int alpha, const EdgeSet& allowed) {
  if (!f || f->alpha != alpha) return false;
  const auto& g = grid();
  if (!canon::cycle_vertices(alpha).test(g.id(f->apex))) return false;
  for (int j = 0; j < 2; ++j) {
    if (f->feeders[j].front() != (j ? s2 : s1) || f->feeders[j].back() != f->apex) return false;
  }
  return paths_ok(g, allowed, {f->feeders[0], f->feeders[1]});
}

void certify_frame(LemmaCertificate& cert) {
  Tally tally{cert};
  const auto& g = grid();
  const EdgeSet allowed = g.edges() - canon::c1_edges();
  for (Vertex s1 : cells()) {
    for (Vertex s2 : cells()) {
      for (int g1 = 0; g1 < 2; ++g1) {
        for (int g2 = 0; g2 < 2; ++g2) {
          const auto m = mate_to_cycles({s1, s2}, {g1, g2});
          bool ok = m && m->size() == 2 && paths_ok(g, allowed, *m);
          for (int j = 0; ok && j < 2; ++j) {
            ok = (*m)[j].front() == (j ? s2 : s1) &&
                 ends_in(g, (*m)[j], canon::cycle_vertices(j ? g2 : g1));
          }
          tally.check(ok, "(i) " + to_string(s1) + " " + to_string(s2) + " gamma " +
                              std::to_string(g1) + std::to_string(g2));
        }
      }
      for (int alpha = 0; alpha < 2; ++alpha) {
        tally.check(frame_ok(build_framing(s1, s2, alpha), s1, s2, alpha, allowed),
                    "(ii) " + to_string(s1) + " " + to_string(s2) + " alpha " + std::to_string(alpha));
      }
    }
  }
}

void certify_two_plus_one(LemmaCertificate& cert) {
  Tally tally{cert};
  const auto& g = grid();
  const EdgeSet allowed = g.edges() - canon::c1_edges();
  const auto cs = cells();
  for (Vertex a : cs) {
    for (Vertex b : cs) {
      for (Vertex c : cs) {
        if (a == b || a == c || b == c) continue;
        const auto r = framing_two_plus_one(a, b, c);
        bool ok = r.has_value();
        if (ok) {
          const int beta = 1 - r->frame.alpha;
          ok = frame_ok(r->frame, a, b, r->frame.alpha, allowed) && r->third.front() == c &&
               ends_in(g, r->third, canon::cycle_vertices(beta)) &&
               paths_ok(g, allowed, {r->frame.feeders[0], r->frame.feeders[1], r->third});
        }
        tally.check(ok, vlist({a, b, c}));
      }
    }
  }
  // Informational: the weaker form where any two of the three may be framed.
  int weak_fail = 0;
  subsets(9, 3, [&](const std::vector<int>& pick) {
    const std::array<Vertex, 3> s = {cs[pick[0]], cs[pick[1]], cs[pick[2]]};
    bool any = false;
    for (int r = 0; r < 3 && !any; ++r) {
      any = framing_two_plus_one(s[(r + 1) % 3], s[(r + 2) % 3], s[r]).has_value();
    }
    if (!any) ++weak_fail;
  });
  cert.notes.push_back("unordered triples with no workable choice of the framed two: " +
                       std::to_string(weak_fail) + " of 84");
}

void certify_choose_pq(LemmaCertificate& cert) {
  Tally tally{cert};
  const auto& g = grid();
  const EdgeSet allowed = g.edges() - canon::c1_edges();
  const auto cs = cells();
  subsets(9, 3, [&](const std::vector<int>& pick) {
    const std::array<Vertex, 3> s = {cs[pick[0]], cs[pick[1]], cs[pick[2]]};
    struct Job {
      int variant;
      Vertex z;
    };
    for (const Job& job : {Job{0, canon::kX0}, Job{1, canon::kX0}, Job{1, Vertex{1, 3}},
                           Job{1, Vertex{3, 1}}}) {
      const auto r = framing_choose_pq(s, job.variant, job.z);
      bool ok = r.has_value();
      if (ok) {
        const int alpha = job.variant == 0 ? 0 : 1;
        ok = r->p < r->q && frame_ok(r->frame, s[r->p], s[r->q], alpha, allowed) &&
             r->third.front() == s[r->r] &&
             (job.variant == 0 ? ends_in(g, r->third, canon::cycle_vertices(1))
                               : r->third.back() == job.z) &&
             paths_ok(g, allowed, {r->frame.feeders[0], r->frame.feeders[1], r->third});
      }
      tally.check(ok, vlist({s[0], s[1], s[2]}) + " variant " + std::to_string(job.variant) +
                          " z " + to_string(job.z));
    }
  });
}

void certify_exit(LemmaCertificate& cert) {
  Tally tally{cert};
  for (Adjusted h : {Adjusted::kQ1, Adjusted::kQ2, Adjusted::kQ3, Adjusted::kQ4}) {
    const GridGraph hg = adjusted_quadrant(h);
    std::vector<Vertex> vs;
    hg.vertices().for_each([&](int id) { vs.push_back(hg.vertex(id)); });
    const VertexSet a = row_set(hg, 3);
    subsets(static_cast<int>(vs.size()), 3, [&](const std::vector<int>& pick) {
      const std::vector<Vertex> t = {vs[pick[0]], vs[pick[1]], vs[pick[2]]};
      const auto m = exit_mating(h, ExitVariant::kAdjusted, t);
      bool ok = m && paths_ok(hg, hg.edges(), *m);
      for (int j = 0; ok && j < 3; ++j) ok = starts(hg, (*m)[j], t[j]) && ends_in(hg, (*m)[j], a);
      tally.check(ok, std::string("(i) ") + std::string(adjusted_name(h)) + " " + vlist(t));
    });
  }
  const GridGraph q0 = adjusted_quadrant(Adjusted::kQ0);
  const VertexSet a = row_set(q0, 3);
  const auto cs = cells();
  for (Vertex s1 : cs) {
    for (Vertex t1 : cs) {
      for (Vertex s2 : cs) {
        const auto m = exit_mating(Adjusted::kQ0, ExitVariant::kLinkAndMate, {s1, t1, s2});
        const bool ok = m && paths_ok(q0, q0.edges(), *m) && (*m)[0].front() == s1 &&
                        (*m)[0].back() == t1 && (*m)[1].front() == s2 && ends_in(q0, (*m)[1], a);
        tally.check(ok, "(ii) " + vlist({s1, t1, s2}));
      }
    }
  }
  auto distinct = [&](const std::vector<Vertex>& t) {
    const auto m = exit_mating(Adjusted::kQ0, ExitVariant::kDistinct, t);
    bool ok = m && paths_ok(q0, q0.edges(), *m);
    VertexSet ends;
    for (int j = 0; ok && j < 3; ++j) {
      ok = (*m)[j].front() == t[j] && ends_in(q0, (*m)[j], a) && !ends.test(q0.id((*m)[j].back()));
      if (ok) ends.set(q0.id((*m)[j].back()));
    }
    tally.check(ok, "(iii) " + vlist(t));
  };
  subsets(9, 3, [&](const std::vector<int>& pick) { distinct({cs[pick[0]], cs[pick[1]], cs[pick[2]]}); });
  // Two coincident terminals off A, the third anywhere else.
  for (Vertex d : cs) {
    if (d.row == 3) continue;
    for (Vertex o : cs) {
      if (o != d) distinct({d, d, o});
    }
  }
}

bool projection_ok(const std::vector<Vertex>& T, int s, const Projection& pr) {
  if (pr.refused) return true;
  const auto& g = grid();
  std::vector<Path> all = {pr.link};
  if (pr.link.front() != T[s] || pr.link.back() != canon::kB) return false;
  std::size_t k = 0;
  for (std::size_t i = 0; i < T.size(); ++i) {
    if (static_cast<int>(i) == s) continue;
    if (k >= pr.mates.size()) return false;
    const auto& m = pr.mates[k++];
    if (m.front() != T[i] || !ends_in(g, m, canon::line_a())) return false;
    all.push_back(m);
  }
  return k == pr.mates.size() && paths_ok(g, canon::q0_edges(), all);
}

void certify_projection(LemmaCertificate& cert) {
  Tally tally{cert};
  const auto cs = cells();
  auto as_set = [](std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto t1 = as_set(shape_t1());
  const auto t2 = as_set(shape_t2());
  std::vector<std::string> exceptional;
  std::uint64_t sets = 0;
  for (int size = 1; size <= 4; ++size) {
    subsets(9, size, [&](const std::vector<int>& pick) {
      std::vector<Vertex> T;
      for (int i : pick) T.push_back(cs[i]);
      ++sets;
      std::vector<int> ok_idx;
      for (int s = 0; s < size; ++s) {
        const auto pr = project_to_A(T, s);
        // A returned plan must satisfy the contract.
        tally.check(projection_ok(T, s, pr), "plan check " + vlist(T) + " s=" + to_string(T[s]));
        if (!pr.refused) ok_idx.push_back(s);
      }
      const int n = static_cast<int>(ok_idx.size());
      const bool upper = std::all_of(T.begin(), T.end(), [](Vertex v) { return v.row < 3; }) &&
                         std::find(T.begin(), T.end(), canon::kCorner) == T.end();
      if (upper) tally.check(n == size, "(i) " + vlist(T));
      const auto sorted = as_set(T);
      const bool is_t1 = sorted == t1;
      const bool is_t2 = sorted == t2;
      if (n < std::min(3, size)) exceptional.push_back(vlist(T));
      if (is_t1 || is_t2) {
        const auto& shape = is_t1 ? shape_t1() : shape_t2();
        std::vector<Vertex> got;
        for (int i : ok_idx) got.push_back(T[i]);
        tally.check(as_set(got) == as_set({shape[0], shape[1]}),
                    "(iii) " + vlist(T) + " succeeded for " + vlist(got));
      } else {
        tally.check(n >= std::min(3, size), "(ii) " + vlist(T) + " only " + std::to_string(n));
      }
    });
  }
  cert.notes.push_back("terminal sets examined: " + std::to_string(sets));
  std::string ex = "sets with fewer than min(3,|T|) choices:";
  for (const auto& e : exceptional) ex += " {" + e + "}";
  cert.notes.push_back(ex);
  cert.notes.push_back(exceptional.size() == 2 ? "exceptional shapes re-derived: exactly T1 and T2"
                                               : "exceptional shapes differ from {T1, T2}");
  if (exceptional.size() != 2) ++cert.violations;
}

void certify_boundary(LemmaCertificate& cert) {
  Tally tally{cert};
  const auto& g = grid();
  const auto cs = cells();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      for (Vertex s2 : cs) {
        for (Vertex s3 : cs) {
          if (s2 == cs[i] || s2 == cs[j] || s3 == cs[i] || s3 == cs[j] || s2 == s3) continue;
          for (Line p2 : {Line::kA, Line::kB}) {
            for (Line p3 : {Line::kA, Line::kB}) {
              const auto r = boundary_linkage(cs[i], cs[j], s2, s3, p2, p3);
              auto line = [](Line l) { return l == Line::kA ? canon::line_a() : canon::line_b(); };
              const bool ok = r && paths_ok(g, g.edges(), {r->p1, r->mates[0], r->mates[1]}) &&
                              r->p1.front() == cs[i] && r->p1.back() == cs[j] &&
                              r->mates[0].front() == s2 && r->mates[1].front() == s3 &&
                              ends_in(g, r->mates[0], line(p2)) && ends_in(g, r->mates[1], line(p3)) &&
                              r->mates[0].back() != r->mates[1].back();
              tally.check(ok, vlist({cs[i], cs[j], s2, s3}) + (p2 == Line::kA ? " A" : " B") +
                                  (p3 == Line::kA ? "A" : "B"));
            }
          }
        }
      }
    }
  }
}

void certify_w2linked(LemmaCertificate& cert, const SolveLimits& limits) {
  auto run = [&](const GridGraph& g, const std::string& label) {
    const auto r = check_weakly_2_linked(g, limits);
    cert.configurations += r.quadruples;
    if (!r.complete) cert.complete = false;
    std::string note = label + ": " + std::to_string(r.quadruples) + " quadruples, " +
                       (r.linked ? "weakly 2-linked" : "NOT weakly 2-linked");
    if (!r.linked) {
      ++cert.violations;
      const auto& f = *r.failure;
      cert.failures.push_back(label + " fails at " + vlist({f[0], f[1], f[2], f[3]}));
    }
    cert.notes.push_back(note);
  };
  for (int k = 3; k <= 6; ++k) {
    run(make_grid(3, k), "P3 x P" + std::to_string(k));
  }
  for (int k = 3; k <= 6; ++k) {
    const GridGraph full = make_grid(k, k);
    SubgridSpec spec;
    spec.remove_vertices = rect(full, 3, k, 3, k);
    run(subgrid(full, spec), "frame of P" + std::to_string(k) + " x P" + std::to_string(k));
  }
}

void certify_3pp(LemmaCertificate& cert, const SolveLimits& limits, int jobs) {
  for (int k = 4; k <= 6; ++k) {
    CampaignOptions opt;
    opt.mode = CampaignMode::kExhaustive;
    opt.method = CampaignMethod::kOracle;
    opt.canonical = true;
    opt.stop_at_unsat = false;
    opt.limits = limits;
    opt.jobs = jobs;
    const auto rep = is_k_path_pairable(make_grid(4, k), 3, opt);
    cert.configurations += rep.instances;
    cert.violations += rep.unsat + rep.invalid;
    if (rep.timeout) cert.complete = false;
    cert.notes.push_back("P4 x P" + std::to_string(k) + ": " + std::to_string(rep.instances) +
                         " canonical pairings covering " + std::to_string(rep.covered) + " of " +
                         std::to_string(rep.space_size) + "; unsat " + std::to_string(rep.unsat) +
                         ", timeout " + std::to_string(rep.timeout));
  }
}

struct Entry {
  std::string name;
  std::string claim;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> r = {
      {"heavy78",
       "A quadrant with 7 or 8 terminals links at least two of its pairs internally; every other "
       "terminal escapes on edge-disjoint paths to distinct exits on the central lines A and B."},
      {"heavy6",
       "A quadrant with 6 terminals and at least one internal pair links one or more pairs; the "
       "rest escape to distinct exits on A and B with at most one exit on B minus A."},
      {"heavy5",
       "A quadrant with 5 terminals containing a designated pair links that pair; the three other "
       "terminals escape off its path to distinct exits on A and B, at most one on B minus A."},
      {"w2linked",
       "P3 x Pk and the two-row, two-column frame of Pk x Pk are weakly 2-linked (checked for "
       "k = 3..6)."},
      {"3pp", "P4 x Pk is 3-path-pairable (checked exhaustively for k = 4, 5, 6)."},
      {"frame",
       "Two terminals of a quadrant (possibly equal) mate onto any prescribed choice of the two "
       "central cycles, and admit a framing onto either cycle, avoiding the 12-cycle edges."},
      {"12toCa",
       "For three distinct terminals of a quadrant, two of them (prescribed) frame onto one "
       "central cycle and the third mates onto the other, avoiding the 12-cycle edges."},
      {"Caforpq",
       "For three distinct terminals some two frame onto the 4-cycle with the third mated onto "
       "the 12-cycle; and some two frame onto the 12-cycle with the third mated to a fixed corner "
       "z (x0 or a degree-3 corner)."},
      {"exit",
       "Three terminals of an adjusted quadrant Q1..Q4 mate into A; in Q0 a pair links while a "
       "third terminal mates into A; in Q0 three terminals mate into three distinct vertices of "
       "A, also when two terminals off A coincide."},
      {"heavy4",
       "In Q0, up to four terminals: the chosen one links to the middle of B while the rest mate "
       "into A. Every choice works when all terminals are off A and off the far corner; otherwise "
       "at least min(3,|T|) choices work, except for shapes T1 and T2 where exactly s1 and s2 "
       "work."},
      {"boundary",
       "For a pair and two further terminals of a quadrant, the pair links and the two terminals "
       "mate to distinct vertices of their prescribed lines (A or B)."},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& lemma_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& e : registry()) n.push_back(e.name);
    return n;
  }();
  return names;
}

std::string_view lemma_claim(std::string_view name) {
  for (const auto& e : registry()) {
    if (e.name == name) return e.claim;
  }
  throw InputError("unknown lemma: " + std::string(name));
}

LemmaCertificate certify_lemma(std::string_view name, const SolveLimits& limits, int jobs) {
  const auto start = std::chrono::steady_clock::now();
  LemmaCertificate cert;
  cert.name = std::string(name);
  cert.claim = std::string(lemma_claim(name));
  if (name == "heavy78") {
    certify_crowded(cert, 8);
    certify_crowded(cert, 7);
  } else if (name == "heavy6") {
    certify_crowded(cert, 6);
  } else if (name == "heavy5") {
    certify_crowded(cert, 5);
  } else if (name == "w2linked") {
    certify_w2linked(cert, limits);
  } else if (name == "3pp") {
    certify_3pp(cert, limits, jobs);
  } else if (name == "frame") {
    certify_frame(cert);
  } else if (name == "12toCa") {
    certify_two_plus_one(cert);
  } else if (name == "Caforpq") {
    certify_choose_pq(cert);
  } else if (name == "exit") {
    certify_exit(cert);
  } else if (name == "heavy4") {
    certify_projection(cert);
  } else if (name == "boundary") {
    certify_boundary(cert);
  }
  cert.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return cert;
}

}  // namespace gridlink
