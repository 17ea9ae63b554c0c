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

#include "gridlink/constructive.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <stdexcept>

#include "gridlink/layout.hpp"
#include "gridlink/lemmas.hpp"
#include "gridlink/local_planner.hpp"
#include "gridlink/validate.hpp"

namespace gridlink {

namespace {

using QId = QuadrantId;
constexpr QId NW = QId::kNW;
constexpr QId NE = QId::kNE;
constexpr QId SW = QId::kSW;
constexpr QId SE = QId::kSE;

const GridGraph& g6() {
  static const GridGraph g = make_grid(6, 6);
  return g;
}

const CentralCycles& cycles() {
  static const CentralCycles c = central_cycles(g6());
  return c;
}

// 8-cycle through the neighbors of (3,3).
const Path& cycle_d() {
  static const Path d{{{2, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 4}, {4, 3}, {4, 2}, {3, 2}, {2, 2}}};
  return d;
}

const Path& cycle_c(int alpha) { return alpha == 0 ? cycles().c0 : cycles().c1; }

VertexSet qset(QId q) { return quadrant_vertices(g6(), q); }
VertexSet box(int r1, int r2, int c1, int c2) { return rect(g6(), r1, r2, c1, c2); }
EdgeSet induced(const VertexSet& vs) { return induced_edges(g6(), vs); }
EdgeSet rows_region(int r1, int r2) { return induced(box(r1, r2, 1, 6)); }

VertexSet with(VertexSet vs, std::initializer_list<Vertex> extra) {
  for (Vertex v : extra) vs.set(g6().id(v));
  return vs;
}

// Edges (r,c)-(r+1,c) for every column.
EdgeSet verticals_below(int r) {
  EdgeSet e;
  for (int c = 1; c <= 6; ++c) e.set(g6().grid_edge_index({r, c}, {r + 1, c}));
  return e;
}

Path line_path(Vertex a, Vertex b) {
  if (a.row != b.row && a.col != b.col) return {};
  Path p{{a}};
  while (a != b) {
    a.row += (b.row > a.row) - (b.row < a.row);
    a.col += (b.col > a.col) - (b.col < a.col);
    p.vertices.push_back(a);
  }
  return p;
}

std::string qname(QId q) { return std::string(quadrant_name(q)); }

// Role k of a case description: input pair `pair`, with s and t exchanged
// when `flip` is set.
struct Role {
  int pair = 0;
  bool flip = false;
};
using Roles = std::array<Role, 4>;
using Head = std::pair<int, int>;  // role, side (0 = s, 1 = t)

Role oriented(const Pairing& q, int i, QId where) {
  return {i, quadrant_of(q.pairs[i].s) != where};
}

bool touches(const Pairing& q, int i, QId x) {
  return quadrant_of(q.pairs[i].s) == x || quadrant_of(q.pairs[i].t) == x;
}

bool is_loop(const Pairing& q, int i) {
  return quadrant_of(q.pairs[i].s) == quadrant_of(q.pairs[i].t);
}

// Partial linkage under construction. Each role grows from both ends; the
// pieces are recorded as trace steps and joined once the role is closed.
class Build {
 public:
  Build(const Pairing& q, const Roles& roles) : roles_(roles) {
    for (int k = 0; k < 4; ++k) {
      const auto& tp = q.pairs[roles[k].pair];
      head_[k][0] = roles[k].flip ? tp.t : tp.s;
      head_[k][1] = roles[k].flip ? tp.s : tp.t;
      start_[k] = head_[k][0];
    }
  }

  const Roles& roles() const { return roles_; }
  Vertex head(int k, int side) const { return head_[k][side]; }
  bool done(int k) const { return done_[k]; }
  const EdgeSet& used() const { return used_; }
  const std::vector<TraceStep>& trace() const { return trace_; }

  bool extend(int k, int side, const Path& piece, const std::string& step) {
    if (done_[k] || piece.vertices.empty() || piece.front() != head_[k][side]) return false;
    if (!take(piece)) return false;
    pieces_[k][side].push_back(piece);
    head_[k][side] = piece.back();
    record(step, k, piece);
    return true;
  }
  bool extend_to(int k, int side, Vertex to, const std::string& step) {
    return extend(k, side, line_path(head_[k][side], to), step);
  }

  bool close(int k, const Path& conn, const std::string& step) {
    if (done_[k] || conn.vertices.empty()) return false;
    if (conn.front() != head_[k][0] || conn.back() != head_[k][1]) return false;
    if (!take(conn)) return false;
    conn_[k] = conn;
    done_[k] = true;
    record(step, k, conn);
    return true;
  }
  // Closes a role whose two heads met.
  bool close_if_met(int k) {
    if (done_[k] || head_[k][0] != head_[k][1]) return done_[k];
    return close(k, Path{{head_[k][0]}}, "");
  }

  std::vector<int> open_roles(std::initializer_list<int> ks) const {
    std::vector<int> out;
    for (int k : ks) {
      if (!done_[k]) out.push_back(k);
    }
    return out;
  }
  std::vector<int> open_roles() const { return open_roles({0, 1, 2, 3}); }

  // Open heads inside quadrant x, in role order.
  std::vector<Head> heads_in(QId x) const {
    std::vector<Head> out;
    for (int k = 0; k < 4; ++k) {
      if (done_[k]) continue;
      for (int side = 0; side < 2; ++side) {
        if (quadrant_of(head_[k][side]) == x) out.emplace_back(k, side);
      }
    }
    return out;
  }

  // Path of role k from its s terminal to its t terminal.
  Path role_path(int k) const {
    Path acc{{start_[k]}};
    for (const auto& p : pieces_[k][0]) acc = joined(acc, p);
    acc = joined(acc, conn_[k]);
    for (auto it = pieces_[k][1].rbegin(); it != pieces_[k][1].rend(); ++it) {
      acc = joined(acc, reversed(*it));
    }
    return acc;
  }

 private:
  bool take(const Path& p) {
    const auto e = path_edges(g6(), p);
    if (!e || e->intersects(used_)) return false;
    used_ |= *e;
    return true;
  }
  void record(const std::string& step, int k, const Path& p) {
    if (p.trivial()) return;
    if (trace_.empty() || trace_.back().step != step) trace_.push_back({"", step, {}});
    trace_.back().paths.emplace_back(k, p);
  }

  Roles roles_;
  std::array<std::array<Vertex, 2>, 4> head_{};
  std::array<Vertex, 4> start_{};
  std::array<std::array<std::vector<Path>, 2>, 4> pieces_;
  std::array<Path, 4> conn_;
  std::array<bool, 4> done_{};
  EdgeSet used_;
  std::vector<TraceStep> trace_;
};

// Lemma glue ----------------------------------------------------------------

LemmaOptions lemma_opts(const Build& b, const QuadFrame& f) {
  LemmaOptions o;
  b.used().for_each([&](int e) {
    const auto [u, v] = g6().grid_edge(e);
    if (f.contains(u) && f.contains(v)) {
      o.blocked.set(canon::grid().grid_edge_index(f.to_canon(u), f.to_canon(v)));
    }
  });
  return o;
}

std::vector<Vertex> canon_heads(const Build& b, const QuadFrame& f, const std::vector<Head>& hs) {
  std::vector<Vertex> out;
  for (auto [k, side] : hs) out.push_back(f.to_canon(b.head(k, side)));
  return out;
}

bool extend_all(Build& b, const QuadFrame& f, const std::vector<Head>& hs,
                const std::vector<Path>& paths, const std::string& step) {
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (!b.extend(hs[i].first, hs[i].second, f.to_host(paths[i]), step)) return false;
  }
  return true;
}

bool all_in(const Build& b, QId x, const std::vector<Head>& hs) {
  return std::all_of(hs.begin(), hs.end(),
                     [&](Head h) { return quadrant_of(b.head(h.first, h.second)) == x; });
}

// Two heads framed onto C_alpha inside quadrant x.
bool frame(Build& b, QId x, Head h1, Head h2, int alpha) {
  const auto f = quad_frame(x);
  if (!all_in(b, x, {h1, h2})) return false;
  const auto hs = canon_heads(b, f, {h1, h2});
  const auto fr = build_framing(hs[0], hs[1], alpha, lemma_opts(b, f));
  if (!fr) return false;
  return extend_all(b, f, {h1, h2}, {fr->feeders[0], fr->feeders[1]}, "frame " + qname(x));
}

bool mate_cycles(Build& b, QId x, const std::vector<Head>& hs, const std::vector<int>& gamma) {
  if (hs.empty()) return true;
  if (hs.size() > 2) return false;
  const auto f = quad_frame(x);
  const auto paths = mate_to_cycles(canon_heads(b, f, hs), gamma, lemma_opts(b, f));
  return paths && extend_all(b, f, hs, *paths, "mate to cycles " + qname(x));
}

// Heads mated onto distinct vertices of the frame's line A without using
// the edges of A (three heads: the exit lemma; fewer: the same search).
bool mate_distinct_a(Build& b, const QuadFrame& f, const std::vector<Head>& hs) {
  if (hs.empty()) return true;
  if (hs.size() > 3 || !all_in(b, f.q, hs)) return false;
  const auto o = lemma_opts(b, f);
  const auto ts = canon_heads(b, f, hs);
  std::optional<std::vector<Path>> paths;
  if (ts.size() == 3) {
    paths = exit_mating(Adjusted::kQ0, ExitVariant::kDistinct, ts, o);
  } else {
    PlanRequest req;
    req.allowed = canon::q0_edges() - o.blocked;
    std::vector<int> group;
    for (Vertex t : ts) {
      Demand d;
      d.from = t;
      d.targets = canon::line_a();
      group.push_back(static_cast<int>(req.demands.size()));
      req.demands.push_back(d);
    }
    req.distinct.push_back(group);
    paths = plan_paths(canon::grid(), req);
  }
  return paths && extend_all(b, f, hs, *paths, "exit " + qname(f.q));
}

// Link role `link` (both heads in x) and mate the heads `ms` onto the given
// lines, distinct ends, all inside x.
bool boundary(Build& b, const QuadFrame& f, int link, const std::vector<Head>& ms,
              const std::vector<Line>& psi) {
  const std::string step = "boundary " + qname(f.q);
  if (!all_in(b, f.q, {{link, 0}, {link, 1}}) || !all_in(b, f.q, ms) || ms.size() > 2) return false;
  const auto o = lemma_opts(b, f);
  const Vertex s1 = f.to_canon(b.head(link, 0));
  const Vertex t1 = f.to_canon(b.head(link, 1));
  const auto ts = canon_heads(b, f, ms);
  if (ms.size() == 2) {
    const auto plan = boundary_linkage(s1, t1, ts[0], ts[1], psi[0], psi[1], o);
    if (!plan) return false;
    return b.close(link, f.to_host(plan->p1), step) &&
           extend_all(b, f, ms, {plan->mates[0], plan->mates[1]}, step);
  }
  PlanRequest req;
  req.allowed = canon::grid().edges() - o.blocked;
  Demand d;
  d.from = s1;
  d.to = t1;
  req.demands.push_back(d);
  for (std::size_t i = 0; i < ms.size(); ++i) {
    Demand m;
    m.from = ts[i];
    m.targets = psi[i] == Line::kA ? canon::line_a() : canon::line_b();
    req.demands.push_back(m);
  }
  const auto paths = plan_paths(canon::grid(), req);
  if (!paths) return false;
  if (!b.close(link, f.to_host((*paths)[0]), step)) return false;
  return extend_all(b, f, ms, std::vector<Path>(paths->begin() + 1, paths->end()), step);
}

// Completions -----------------------------------------------------------------

SolveLimits g_step_limits{2'000'000, 10.0};

// Routes the open roles among `ks` inside `region` (minus used edges) with
// the oracle.
bool complete(Build& b, const std::vector<int>& ks, const EdgeSet& region, const std::string& step) {
  Pairing sub;
  std::vector<int> idx;
  for (int k : ks) {
    if (b.done(k)) continue;
    if (b.close_if_met(k)) continue;
    sub.pairs.push_back({b.head(k, 0), b.head(k, 1)});
    idx.push_back(k);
  }
  if (sub.pairs.empty()) return true;
  SolveOptions so;
  so.limits = g_step_limits;
  so.allow_coincident = true;
  so.allowed_edges = region - b.used();
  const auto rep = find_weak_linkage(g6(), sub, so);
  if (rep.status != SolveStatus::kSat) return false;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (!b.close(idx[i], rep.linkage[i], step)) return false;
  }
  return true;
}

int cycle_pos(const std::vector<Vertex>& cv, Vertex v) {
  const auto it = std::find(cv.begin(), cv.end(), v);
  return it == cv.end() ? -1 : static_cast<int>(it - cv.begin());
}

Path arc(const std::vector<Vertex>& cv, int a, int z, int dir) {
  const int n = static_cast<int>(cv.size());
  Path p{{cv[a]}};
  for (int i = a; i != z;) {
    i = (i + dir + n) % n;
    p.vertices.push_back(cv[i]);
  }
  return p;
}

// Closes the roles whose heads all lie on the cycle along edge-disjoint arcs.
bool close_cycle(Build& b, const Path& cycle, std::vector<int> ks, const std::string& step) {
  const std::vector<Vertex> cv(cycle.vertices.begin(), cycle.vertices.end() - 1);
  std::vector<int> open;
  for (int k : ks) {
    if (b.done(k) || b.close_if_met(k)) continue;
    if (cycle_pos(cv, b.head(k, 0)) < 0 || cycle_pos(cv, b.head(k, 1)) < 0) return false;
    open.push_back(k);
  }
  const int n = static_cast<int>(open.size());
  for (int mask = 0; mask < (1 << n); ++mask) {
    EdgeSet seen = b.used();
    std::vector<Path> arcs;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      const int k = open[i];
      Path p = arc(cv, cycle_pos(cv, b.head(k, 0)), cycle_pos(cv, b.head(k, 1)), (mask >> i & 1) ? -1 : 1);
      const auto e = path_edges(g6(), p);
      ok = e && !e->intersects(seen);
      if (ok) {
        seen |= *e;
        arcs.push_back(std::move(p));
      }
    }
    if (!ok) continue;
    for (int i = 0; i < n; ++i) {
      if (!b.close(open[i], arcs[i], step)) return false;
    }
    return true;
  }
  return false;
}

// Moves the head one step across the grid line it sits on, towards `dir`.
bool step_across(Build& b, Head h, int drow, int dcol, const std::string& step) {
  const Vertex v = b.head(h.first, h.second);
  return b.extend_to(h.first, h.second, {v.row + drow, v.col + dcol}, step);
}

// Case A.1 ---------------------------------------------------------------------

std::optional<Build> solve_a1(const Pairing& q) {
  std::vector<int> nw;
  std::vector<int> rest;
  for (int i = 0; i < 4; ++i) (touches(q, i, NW) ? nw : rest).push_back(i);
  if (nw.size() != 2) return std::nullopt;
  for (QId x : {SE, NE, SW}) {
    if (!touches(q, rest[0], x) || !touches(q, rest[1], x)) continue;
    Build b(q, {oriented(q, nw[0], NW), oriented(q, nw[1], NW), oriented(q, rest[0], x),
                oriented(q, rest[1], x)});
    if (!frame(b, NW, {0, 0}, {1, 0}, 0) || !frame(b, x, {2, 0}, {3, 0}, 1)) continue;
    bool ok = true;
    for (QId y : kQuadrants) {
      if (y == NW || y == x) continue;
      const auto hs = b.heads_in(y);
      std::vector<int> gamma;
      for (auto h : hs) gamma.push_back(h.first < 2 ? 0 : 1);
      ok = ok && mate_cycles(b, y, hs, gamma);
    }
    if (ok && close_cycle(b, cycles().c0, {0, 1}, "cycle C0") &&
        close_cycle(b, cycles().c1, {2, 3}, "cycle C1")) {
      return b;
    }
  }
  return std::nullopt;
}

// Case A.2 ---------------------------------------------------------------------

std::optional<Build> solve_a2(const Pairing& q) {
  std::vector<int> nw;
  int m = -1;
  for (int i = 0; i < 4; ++i) {
    if (touches(q, i, NW)) {
      nw.push_back(i);
    } else {
      m = i;
    }
  }
  if (nw.size() != 3 || m < 0) return std::nullopt;
  for (int ri = 0; ri < 3; ++ri) {
    const int r = nw[ri];
    std::vector<int> others;
    for (int i : nw) {
      if (i != r) others.push_back(i);
    }
    for (QId x : {NE, SE, SW}) {
      if (!touches(q, r, x) || !touches(q, m, x)) continue;
      Build b(q, {oriented(q, others[0], NW), oriented(q, others[1], NW), oriented(q, r, NW),
                  oriented(q, m, x)});
      const auto f = quad_frame(NW);
      const auto hs = canon_heads(b, f, {{0, 0}, {1, 0}, {2, 0}});
      const auto fp = framing_two_plus_one(hs[0], hs[1], hs[2], std::nullopt, lemma_opts(b, f));
      if (!fp) continue;
      if (!extend_all(b, f, {{0, 0}, {1, 0}, {2, 0}},
                      {fp->frame.feeders[0], fp->frame.feeders[1], fp->third}, "frame+1 NW")) {
        continue;
      }
      const int alpha = fp->frame.alpha;
      const int beta = 1 - alpha;
      if (!frame(b, x, {2, 1}, {3, 0}, beta)) continue;
      bool ok = true;
      for (QId y : kQuadrants) {
        if (y == NW || y == x) continue;
        const auto ys = b.heads_in(y);
        std::vector<int> gamma;
        for (auto h : ys) gamma.push_back(h.first == 3 ? beta : alpha);
        ok = ok && mate_cycles(b, y, ys, gamma);
      }
      if (ok && close_cycle(b, cycle_c(alpha), {0, 1}, alpha ? "cycle C1" : "cycle C0") &&
          close_cycle(b, cycle_c(beta), {2, 3}, beta ? "cycle C1" : "cycle C0")) {
        return b;
      }
    }
  }
  return std::nullopt;
}

// Case A.3 ---------------------------------------------------------------------

// Pair indices touching both quadrants.
std::vector<int> between(const Pairing& q, QId a, QId c) {
  std::vector<int> out;
  for (int i = 0; i < 4; ++i) {
    const QId x = quadrant_of(q.pairs[i].s);
    const QId y = quadrant_of(q.pairs[i].t);
    if ((x == a && y == c) || (x == c && y == a)) out.push_back(i);
  }
  return out;
}

std::optional<Build> solve_a3_i(const Pairing& q) {
  const auto top = between(q, NW, NE);
  const auto bottom = between(q, SW, SE);
  if (top.size() != 3 || bottom.size() != 1) return std::nullopt;
  Build b(q, {oriented(q, top[0], NW), oriented(q, top[1], NW), oriented(q, top[2], NW),
              oriented(q, bottom[0], SW)});
  for (int side = 0; side < 2; ++side) {
    if (b.head(3, side).row == 4 && !step_across(b, {3, side}, 1, 0, "rows 5-6 mating")) {
      return std::nullopt;
    }
  }
  if (!complete(b, {0, 1, 2}, rows_region(1, 4), "3pp rows 1-4")) return std::nullopt;
  if (!complete(b, {3}, rows_region(5, 6), "rows 5-6")) return std::nullopt;
  return b;
}

// (II) with Q = NE and (III) with Q = SE.
std::optional<Build> solve_a3_ii_iii(const Pairing& q, QId qx) {
  const QId other = qx == NE ? SE : NE;  // hosts s4
  const auto two = between(q, NW, qx);
  const auto p3 = between(q, NW, SW);
  const auto p4 = between(q, qx, other);
  if (two.size() != 2 || p3.size() != 1 || p4.size() != 1) return std::nullopt;
  Build b(q, {oriented(q, two[0], NW), oriented(q, two[1], NW), oriented(q, p3[0], NW),
              oriented(q, p4[0], other)});
  if (!mate_distinct_a(b, quad_frame(NW), {{0, 0}, {1, 0}, {2, 0}})) return std::nullopt;
  if (!mate_distinct_a(b, quad_frame(qx), {{0, 1}, {1, 1}, {3, 1}})) return std::nullopt;
  if (!step_across(b, {2, 0}, 1, 0, "column extension")) return std::nullopt;
  if (!step_across(b, {3, 1}, qx == NE ? 1 : -1, 0, "column extension")) return std::nullopt;
  const EdgeSet strip = rows_region(3, 4);
  const EdgeSet rest = induced(qset(SW)) | induced(qset(other));
  Build saved = b;
  if (complete(b, {0, 1}, strip, "rows 3-4") && complete(b, {2}, induced(qset(SW)), "quadrant SW") &&
      complete(b, {3}, induced(qset(other)), "quadrant " + qname(other))) {
    return b;
  }
  b = saved;
  if (complete(b, {0, 1, 2, 3}, strip | rest, "rows 3-4 and quadrants")) return b;
  return std::nullopt;
}

bool in_col(const Build& b, const std::vector<Head>& hs, int col) {
  return std::all_of(hs.begin(), hs.end(), [&](Head h) { return b.head(h.first, h.second).col == col; });
}
bool in_row(const Build& b, const std::vector<Head>& hs, int row) {
  return std::all_of(hs.begin(), hs.end(), [&](Head h) { return b.head(h.first, h.second).row == row; });
}

// Projection in two quadrants with a common linked role l; the other
// heads go onto line A. Returns false if either side refuses.
bool project_pair(Build& b, const QuadFrame& f1, const std::vector<Head>& t1, const QuadFrame& f2,
                  const std::vector<Head>& t2, int i1, int i2) {
  const auto p1 = project_to_A(canon_heads(b, f1, t1), i1, lemma_opts(b, f1));
  if (p1.refused) return false;
  std::vector<Path> all1{p1.link};
  std::vector<Head> order1{t1[i1]};
  for (std::size_t i = 0, j = 0; i < t1.size(); ++i) {
    if (static_cast<int>(i) == i1) continue;
    order1.push_back(t1[i]);
    all1.push_back(p1.mates[j++]);
  }
  if (!extend_all(b, f1, order1, all1, "projection " + qname(f1.q))) return false;
  const auto p2 = project_to_A(canon_heads(b, f2, t2), i2, lemma_opts(b, f2));
  if (p2.refused) return false;
  std::vector<Path> all2{p2.link};
  std::vector<Head> order2{t2[i2]};
  for (std::size_t i = 0, j = 0; i < t2.size(); ++i) {
    if (static_cast<int>(i) == i2) continue;
    order2.push_back(t2[i]);
    all2.push_back(p2.mates[j++]);
  }
  return extend_all(b, f2, order2, all2, "projection " + qname(f2.q));
}

std::optional<Build> solve_a3_iv_v(const Pairing& q) {
  const auto two = between(q, NW, NE);
  const auto p3 = between(q, NW, SE);
  std::vector<int> p4;
  for (int i = 0; i < 4; ++i) {
    if (touches(q, i, NE) && !touches(q, i, NW)) p4.push_back(i);
  }
  if (two.size() != 2 || p3.size() != 1 || p4.size() != 1) return std::nullopt;
  const Build base(q, {oriented(q, two[0], NW), oriented(q, two[1], NW), oriented(q, p3[0], NW),
                       {p4[0], quadrant_of(q.pairs[p4[0]].t) != NE}});
  const auto fnw = quad_frame(NW);
  const auto fne = quad_frame(NE);
  const std::vector<Head> tnw{{0, 0}, {1, 0}, {2, 0}};
  const std::vector<Head> tne{{0, 1}, {1, 1}, {3, 1}};
  for (int l = 0; l < 2; ++l) {
    Build b = base;
    if (!project_pair(b, fnw, tnw, fne, tne, l, l)) continue;
    const int j = 1 - l;
    if (!b.close(l, line_path(b.head(l, 0), b.head(l, 1)), "link across (2,3)-(2,4)")) continue;
    if (!b.close(j, line_path(b.head(j, 0), b.head(j, 1)), "row 3")) continue;
    if (!step_across(b, {2, 0}, 1, 0, "column extension") ||
        !step_across(b, {3, 1}, 1, 0, "column extension")) {
      continue;
    }
    if (complete(b, {2, 3}, rows_region(4, 6), "rows 4-6")) return b;
  }
  // Both quadrants of the first exceptional shape: the terminals fill the
  // outer columns.
  Build b = base;
  if (!in_col(b, tnw, 1) || !in_col(b, tne, 6)) return std::nullopt;
  for (int k = 0; k < 2; ++k) {
    if (!step_across(b, {k, 0}, 0, 1, "row mating") || !step_across(b, {k, 1}, 0, -1, "row mating")) {
      return std::nullopt;
    }
  }
  if (!b.extend_to(2, 0, {4, 1}, "column mating") || !b.extend_to(3, 1, {4, 6}, "column mating")) {
    return std::nullopt;
  }
  if (!complete(b, {0, 1}, induced(box(1, 3, 2, 5)), "2pp rows 1-3 cols 2-5")) return std::nullopt;
  if (!complete(b, {2, 3}, rows_region(4, 6), "rows 4-6")) return std::nullopt;
  return b;
}

std::optional<Build> solve_a3_vi(const Pairing& q) {
  const auto two = between(q, NW, SE);
  const auto p3 = between(q, NW, NE);
  const auto p4 = between(q, SE, NE);
  if (two.size() != 2 || p3.size() != 1 || p4.size() != 1) return std::nullopt;
  const Build base(q, {oriented(q, two[0], NW), oriented(q, two[1], NW), oriented(q, p3[0], NW),
                       oriented(q, p4[0], NE)});
  const auto fnw = quad_frame(NW, true);
  const auto fse = quad_frame(SE, false);
  const std::vector<Head> tnw{{0, 0}, {1, 0}, {2, 0}};
  const std::vector<Head> tse{{0, 1}, {1, 1}, {3, 1}};
  for (int l = 0; l < 2; ++l) {
    Build b = base;
    if (!project_pair(b, fnw, tnw, fse, tse, l, l)) continue;
    const int j = 1 - l;
    const Vertex sj = b.head(j, 0);
    const Vertex tj = b.head(j, 1);
    const Path pj = joined(line_path(sj, {4, 3}), line_path({4, 3}, tj));
    if (!b.close(j, pj, "column 3 and row 4")) continue;
    if (!complete(b, {l}, induced(with(qset(SW), {{3, 2}, {5, 4}})), "through SW")) continue;
    if (!step_across(b, {2, 0}, 0, 1, "row extension") ||
        !step_across(b, {3, 1}, -1, 0, "column extension")) {
      continue;
    }
    if (complete(b, {2, 3}, induced(qset(NE)), "quadrant NE")) return b;
  }
  Build b = base;
  if (!in_row(b, tnw, 1) || !in_col(b, tse, 6)) return std::nullopt;
  if (!b.extend_to(2, 0, {1, 4}, "row mating") || !b.extend_to(3, 1, {3, 6}, "column mating")) {
    return std::nullopt;
  }
  if (!complete(b, {2, 3}, induced(qset(NE)), "quadrant NE")) return std::nullopt;
  const EdgeSet region = induced(qset(NW) | qset(SW) | qset(SE));
  if (!complete(b, {0, 1}, region, "through SW")) return std::nullopt;
  return b;
}

std::optional<Build> solve_a3_vii(const Pairing& q) {
  const auto three = between(q, NW, SE);
  const auto p4 = between(q, NE, SW);
  if (three.size() != 3 || p4.size() != 1) return std::nullopt;
  const auto fnw = quad_frame(NW);
  std::array<Vertex, 3> s{};
  for (int i = 0; i < 3; ++i) {
    s[i] = fnw.to_canon(oriented(q, three[i], NW).flip ? q.pairs[three[i]].t : q.pairs[three[i]].s);
  }
  const auto ch = framing_choose_pq(s, 1, Vertex{1, 3});
  if (!ch) return std::nullopt;
  Build b(q, {oriented(q, three[ch->p], NW), oriented(q, three[ch->q], NW),
              oriented(q, three[ch->r], NW), oriented(q, p4[0], NE)});
  if (!extend_all(b, fnw, {{0, 0}, {1, 0}, {2, 0}},
                  {ch->frame.feeders[0], ch->frame.feeders[1], ch->third}, "frame C1 + corner NW")) {
    return std::nullopt;
  }
  if (!b.extend_to(2, 0, {1, 4}, "row extension")) return std::nullopt;
  const auto fse = quad_frame(SE);
  const auto ts = canon_heads(b, fse, {{0, 1}, {1, 1}, {2, 1}});
  const auto fp = framing_two_plus_one(ts[0], ts[1], ts[2], std::nullopt, lemma_opts(b, fse));
  if (!fp) return std::nullopt;
  if (!extend_all(b, fse, {{0, 1}, {1, 1}, {2, 1}},
                  {fp->frame.feeders[0], fp->frame.feeders[1], fp->third}, "frame+1 SE")) {
    return std::nullopt;
  }
  if (fp->frame.alpha == 1) {
    if (!close_cycle(b, cycles().c1, {0, 1}, "cycle C1")) return std::nullopt;
    if (!frame(b, NE, {2, 0}, {3, 0}, 0)) return std::nullopt;
    if (!mate_cycles(b, SW, {{3, 1}}, {0})) return std::nullopt;
    if (!close_cycle(b, cycles().c0, {2, 3}, "cycle C0")) return std::nullopt;
    return b;
  }
  if (!close_cycle(b, cycle_d(), {0, 1}, "cycle D")) return std::nullopt;
  EdgeSet lane = induced(box(1, 1, 1, 6)) | induced(box(1, 6, 5, 5));
  lane |= cycle_edges(g6(), cycles().c1) & induced(qset(SE));
  if (!complete(b, {2}, lane, "row 1 and column 5")) return std::nullopt;
  if (!complete(b, {3}, g6().edges(), "residual")) return std::nullopt;
  return b;
}

// Case A.4 ---------------------------------------------------------------------

std::vector<int> projection_roles(const Build& b, const QuadFrame& f, const std::vector<Head>& hs) {
  std::vector<int> out;
  for (int i : projection_choices(canon_heads(b, f, hs), lemma_opts(b, f))) out.push_back(hs[i].first);
  return out;
}

int index_of(const std::vector<Head>& hs, int role) {
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (hs[i].first == role) return static_cast<int>(i);
  }
  return -1;
}

// Projection in NW only: role l linked to (2,3), the others onto row 3.
bool project_nw(Build& b, int l) {
  const auto f = quad_frame(NW);
  const std::vector<Head> t{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  const auto p = project_to_A(canon_heads(b, f, t), l, lemma_opts(b, f));
  if (p.refused) return false;
  std::vector<Head> order{{l, 0}};
  std::vector<Path> paths{p.link};
  for (int i = 0, j = 0; i < 4; ++i) {
    if (i == l) continue;
    order.emplace_back(i, 0);
    paths.push_back(p.mates[j++]);
  }
  return extend_all(b, f, order, paths, "projection NW");
}

EdgeSet outside_nw() { return g6().edges() - induced(qset(NW)); }

std::optional<Build> solve_a4_1(const Pairing& q, const QDiagram& d) {
  const Build base(q, {oriented(q, 0, NW), oriented(q, 1, NW), oriented(q, 2, NW), oriented(q, 3, NW)});
  const auto fnw = quad_frame(NW);
  const std::vector<Head> tnw{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  const auto nw_choices = projection_roles(base, fnw, tnw);
  for (QId qx : {NE, SE}) {
    if (d.degree(qx) < 3) continue;
    const auto fq = quad_frame(qx, qx == SE);
    const auto tq = base.heads_in(qx);
    const auto q_choices = projection_roles(base, fq, tq);
    for (int l : nw_choices) {
      if (std::find(q_choices.begin(), q_choices.end(), l) == q_choices.end()) continue;
      Build b0 = base;
      if (!project_nw(b0, l)) continue;
      const auto p = project_to_A(canon_heads(b0, fq, tq), index_of(tq, l), lemma_opts(b0, fq));
      if (p.refused) continue;
      std::vector<Head> order{{l, 1}};
      std::vector<Path> paths{p.link};
      for (std::size_t i = 0, j = 0; i < tq.size(); ++i) {
        if (tq[i].first == l) continue;
        order.push_back(tq[i]);
        paths.push_back(p.mates[j++]);
      }
      if (!extend_all(b0, fq, order, paths, "projection " + qname(qx))) continue;
      if (qx == NE) {
        if (!b0.close(l, line_path(b0.head(l, 0), b0.head(l, 1)), "link across (2,3)-(2,4)")) continue;
      } else if (!complete(b0, {l}, induced(with(qset(NE), {{2, 3}, {4, 5}})), "link through NE")) {
        continue;
      }
      for (int j : b0.open_roles()) {
        Build b = b0;
        const Vertex sj = b.head(j, 0);
        const Vertex tj = b.head(j, 1);
        Path pj;
        if (qx == NE && sj.row == 3 && tj.row == 3) pj = line_path(sj, tj);
        if (qx == SE && sj.row == 3 && tj.col == 4 && tj.row >= 4) {
          pj = joined(line_path(sj, {3, 4}), line_path({3, 4}, tj));
        }
        if (pj.vertices.empty() || !b.close(j, pj, qx == NE ? "row 3" : "row 3 and column 4")) continue;
        if (qx == NE) {
          if (complete(b, b.open_roles(), rows_region(4, 6) | verticals_below(3), "rows 4-6")) return b;
        } else {
          if (complete(b, b.open_roles(), outside_nw(), "outside NW")) return b;
        }
      }
    }
  }
  // Exceptional placements without a common projected role.
  Build b = base;
  if (d.degree(NE) == 3) {
    for (int k = 0; k < 4; ++k) {
      if (b.head(k, 1) == Vertex{3, 6} && !b.extend_to(k, 1, {4, 6}, "column mating")) return std::nullopt;
    }
    std::vector<int> top;
    std::vector<int> rest;
    for (int k = 0; k < 4; ++k) (quadrant_of(b.head(k, 1)) == NE ? top : rest).push_back(k);
    const VertexSet gp = box(4, 6, 1, 6) | box(1, 6, 1, 2);
    if (complete(b, rest, induced(gp), "2pp SW, SE and columns 1-2") &&
        complete(b, top, induced(box(1, 3, 3, 6)), "2pp rows 1-3 cols 3-6")) {
      return b;
    }
    return std::nullopt;
  }
  if (d.degree(SE) == 3) {
    std::vector<int> right;
    std::vector<int> rest;
    for (int k = 0; k < 4; ++k) (b.head(k, 1).col >= 5 ? right : rest).push_back(k);
    const VertexSet gp = box(1, 2, 3, 6) | box(3, 6, 5, 6);
    if (complete(b, right, induced(gp), "2pp rows 1-2 and columns 5-6") &&
        complete(b, rest, g6().edges() - induced(gp), "2pp complement")) {
      return b;
    }
    return std::nullopt;
  }
  if (d.degree(NE) == 4) {
    std::vector<int> row1;
    std::vector<int> rest;
    for (int k = 0; k < 4; ++k) {
      (b.head(k, 0).row == 1 && b.head(k, 1).row == 1 ? row1 : rest).push_back(k);
    }
    if (rest.size() != 2) return std::nullopt;
    for (int order = 0; order < 2; ++order) {
      Build c = b;
      bool ok = true;
      for (int i = 0; i < 2 && ok; ++i) {
        const int k = rest[i ^ order];
        const int row = 3 + i;
        for (int side = 0; side < 2 && ok; ++side) {
          ok = c.extend_to(k, side, {row, c.head(k, side).col}, "column mating");
        }
        ok = ok && c.close(k, line_path(c.head(k, 0), c.head(k, 1)), "row " + std::to_string(row));
      }
      if (ok && complete(c, row1, rows_region(1, 4), "rows 1-2")) return c;
    }
  }
  return std::nullopt;
}

std::optional<Build> solve_a4_23(const Pairing& q, bool a43) {
  const Build base(q, {oriented(q, 0, NW), oriented(q, 1, NW), oriented(q, 2, NW), oriented(q, 3, NW)});
  const auto fnw = quad_frame(NW);
  const std::vector<Head> tnw{{0, 0}, {1, 0}, {2, 0}, {3, 0}};
  const EdgeSet row3 = induced(box(3, 3, 1, 6));
  for (int l : projection_roles(base, fnw, tnw)) {
    const QId ql = quadrant_of(base.head(l, 1));
    if (ql == SW) continue;
    Build b = base;
    if (!project_nw(b, l)) continue;
    if (ql == NE) {
      if (!complete(b, {l}, induced(with(qset(NE), {{2, 3}})) - row3, "link in NE")) continue;
    } else if (!complete(b, {l}, induced(with(qset(NE) | qset(SE), {{2, 3}})) - row3, "link through NE")) {
      continue;
    }
    std::vector<Vertex> mates;
    for (int k : b.open_roles()) mates.push_back(b.head(k, 0));
    std::sort(mates.begin(), mates.end());
    const bool distinct = std::adjacent_find(mates.begin(), mates.end()) == mates.end();
    Build saved = b;
    if (distinct && complete(b, b.open_roles(), rows_region(3, 6), "3pp rows 3-6")) return b;
    b = saved;
    if (complete(b, b.open_roles(), rows_region(3, 6) | induced(qset(NE)), "row 3 and SW")) return b;
  }
  if (!a43) return std::nullopt;
  // The second exceptional shape in NW: one pair leaves along row 1.
  for (int k = 0; k < 4; ++k) {
    if (base.head(k, 0).row != 1 || quadrant_of(base.head(k, 1)) != NE) continue;
    Build b = base;
    const EdgeSet lane = induced(box(1, 1, 1, 4)) | induced(qset(NE));
    if (!complete(b, {k}, lane, "row 1 link")) continue;
    if (!mate_distinct_a(b, fnw, b.heads_in(NW))) continue;
    if (!mate_distinct_a(b, quad_frame(NE), b.heads_in(NE))) continue;
    if (complete(b, b.open_roles(), rows_region(3, 6), "3pp rows 3-6")) return b;
  }
  return std::nullopt;
}

// Case B -------------------------------------------------------------------------

// Loops inside NW first, then pairs with one terminal in NW, then the rest.
Roles b_roles(const Pairing& q, int& loops, int& singles) {
  Roles r{};
  int n = 0;
  loops = singles = 0;
  for (int i = 0; i < 4; ++i) {
    if (is_loop(q, i) && quadrant_of(q.pairs[i].s) == NW) {
      r[n++] = {i, false};
      ++loops;
    }
  }
  for (int i = 0; i < 4; ++i) {
    if (!is_loop(q, i) && touches(q, i, NW)) {
      r[n++] = oriented(q, i, NW);
      ++singles;
    }
  }
  for (int i = 0; i < 4; ++i) {
    if (!touches(q, i, NW)) r[n++] = {i, false};
  }
  return r;
}

// Extends every open head sitting on NW's boundary lines out of NW.
// Heads at (3,3) go down when `down_first`, else right.
bool leave_nw(Build& b, bool down_first) {
  for (auto [k, side] : b.heads_in(NW)) {
    const Vertex v = b.head(k, side);
    bool ok = false;
    if (v == Vertex{3, 3}) {
      ok = down_first ? step_across(b, {k, side}, 1, 0, "exit extension")
                      : step_across(b, {k, side}, 0, 1, "exit extension");
    } else if (v.row == 3) {
      ok = step_across(b, {k, side}, 1, 0, "exit extension");
    } else if (v.col == 3) {
      ok = step_across(b, {k, side}, 0, 1, "exit extension");
    }
    if (!ok) return false;
  }
  return true;
}

bool apply_escape(Build& b, const EscapePlan& plan, int np, const std::vector<int>& single_roles) {
  const auto f = quad_frame(NW);
  for (const auto& [i, path] : plan.linked) {
    if (!b.close(i, f.to_host(path), "escape NW")) return false;
  }
  for (const auto& [ti, path] : plan.mating) {
    const Head h = ti < 2 * np ? Head{ti / 2, ti % 2} : Head{single_roles[ti - 2 * np], 0};
    if (!b.extend(h.first, h.second, f.to_host(path), "escape NW")) return false;
  }
  return true;
}

std::optional<EscapePlan> escape(const Build& b, CrowdedVariant v, int np, const std::vector<int>& single_roles) {
  const auto f = quad_frame(NW);
  std::vector<TerminalPair> pairs;
  for (int k = 0; k < np; ++k) pairs.push_back({f.to_canon(b.head(k, 0)), f.to_canon(b.head(k, 1))});
  std::vector<Vertex> singles;
  for (int k : single_roles) singles.push_back(f.to_canon(b.head(k, 0)));
  return escape_crowded(v, pairs, singles, lemma_opts(b, f));
}

// After an escape with at most one exit on B: exits move to (4,1), (4,2),
// (1,4), (2,4); NE and SW mate onto the lines bounding rows/cols 3-6; the
// remaining pairs are routed in that P4 x P4.
bool finish_via_center(Build& b) {
  for (auto [k, side] : b.heads_in(NW)) {
    const Vertex v = b.head(k, side);
    if (v == Vertex{3, 3}) continue;
    bool ok = false;
    if (v.row == 3) ok = step_across(b, {k, side}, 1, 0, "exit extension");
    if (v.col == 3) ok = step_across(b, {k, side}, 0, 1, "exit extension");
    if (!ok) return false;
  }
  if (!mate_distinct_a(b, quad_frame(NE), b.heads_in(NE))) return false;
  if (!mate_distinct_a(b, quad_frame(SW, true), b.heads_in(SW))) return false;
  return complete(b, b.open_roles(), induced(box(3, 6, 3, 6)), "3pp rows 3-6 cols 3-6");
}

std::optional<Build> solve_b1(const Pairing& q) {
  int loops = 0;
  int singles = 0;
  const Build base(q, b_roles(q, loops, singles));
  std::vector<int> single_roles;
  for (int k = loops; k < loops + singles; ++k) single_roles.push_back(k);
  const auto plan = escape(base, CrowdedVariant::k78, loops, single_roles);
  if (!plan) return std::nullopt;
  for (bool down : {true, false}) {
    Build b = base;
    if (!apply_escape(b, *plan, loops, single_roles) || !leave_nw(b, down)) continue;
    if (complete(b, b.open_roles(), outside_nw(), "outside NW")) return b;
  }
  return std::nullopt;
}

std::optional<Build> solve_b2(const Pairing& q) {
  int loops = 0;
  int singles = 0;
  Build b(q, b_roles(q, loops, singles));
  if (loops == 3) {
    const EdgeSet h = induced(box(1, 4, 1, 4));
    if (!complete(b, {0, 1, 2}, h, "3pp rows 1-4 cols 1-4")) return std::nullopt;
    if (!complete(b, {3}, g6().edges() - h, "residual")) return std::nullopt;
    return b;
  }
  const auto plan = escape(b, CrowdedVariant::k6, 2, {2, 3});
  if (!plan || !apply_escape(b, *plan, 2, {2, 3}) || !finish_via_center(b)) return std::nullopt;
  return b;
}

std::optional<Build> solve_b3(const Pairing& q, const QDiagram& d) {
  int loops = 0;
  int singles = 0;
  const Build base(q, b_roles(q, loops, singles));
  if (loops == 2) {
    const EdgeSet h = induced(box(1, 4, 1, 4));
    const std::vector<Vertex> lpath{{1, 4}, {2, 4}, {3, 4}, {4, 4}, {4, 3}, {4, 2}, {4, 1}};
    for (Vertex star : lpath) {
      bool taken = false;
      for (const auto& tp : q.pairs) taken = taken || tp.s == star || tp.t == star;
      if (taken) continue;
      for (bool corner_down : {false, true}) {
        Build b = base;
        Pairing sub;
        sub.pairs = {{b.head(0, 0), b.head(0, 1)}, {b.head(1, 0), b.head(1, 1)}, {b.head(2, 0), star}};
        SolveOptions so;
        so.limits = g_step_limits;
        so.allowed_edges = h;
        const auto rep = find_weak_linkage(g6(), sub, so);
        if (rep.status != SolveStatus::kSat) break;
        if (!b.close(0, rep.linkage[0], "3pp rows 1-4 cols 1-4") ||
            !b.close(1, rep.linkage[1], "3pp rows 1-4 cols 1-4") ||
            !b.extend(2, 0, rep.linkage[2], "3pp rows 1-4 cols 1-4")) {
          continue;
        }
        bool ok = true;
        for (int k : {2, 3}) {
          for (int side = 0; side < 2 && ok; ++side) {
            const Vertex v = b.head(k, side);
            if (std::find(lpath.begin(), lpath.end(), v) == lpath.end()) continue;
            if (v == Vertex{4, 4}) {
              ok = step_across(b, {k, side}, corner_down ? 1 : 0, corner_down ? 0 : 1, "leave H");
            } else if (v.col == 4) {
              ok = step_across(b, {k, side}, 0, 1, "leave H");
            } else {
              ok = step_across(b, {k, side}, 1, 0, "leave H");
            }
          }
        }
        const EdgeSet outside = induced(g6().vertices() - box(1, 4, 1, 4));
        if (ok && complete(b, {2, 3}, outside, "outside rows 1-4 cols 1-4")) return b;
      }
    }
    return std::nullopt;
  }
  const auto plan = escape(base, CrowdedVariant::k5, 1, {1, 2, 3});
  if (!plan) return std::nullopt;
  Build b = base;
  if (!apply_escape(b, *plan, 1, {1, 2, 3})) return std::nullopt;
  if (d.degree(NE) <= 2) {
    if (!finish_via_center(b)) return std::nullopt;
    return b;
  }
  // Three terminals in NE: the exit on B (or at (3,3)) moves into NE and is
  // linked there; the other two exits go down.
  int r4 = -1;
  for (int k : {1, 2, 3}) {
    const Vertex v = b.head(k, 0);
    if (v.col == 3 && v.row < 3) r4 = k;
  }
  if (r4 < 0) {
    for (int k : {1, 2, 3}) {
      if (b.head(k, 0) == Vertex{3, 3}) r4 = k;
    }
  }
  if (r4 < 0) return std::nullopt;
  for (int k : {1, 2, 3}) {
    const bool right = k == r4;
    if (!step_across(b, {k, 0}, right ? 0 : 1, right ? 1 : 0, "exit extension")) return std::nullopt;
  }
  std::vector<Head> ms;
  for (int k : {1, 2, 3}) {
    if (k != r4) ms.emplace_back(k, 1);
  }
  if (!boundary(b, quad_frame(NE), r4, ms, {Line::kA, Line::kA})) return std::nullopt;
  for (auto h : ms) {
    if (!step_across(b, h, 1, 0, "column extension")) return std::nullopt;
  }
  if (!complete(b, b.open_roles(), rows_region(4, 6), "rows 4-6")) return std::nullopt;
  return b;
}

std::optional<Build> solve_b4_1(const Pairing& q) {
  int loops = 0;
  int singles = 0;
  Build b(q, b_roles(q, loops, singles));
  const auto f = quad_frame(NW);
  if (singles == 1) {
    const auto ts = canon_heads(b, f, {{0, 0}, {0, 1}, {1, 0}});
    const auto paths = exit_mating(Adjusted::kQ0, ExitVariant::kLinkAndMate, ts, lemma_opts(b, f));
    if (!paths || !b.close(0, f.to_host((*paths)[0]), "exit NW") ||
        !b.extend(1, 0, f.to_host((*paths)[1]), "exit NW")) {
      return std::nullopt;
    }
  } else if (!complete(b, {0}, induced(qset(NW)) - induced(box(3, 3, 1, 3)), "link in NW")) {
    return std::nullopt;
  }
  if (!mate_distinct_a(b, quad_frame(NE), b.heads_in(NE))) return std::nullopt;
  if (!complete(b, b.open_roles(), rows_region(3, 6), "3pp rows 3-6")) return std::nullopt;
  return b;
}

std::optional<Build> solve_b4_2(const Pairing& q) {
  int loops = 0;
  int singles = 0;
  const Build base(q, b_roles(q, loops, singles));
  if (loops == 2) {
    Build b = base;
    if (complete(b, {0, 1}, induced(qset(NW)), "2pp NW") &&
        complete(b, {2, 3}, outside_nw(), "outside NW")) {
      return b;
    }
    return std::nullopt;
  }
  const auto fnw = quad_frame(NW);
  const auto& p4 = q.pairs[base.roles()[3].pair];
  const QId q4 = quadrant_of(p4.s);
  if (quadrant_of(p4.t) == q4 && q4 == NE) {
    Build b = base;
    if (!boundary(b, fnw, 0, {{1, 0}, {2, 0}}, {Line::kA, Line::kA})) return std::nullopt;
    std::vector<Head> ms;
    for (auto h : b.heads_in(NE)) {
      if (h.first != 3) ms.push_back(h);
    }
    std::vector<Line> psi(ms.size(), Line::kA);
    if (!boundary(b, quad_frame(NE), 3, ms, psi)) return std::nullopt;
    for (int k : {1, 2}) {
      for (int side = 0; side < 2; ++side) {
        if (b.head(k, side).row == 3 && !step_across(b, {k, side}, 1, 0, "column extension")) {
          return std::nullopt;
        }
      }
    }
    if (!complete(b, {1, 2}, rows_region(4, 6), "rows 4-6")) return std::nullopt;
    return b;
  }
  if (quadrant_of(p4.t) == q4 && q4 == SE) {
    Build b = base;
    std::vector<Line> psi;
    for (int k : {1, 2}) psi.push_back(quadrant_of(b.head(k, 1)) == SW ? Line::kA : Line::kB);
    if (!boundary(b, fnw, 0, {{1, 0}, {2, 0}}, psi)) return std::nullopt;
    for (int i = 0; i < 2; ++i) {
      const bool down = psi[i] == Line::kA;
      if (!step_across(b, {i + 1, 0}, down ? 1 : 0, down ? 0 : 1, "boundary crossing")) return std::nullopt;
    }
    std::vector<Head> ms;
    for (auto h : b.heads_in(SE)) {
      if (h.first != 3) ms.push_back(h);
    }
    std::vector<Line> psi_se(ms.size(), Line::kA);
    if (!boundary(b, quad_frame(SE), 3, ms, psi_se)) return std::nullopt;
    for (auto h : ms) {
      if (!step_across(b, h, -1, 0, "boundary crossing")) return std::nullopt;
    }
    if (!complete(b, {1, 2}, induced(qset(NE)) | induced(qset(SW)), "quadrants NE and SW")) {
      return std::nullopt;
    }
    return b;
  }
  // pi4 spans two quadrants.
  for (Line l1 : {Line::kA, Line::kB}) {
    for (Line l2 : {Line::kA, Line::kB}) {
      Build b = base;
      if (!boundary(b, fnw, 0, {{1, 0}, {2, 0}}, {l1, l2})) continue;
      bool ok = true;
      for (int i = 0; i < 2 && ok; ++i) {
        const bool down = (i == 0 ? l1 : l2) == Line::kA;
        ok = step_across(b, {i + 1, 0}, down ? 1 : 0, down ? 0 : 1, "boundary crossing");
      }
      if (ok && complete(b, {1, 2, 3}, outside_nw(), "outside NW")) return b;
    }
  }
  return std::nullopt;
}

// Classification ----------------------------------------------------------------

// The case of an already normalized instance, or nullopt when q does not
// follow that case's conventions.
std::optional<Case> case_of(const Pairing& q) {
  const auto d = build_qdiagram(q);
  if (d.has_loop()) {
    if (d.loops(NW) == 0) return std::nullopt;
    for (QId x : kQuadrants) {
      if (d.loops(x) > 0 && d.degree(x) > d.degree(NW)) return std::nullopt;
    }
    const int n = d.degree(NW);
    if (n >= 7) return Case::kB1;
    if (n == 6) {
      if (d.loops(NW) == 2 && d.degree(NE) < d.degree(SW)) return std::nullopt;
      return Case::kB2;
    }
    if (n == 5) {
      if (d.loops(NW) == 1 && d.degree(NE) < d.degree(SW)) return std::nullopt;
      return Case::kB3;
    }
    if (n == 4) {
      if (d.loops(NW) == 1 && d.loops(SW) > 0) return std::nullopt;
      return Case::kB4_2;
    }
    return Case::kB4_1;
  }
  int mx = 0;
  int count3 = 0;
  for (QId x : kQuadrants) {
    mx = std::max(mx, d.degree(x));
    count3 += d.degree(x) == 3;
  }
  if (mx == 2) return Case::kA1;
  if (d.degree(NW) != mx) return std::nullopt;
  if (mx == 4) {
    if (d.degree(NE) < d.degree(SW)) return std::nullopt;
    if (d.degree(NE) >= 3 || d.degree(SE) >= 3) return Case::kA4_1;
    if (d.degree(SE) == 2 && d.degree(NE) == 1) return Case::kA4_2;
    return Case::kA4_3;
  }
  if (count3 == 1) return Case::kA2;
  if (d.degree(NE) == 3) {
    if (d.between(NW, NE) == 3) return Case::kA3_I;
    const bool nw_sw = d.between(NW, SW) == 1;
    const bool ne_se = d.between(NE, SE) == 1;
    if (nw_sw && ne_se) return Case::kA3_II;
    if (!nw_sw && ne_se) return Case::kA3_IV;
    if (!nw_sw && !ne_se && d.between(NE, SW) == 1) return Case::kA3_V;
    return std::nullopt;
  }
  if (d.degree(SE) == 3) {
    if (d.between(NW, SE) == 3) return Case::kA3_VII;
    const bool nw_sw = d.between(NW, SW) == 1;
    const bool se_ne = d.between(SE, NE) == 1;
    if (nw_sw && se_ne) return Case::kA3_III;
    if (!nw_sw && se_ne && d.between(NW, NE) == 1) return Case::kA3_VI;
    return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Build> run_case(Case c, const Pairing& q) {
  const auto d = build_qdiagram(q);
  switch (c) {
    case Case::kA1: return solve_a1(q);
    case Case::kA2: return solve_a2(q);
    case Case::kA3_I: return solve_a3_i(q);
    case Case::kA3_II: return solve_a3_ii_iii(q, NE);
    case Case::kA3_III: return solve_a3_ii_iii(q, SE);
    case Case::kA3_IV:
    case Case::kA3_V: return solve_a3_iv_v(q);
    case Case::kA3_VI: return solve_a3_vi(q);
    case Case::kA3_VII: return solve_a3_vii(q);
    case Case::kA4_1: return solve_a4_1(q, d);
    case Case::kA4_2: return solve_a4_23(q, false);
    case Case::kA4_3: return solve_a4_23(q, true);
    case Case::kB1: return solve_b1(q);
    case Case::kB2: return solve_b2(q);
    case Case::kB3: return solve_b3(q, d);
    case Case::kB4_1: return solve_b4_1(q);
    case Case::kB4_2: return solve_b4_2(q);
  }
  return std::nullopt;
}

void check_instance(const Pairing& p) {
  if (p.size() != 4) throw InputError("the constructive solver takes exactly 4 pairs");
  check_pairing(g6(), p);
}

}  // namespace

std::string case_name(Case c) {
  switch (c) {
    case Case::kA1: return "A1";
    case Case::kA2: return "A2";
    case Case::kA3_I: return "A3(I)";
    case Case::kA3_II: return "A3(II)";
    case Case::kA3_III: return "A3(III)";
    case Case::kA3_IV: return "A3(IV)";
    case Case::kA3_V: return "A3(V)";
    case Case::kA3_VI: return "A3(VI)";
    case Case::kA3_VII: return "A3(VII)";
    case Case::kA4_1: return "A4_1";
    case Case::kA4_2: return "A4_2";
    case Case::kA4_3: return "A4_3";
    case Case::kB1: return "B1";
    case Case::kB2: return "B2";
    case Case::kB3: return "B3";
    case Case::kB4_1: return "B4_1";
    case Case::kB4_2: return "B4_2";
  }
  return "?";
}

std::string case_name(const CaseLabel& label) { return case_name(label.which); }

CaseLabel classify(const Pairing& p) {
  check_instance(p);
  for (Symmetry s : kAllSymmetries) {
    if (const auto c = case_of(apply_symmetry(s, p, 6, 6))) return {*c, s};
  }
  // Unreachable for valid input: every diagram has a normalization.
  throw std::logic_error("classify: no normalization matched");
}

ConstructiveResult solve_constructive(const Pairing& p, const SolveLimits& limits) {
  ConstructiveResult res;
  res.label = classify(p);
  const std::string name = case_name(res.label);
  for (Symmetry s : kAllSymmetries) {
    const Pairing q = apply_symmetry(s, p, 6, 6);
    const auto c = case_of(q);
    if (!c || *c != res.label.which) continue;
    std::optional<Build> b;
    try {
      b = run_case(*c, q);
    } catch (const std::exception& e) {
      res.failure = std::string("step error: ") + e.what();
      continue;
    }
    if (!b) {
      res.failure = "no construction under " + std::string(symmetry_name(s));
      continue;
    }
    const Symmetry back = inverse(s);
    Linkage out(4);
    for (int k = 0; k < 4; ++k) {
      Path path = b->role_path(k);
      if (b->roles()[k].flip) path = reversed(std::move(path));
      out[b->roles()[k].pair] = apply_symmetry(back, path, 6, 6);
    }
    if (!validate_linkage(g6(), p, out).empty()) {
      res.failure = "construction produced an invalid linkage";
      continue;
    }
    res.status = SolveStatus::kSat;
    res.label.symmetry = s;
    res.linkage = std::move(out);
    res.failure.clear();
    for (const auto& step : b->trace()) {
      TraceStep t{name, step.step, {}};
      for (const auto& [k, path] : step.paths) {
        t.paths.emplace_back(b->roles()[k].pair, apply_symmetry(back, path, 6, 6));
      }
      res.trace.push_back(std::move(t));
    }
    return res;
  }
  SolveOptions so;
  so.limits = limits;
  const auto rep = find_weak_linkage(g6(), p, so);
  res.fallback = true;
  res.status = rep.status;
  if (rep.status == SolveStatus::kSat) {
    res.linkage = rep.linkage;
    TraceStep t{name, "oracle fallback", {}};
    for (int i = 0; i < static_cast<int>(rep.linkage.size()); ++i) t.paths.emplace_back(i, rep.linkage[i]);
    res.trace.push_back(std::move(t));
  }
  return res;
}

Linkage route_in_subgrid_3pp(const GridGraph& sub, const Pairing& p) {
  const int shorter = std::min(sub.rows(), sub.cols());
  const int longer = std::max(sub.rows(), sub.cols());
  if (shorter != 4 || longer < 4 || sub.edge_count() != sub.full_edge_count() ||
      sub.vertex_count() != sub.rows() * sub.cols()) {
    throw InputError("route_in_subgrid_3pp needs an unmodified P4 x Pk grid with k >= 4");
  }
  if (p.size() != 3) throw InputError("route_in_subgrid_3pp routes exactly three pairs");
  check_pairing(sub, p);
  const auto rep = find_weak_linkage(sub, p);
  if (rep.status == SolveStatus::kSat) return rep.linkage;
  if (rep.status == SolveStatus::kUnsat) {
    throw LemmaViolation("three pairs without a linkage in a P4 x Pk grid");
  }
  throw LemmaViolation("3-pair routing budget exhausted");
}

Pairing counterexample_instance(Vertex t1, Vertex t5) {
  Pairing p;
  p.pairs = {{{1, 1}, t1}, {{2, 1}, {1, 3}}, {{3, 1}, {1, 2}}, {{3, 2}, {2, 3}}, {{2, 2}, t5}};
  check_pairing(g6(), p);
  return p;
}

}  // namespace gridlink
