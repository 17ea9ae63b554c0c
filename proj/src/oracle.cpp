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

#include "gridlink/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <deque>
#include <unordered_map>
#include <vector>

namespace gridlink {

std::string_view status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::kSat: return "SAT";
    case SolveStatus::kUnsat: return "UNSAT";
    case SolveStatus::kTimeout: return "TIMEOUT";
  }
  return "?";
}

std::string_view engine_name(OracleEngine e) {
  switch (e) {
    case OracleEngine::kAuto: return "auto";
    case OracleEngine::kSearch: return "search";
    case OracleEngine::kParity: return "parity";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Budget {
  std::uint64_t max_nodes;
  Clock::time_point deadline;
  std::uint64_t nodes = 0;
  bool exhausted = false;

  // Returns false once the budget is spent.
  bool tick() {
    ++nodes;
    if (nodes > max_nodes) exhausted = true;
    if ((nodes & 4095) == 0 && Clock::now() > deadline) exhausted = true;
    return !exhausted;
  }
};

struct Arc {
  int edge;
  int to;
};

// Path of one pair restricted to vertex ids; `from_t` when grown from t.
struct Route {
  std::vector<int> ids;
  bool from_t = false;
};

Path to_path(const GridGraph& g, const Route& r) {
  Path p;
  for (int id : r.ids) p.vertices.push_back(g.vertex(id));
  if (r.from_t) std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

class Searcher {
 public:
  Searcher(const GridGraph& g, const EdgeSet& allowed, const std::vector<TerminalPair>& pairs,
           bool pruning, Budget& budget)
      : g_(g), pruning_(pruning), budget_(budget) {
    const int n = g.rows() * g.cols();
    adj_.assign(n, {});
    nbr_.assign(n, VertexSet{});
    free_deg_.assign(n, 0);
    allowed.for_each([&](int e) {
      const auto [u, v] = g.endpoints(e);
      const int a = g.id(u);
      const int b = g.id(v);
      adj_[a].push_back({e, b});
      adj_[b].push_back({e, a});
      nbr_[a].set(b);
      nbr_[b].set(a);
      ++free_deg_[a];
      ++free_deg_[b];
    });
    for (const auto& pr : pairs) {
      State st;
      int s = g.id(pr.s);
      int t = g.id(pr.t);
      // Grow from the more constrained end.
      st.route.from_t = free_deg_[t] < free_deg_[s];
      if (st.route.from_t) std::swap(s, t);
      st.head = s;
      st.target = t;
      st.visited.set(s);
      st.route.ids.push_back(s);
      states_.push_back(std::move(st));
    }
  }

  bool run() { return dfs(); }
  bool exhausted() const { return budget_.exhausted; }

  Linkage linkage() const {
    Linkage out;
    for (const auto& st : states_) out.push_back(to_path(g_, st.route));
    return out;
  }

 private:
  struct State {
    int head = 0;
    int target = 0;
    VertexSet visited;
    bool done = false;
    Route route;
  };

  void take(int e, int a, int b) {
    used_.set(e);
    --free_deg_[a];
    --free_deg_[b];
    refresh(a, b);
  }
  void give(int e, int a, int b) {
    used_.reset(e);
    ++free_deg_[a];
    ++free_deg_[b];
    nbr_[a].set(b);
    nbr_[b].set(a);
  }
  void refresh(int a, int b) {
    for (const auto& arc : adj_[a]) {
      if (arc.to == b && !used_.test(arc.edge)) return;
    }
    nbr_[a].reset(b);
    nbr_[b].reset(a);
  }

  bool reachable(const State& st) const {
    VertexSet reach;
    reach.set(st.head);
    VertexSet frontier = reach;
    while (frontier.any()) {
      VertexSet next;
      frontier.for_each([&](int x) { next |= nbr_[x]; });
      next -= reach;
      next -= st.visited;
      if (next.test(st.target)) return true;
      reach |= next;
      frontier = next;
    }
    return false;
  }

  bool feasible() {
    demand_.assign(free_deg_.size(), 0);
    for (const auto& st : states_) {
      if (st.done) continue;
      if (++demand_[st.head] > free_deg_[st.head]) return false;
      if (++demand_[st.target] > free_deg_[st.target]) return false;
    }
    for (const auto& st : states_) {
      if (!st.done && !reachable(st)) return false;
    }
    return true;
  }

  int move_count(const State& st) const {
    int m = 0;
    for (const auto& arc : adj_[st.head]) {
      if (!used_.test(arc.edge) && !st.visited.test(arc.to)) ++m;
    }
    return m;
  }

  // BFS layer index from `target` over free edges, for each vertex in want.
  std::vector<int> distances(int target) const {
    std::vector<int> dist(free_deg_.size(), 1 << 20);
    VertexSet seen;
    seen.set(target);
    VertexSet frontier = seen;
    int d = 0;
    while (frontier.any()) {
      frontier.for_each([&](int x) { dist[x] = d; });
      VertexSet next;
      frontier.for_each([&](int x) { next |= nbr_[x]; });
      next -= seen;
      seen |= next;
      frontier = next;
      ++d;
    }
    return dist;
  }

  bool dfs() {
    if (!budget_.tick()) return false;
    if (pruning_ && !feasible()) return false;
    int pick = -1;
    int best = 1 << 20;
    for (int i = 0; i < static_cast<int>(states_.size()); ++i) {
      if (states_[i].done) continue;
      const int m = move_count(states_[i]);
      if (m < best) {
        best = m;
        pick = i;
      }
    }
    if (pick < 0) return true;
    if (best == 0) return false;

    State& st = states_[pick];
    const auto dist = distances(st.target);
    std::vector<Arc> moves;
    for (const auto& arc : adj_[st.head]) {
      if (!used_.test(arc.edge) && !st.visited.test(arc.to)) moves.push_back(arc);
    }
    std::sort(moves.begin(), moves.end(), [&](const Arc& x, const Arc& y) {
      if (dist[x.to] != dist[y.to]) return dist[x.to] < dist[y.to];
      if (x.to != y.to) return x.to < y.to;
      return x.edge < y.edge;
    });

    const int head = st.head;
    for (const auto& mv : moves) {
      State& cur = states_[pick];
      take(mv.edge, head, mv.to);
      cur.head = mv.to;
      cur.route.ids.push_back(mv.to);
      const bool arrived = mv.to == cur.target;
      if (arrived) {
        cur.done = true;
      } else {
        cur.visited.set(mv.to);
      }
      if (dfs()) return true;
      State& back = states_[pick];
      if (arrived) {
        back.done = false;
      } else {
        back.visited.reset(mv.to);
      }
      back.route.ids.pop_back();
      back.head = head;
      give(mv.edge, head, mv.to);
      if (budget_.exhausted) return false;
    }
    return false;
  }

  const GridGraph& g_;
  bool pruning_;
  Budget& budget_;
  std::vector<std::vector<Arc>> adj_;
  std::vector<VertexSet> nbr_;
  std::vector<int> free_deg_;
  std::vector<int> demand_;
  EdgeSet used_;
  std::vector<State> states_;
};

// Row sweep over parity vectors; see the header comment.
class Sweeper {
 public:
  static bool supported(const GridGraph& g, int k) {
    if (!g.merges().empty() || k > 15) return false;
    const int width = std::min(g.rows(), g.cols());
    return width * k <= 64;
  }

  Sweeper(const GridGraph& g, const EdgeSet& allowed, const std::vector<TerminalPair>& pairs,
          Budget& budget)
      : g_(g), pairs_(pairs), budget_(budget) {
    transposed_ = g.cols() > g.rows();
    height_ = transposed_ ? g.cols() : g.rows();
    width_ = transposed_ ? g.rows() : g.cols();
    k_ = static_cast<int>(pairs.size());
    n_ = height_ * width_;
    req_.assign(n_ + width_ + 1, 0);
    right_.assign(n_, -1);
    down_.assign(n_, -1);
    for (int p = 0; p < n_; ++p) {
      const int r = p / width_;
      const int c = p % width_;
      if (c + 1 < width_) right_[p] = edge(allowed, real(r, c), real(r, c + 1));
      if (r + 1 < height_) down_[p] = edge(allowed, real(r, c), real(r + 1, c));
    }
    for (int i = 0; i < k_; ++i) {
      req_[pos(pairs[i].s)] ^= 1u << i;
      req_[pos(pairs[i].t)] ^= 1u << i;
    }
  }

  // Returns true with labels filled when a labeling exists.
  bool run() {
    const std::uint64_t slot_mask = (std::uint64_t{1} << k_) - 1;
    std::uint64_t init = 0;
    for (int j = 0; j < width_; ++j) init |= std::uint64_t{req_[j]} << (j * k_);
    layers_.clear();
    layers_.push_back({{init, 0, 0, 0}});
    for (int p = 0; p < n_; ++p) {
      const auto& layer = layers_.back();
      std::vector<Entry> next;
      std::unordered_map<std::uint64_t, std::uint32_t> index;
      index.reserve(layer.size() * 2);
      const bool has_r = right_[p] >= 0;
      const bool has_d = down_[p] >= 0;
      const unsigned incoming = p + width_ < n_ ? req_[p + width_] : 0;
      for (std::uint32_t si = 0; si < layer.size(); ++si) {
        if (!budget_.tick()) return false;
        const std::uint64_t st = layer[si].state;
        const unsigned cur = static_cast<unsigned>(st & slot_mask);
        const std::uint64_t rest = width_ > 1 ? st >> k_ : 0;
        auto emit = [&](int a, int b) {
          std::uint64_t ns = rest ^ bit(a);
          const unsigned in = incoming ^ static_cast<unsigned>(bit(b));
          if (std::popcount(in) > ends(p + width_, true)) return;
          ns |= std::uint64_t{in} << ((width_ - 1) * k_);
          if (width_ == 1) ns = in;
          if (p + 1 < n_ && std::popcount(static_cast<unsigned>(ns & slot_mask)) > ends(p + 1, false)) {
            return;
          }
          auto [it, fresh] = index.try_emplace(ns, static_cast<std::uint32_t>(next.size()));
          if (fresh) {
            next.push_back({ns, si, static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)});
          }
        };
        const int pc = std::popcount(cur);
        if (pc == 0) {
          emit(0, 0);
          if (has_r && has_d) {
            for (int l = 1; l <= k_; ++l) emit(l, l);
          }
        } else if (pc == 1) {
          const int l = std::countr_zero(cur) + 1;
          if (has_r) emit(l, 0);
          if (has_d) emit(0, l);
        } else if (pc == 2 && has_r && has_d) {
          const int l1 = std::countr_zero(cur) + 1;
          const int l2 = std::countr_zero(cur & (cur - 1)) + 1;
          emit(l1, l2);
          emit(l2, l1);
        }
      }
      if (next.empty()) {
        layers_.push_back({});
        return false;
      }
      layers_.push_back(std::move(next));
    }
    return true;
  }

  Linkage linkage() const {
    // Walk back from the (unique, all-zero) final state.
    std::vector<int> label(g_.full_edge_count(), 0);
    std::uint32_t idx = 0;
    for (int p = n_ - 1; p >= 0; --p) {
      const Entry& e = layers_[p + 1][idx];
      if (right_[p] >= 0) label[right_[p]] = e.a;
      if (down_[p] >= 0) label[down_[p]] = e.b;
      idx = e.parent;
    }
    Linkage out;
    for (int i = 0; i < k_; ++i) out.push_back(trace(label, i + 1, pairs_[i]));
    return out;
  }

 private:
  struct Entry {
    std::uint64_t state;
    std::uint32_t parent;
    std::uint8_t a;
    std::uint8_t b;
  };

  static std::uint64_t bit(int label) { return label == 0 ? 0 : std::uint64_t{1} << (label - 1); }

  Vertex real(int r, int c) const {
    return transposed_ ? Vertex{c + 1, r + 1} : Vertex{r + 1, c + 1};
  }
  int pos(Vertex v) const {
    return transposed_ ? (v.col - 1) * width_ + (v.row - 1) : (v.row - 1) * width_ + (v.col - 1);
  }
  int edge(const EdgeSet& allowed, Vertex u, Vertex v) const {
    const auto e = g_.edge_between(u, v);
    return e && allowed.test(*e) ? *e : -1;
  }
  // Edges of position p still unassigned when p enters the window; the left
  // edge counts only for a vertex that has just been added.
  int ends(int p, bool with_left) const {
    if (p >= n_) return 0;
    int m = (right_[p] >= 0) + (down_[p] >= 0);
    if (with_left && p % width_ > 0 && right_[p - 1] >= 0) ++m;
    return m;
  }

  Path trace(const std::vector<int>& label, int l, const TerminalPair& pr) const {
    const int n = g_.rows() * g_.cols();
    std::vector<int> prev(n, -2);
    std::deque<int> q;
    const int s = g_.id(pr.s);
    const int t = g_.id(pr.t);
    prev[s] = -1;
    q.push_back(s);
    while (!q.empty() && prev[t] == -2) {
      const int x = q.front();
      q.pop_front();
      for (const auto& inc : g_.incident(x)) {
        if (label[inc.edge] == l && prev[inc.neighbor] == -2) {
          prev[inc.neighbor] = x;
          q.push_back(inc.neighbor);
        }
      }
    }
    Path p;
    for (int x = t; x != -1; x = prev[x]) p.vertices.push_back(g_.vertex(x));
    std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
  }

  const GridGraph& g_;
  std::vector<TerminalPair> pairs_;
  Budget& budget_;
  bool transposed_ = false;
  int height_ = 0;
  int width_ = 0;
  int k_ = 0;
  int n_ = 0;
  std::vector<unsigned> req_;
  std::vector<int> right_;
  std::vector<int> down_;
  std::vector<std::vector<Entry>> layers_;
};

}  // namespace

SolveReport find_weak_linkage(const GridGraph& g, const Pairing& p, const SolveOptions& opt) {
  check_pairing(g, p, opt.allow_coincident);
  const auto start = Clock::now();
  SolveReport rep;
  rep.limits = opt.limits;
  EdgeSet allowed = g.edges();
  if (opt.allowed_edges) allowed &= *opt.allowed_edges;

  std::vector<TerminalPair> open;
  std::vector<int> open_index;
  for (int i = 0; i < p.size(); ++i) {
    if (p.pairs[i].s != p.pairs[i].t) {
      open.push_back(p.pairs[i]);
      open_index.push_back(i);
    }
  }
  auto finish = [&](SolveStatus status, const Linkage& partial) {
    rep.status = status;
    if (status == SolveStatus::kSat) {
      rep.linkage.assign(p.pairs.size(), Path{});
      for (int i = 0; i < p.size(); ++i) rep.linkage[i].vertices = {p.pairs[i].s};
      for (std::size_t j = 0; j < open.size(); ++j) rep.linkage[open_index[j]] = partial[j];
    }
    rep.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return rep;
  };

  const auto deadline =
      start + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(
                  std::max(0.0, opt.limits.max_seconds)));
  const bool parity_ok = Sweeper::supported(g, static_cast<int>(open.size()));
  OracleEngine engine = opt.engine;
  if (engine == OracleEngine::kParity && !parity_ok) engine = OracleEngine::kSearch;

  if (engine == OracleEngine::kAuto || engine == OracleEngine::kSearch) {
    Budget budget{opt.limits.max_nodes, deadline};
    if (engine == OracleEngine::kAuto && parity_ok) {
      budget.max_nodes = std::min(opt.limits.max_nodes, opt.auto_search_nodes);
    }
    Searcher s(g, allowed, open, opt.pruning, budget);
    const bool ok = s.run();
    rep.nodes += budget.nodes;
    rep.engine_used = OracleEngine::kSearch;
    if (ok) return finish(SolveStatus::kSat, s.linkage());
    if (!budget.exhausted) return finish(SolveStatus::kUnsat, {});
    if (engine == OracleEngine::kSearch || !parity_ok) return finish(SolveStatus::kTimeout, {});
  }

  Budget budget{opt.limits.max_nodes > rep.nodes ? opt.limits.max_nodes - rep.nodes : 0,
                deadline};
  Sweeper sw(g, allowed, open, budget);
  const bool ok = sw.run();
  rep.nodes += budget.nodes;
  rep.engine_used = OracleEngine::kParity;
  if (ok) return finish(SolveStatus::kSat, sw.linkage());
  return finish(budget.exhausted ? SolveStatus::kTimeout : SolveStatus::kUnsat, {});
}

Weak2Result check_weakly_2_linked(const GridGraph& g, const SolveLimits& limits) {
  std::vector<Vertex> vs;
  g.vertices().for_each([&](int id) { vs.push_back(g.vertex(id)); });
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i; j < vs.size(); ++j) pairs.emplace_back(vs[i], vs[j]);
  }
  Weak2Result out;
  SolveOptions opt;
  opt.limits = limits;
  opt.allow_coincident = true;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a; b < pairs.size(); ++b) {
      Pairing p{{{pairs[a].first, pairs[a].second}, {pairs[b].first, pairs[b].second}}};
      const auto rep = find_weak_linkage(g, p, opt);
      ++out.quadruples;
      if (rep.status == SolveStatus::kTimeout) out.complete = false;
      if (rep.status == SolveStatus::kUnsat && out.linked) {
        out.linked = false;
        out.failure = std::array<Vertex, 4>{pairs[a].first, pairs[a].second, pairs[b].first,
                                            pairs[b].second};
        return out;
      }
    }
  }
  return out;
}

}  // namespace gridlink
