#include "matchflip/oracle.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <string>

#include "matchflip/error.hpp"

namespace matchflip {

std::size_t StateKeyHash::operator()(const StateKey& k) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t w : k) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

StateKey state_key(const Graph& g, const Matching& m) {
  StateKey key((g.m() + 63) / 64, 0);
  for (int v = 0; v < m.n(); ++v) {
    int w = m.mate(v);
    if (w <= v) continue;
    auto id = g.edge_id(v, w);
    if (!id) fail(ErrorCode::EdgeNotInGraph, "{" + std::to_string(v) + "," + std::to_string(w) + "}");
    key[static_cast<std::size_t>(*id) / 64] |= std::uint64_t{1} << (*id % 64);
  }
  return key;
}

Matching state_matching(const Graph& g, const StateKey& key) {
  Matching m(g.n());
  for (std::size_t word = 0; word < key.size(); ++word) {
    std::uint64_t bits = key[word];
    while (bits) {
      int b = __builtin_ctzll(bits);
      bits &= bits - 1;
      const Edge& e = g.edge(word * 64 + static_cast<std::size_t>(b));
      m.add(e.u, e.v);
    }
  }
  return m;
}

std::vector<Matching> enumerate_matchings(const Graph& g, MatchingTarget target, std::size_t budget) {
  const int n = g.n();
  std::vector<Matching> out;
  if (target.perfect && n % 2 != 0) return out;
  const int want = target.perfect ? n / 2 : target.size;
  if (want < 0 || 2 * want > n) return out;

  Matching cur(n);
  // Vertices are decided in increasing order: each is either matched to a
  // later undecided neighbour or left free (only if enough vertices remain).
  std::vector<char> decided(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto&& self, int v, int free_left) -> void {
    while (v < n && decided[v]) ++v;
    if (cur.size() == want) {
      out.push_back(cur);
      if (out.size() > budget) fail(ErrorCode::BudgetExceeded, "more than " + std::to_string(budget) + " matchings");
      return;
    }
    if (v >= n) return;
    decided[v] = 1;
    for (int w : g.neighbors(v)) {
      if (w < v || decided[w]) continue;
      decided[w] = 1;
      cur.add(v, w);
      self(self, v + 1, free_left);
      cur.remove(v, w);
      decided[w] = 0;
    }
    if (free_left > 0) self(self, v + 1, free_left - 1);
    decided[v] = 0;
  };
  rec(rec, 0, n - 2 * want);
  std::sort(out.begin(), out.end(), [](const Matching& a, const Matching& b) { return a.edges() < b.edges(); });
  return out;
}

std::vector<Flip> alternating_cycles(const Graph& g, const Matching& m, int k) {
  std::vector<Flip> out;
  std::vector<int> path;
  std::vector<char> on_path(static_cast<std::size_t>(g.n()), 0);
  // Each cycle is found once: from its smallest vertex c0, first along the
  // matched edge c0 c1, then alternately along unmatched and matched edges.
  auto extend = [&](auto&& self, int c0) -> void {
    int last = path.back();
    if (static_cast<int>(path.size()) == k) {
      if (g.has_edge(last, c0)) out.push_back(make_flip(path));
      return;
    }
    for (int x : g.neighbors(last)) {
      if (x <= c0 || on_path[x] || m.contains(last, x)) continue;
      int y = m.mate(x);
      if (y < 0 || y <= c0 || on_path[y]) continue;
      path.push_back(x);
      path.push_back(y);
      on_path[x] = on_path[y] = 1;
      self(self, c0);
      on_path[x] = on_path[y] = 0;
      path.pop_back();
      path.pop_back();
    }
  };
  for (int c0 = 0; c0 < g.n(); ++c0) {
    int c1 = m.mate(c0);
    if (c1 < c0) continue;
    path = {c0, c1};
    on_path[c0] = on_path[c1] = 1;
    extend(extend, c0);
    on_path[c0] = on_path[c1] = 0;
  }
  return out;
}

namespace {

constexpr int kMaxOracleK = 12;

/// Precomputed 4-cycles of g, each once, as (a,b,c,d).
struct FourCycles {
  std::vector<std::array<int, 4>> cycles;

  explicit FourCycles(const Graph& g) {
    // a is the smallest vertex, b < d are its cycle neighbours, c opposite.
    for (int a = 0; a < g.n(); ++a) {
      auto na = g.neighbors(a);
      for (std::size_t i = 0; i < na.size(); ++i) {
        int b = na[i];
        if (b < a) continue;
        for (std::size_t j = i + 1; j < na.size(); ++j) {
          int d = na[j];
          for (int c : g.neighbors(b))
            if (c > a && c != d && g.has_edge(c, d)) cycles.push_back({a, b, c, d});
        }
      }
    }
  }
};

class MoveGenerator {
 public:
  MoveGenerator(const Graph& g, const Mode& mode) : g_(g), mode_(mode) {
    if (mode.kind == Mode::Kind::KFlip && mode.k > kMaxOracleK)
      fail(ErrorCode::InvalidArgument, "oracle supports k <= " + std::to_string(kMaxOracleK));
    if (mode.kind != Mode::Kind::KFlip || mode.k == 4) four_ = FourCycles(g).cycles;
  }

  template <typename Visit>
  void for_each(const Matching& m, Visit&& visit) const {
    if (mode_.kind == Mode::Kind::KFlip && mode_.k != 4) {
      for (const Flip& f : alternating_cycles(g_, m, mode_.k)) visit(Move{f});
      return;
    }
    for (const auto& [a, b, c, d] : four_) {
      if ((m.contains(a, b) && m.contains(c, d)) || (m.contains(b, c) && m.contains(d, a)))
        visit(Move{Flip{{a, b, c, d}}});
    }
    if (mode_.kind != Mode::Kind::FlipSlide) return;
    for (int u = 0; u < g_.n(); ++u) {
      int v = m.mate(u);
      if (v < 0) continue;
      // Slide uv -> vw: pivot v keeps its edge, u is released.
      for (int w : g_.neighbors(v))
        if (w != u && !m.covers(w)) visit(Move{make_slide(u, v, w)});
    }
  }

 private:
  const Graph& g_;
  Mode mode_;
  std::vector<std::array<int, 4>> four_;
};

}  // namespace

std::vector<Matching> neighbors(const Graph& g, const Matching& m, const Mode& mode) {
  MoveGenerator gen(g, mode);
  std::vector<Matching> out;
  gen.for_each(m, [&](const Move& mv) { out.push_back(apply_move(g, m, mv)); });
  return out;
}

Reachability reachable(const Graph& g, const Matching& m1, const Matching& m2, const Mode& mode, bool want_path,
                       std::size_t budget) {
  if (m1.size() != m2.size())
    fail(ErrorCode::SizeMismatch, std::to_string(m1.size()) + " vs " + std::to_string(m2.size()));
  MoveGenerator gen(g, mode);
  const StateKey goal = state_key(g, m2);

  std::vector<StateKey> keys;
  std::vector<int> parent;
  std::vector<std::size_t> dist;
  std::unordered_map<StateKey, int, StateKeyHash> seen;
  keys.push_back(state_key(g, m1));
  parent.push_back(-1);
  dist.push_back(0);
  seen.emplace(keys[0], 0);

  Reachability r;
  int found = keys[0] == goal ? 0 : -1;
  for (std::size_t head = 0; head < keys.size() && found < 0; ++head) {
    Matching cur = state_matching(g, keys[head]);
    gen.for_each(cur, [&](const Move& mv) {
      if (found >= 0) return;
      StateKey next = state_key(g, apply_move(g, cur, mv));
      if (seen.count(next)) return;
      int id = static_cast<int>(keys.size());
      seen.emplace(next, id);
      bool hit = next == goal;
      keys.push_back(std::move(next));
      parent.push_back(static_cast<int>(head));
      dist.push_back(dist[head] + 1);
      if (hit) found = id;
      if (keys.size() > budget) fail(ErrorCode::BudgetExceeded, "more than " + std::to_string(budget) + " states");
    });
  }
  r.explored = keys.size();
  if (found < 0) return r;
  r.reachable = true;
  r.distance = dist[static_cast<std::size_t>(found)];
  if (want_path) {
    std::vector<int> chain;
    for (int at = found; at >= 0; at = parent[static_cast<std::size_t>(at)]) chain.push_back(at);
    std::reverse(chain.begin(), chain.end());
    ReconfigSequence seq{mode, {}};
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
      auto mv = move_between(state_matching(g, keys[static_cast<std::size_t>(chain[i])]),
                             state_matching(g, keys[static_cast<std::size_t>(chain[i + 1])]));
      if (!mv) fail(ErrorCode::Internal, "BFS parent is not one move away");
      seq.moves.push_back(*mv);
    }
    r.path = std::move(seq);
  }
  return r;
}

std::optional<int> ReconfigGraph::index_of(const Matching& m) const {
  for (int v = 0; v < m.n(); ++v)
    if (m.mate(v) > v && !graph.has_edge(v, m.mate(v))) return std::nullopt;
  auto it = index.find(state_key(graph, m));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

ReconfigGraph build_reconfiguration_graph(const Graph& g, MatchingTarget target, const Mode& mode,
                                          std::size_t budget) {
  ReconfigGraph rg;
  rg.graph = g;
  rg.nodes = enumerate_matchings(g, target, budget);
  const int count = static_cast<int>(rg.nodes.size());
  for (int i = 0; i < count; ++i) rg.index.emplace(state_key(g, rg.nodes[static_cast<std::size_t>(i)]), i);

  MoveGenerator gen(g, mode);
  rg.adjacency.assign(static_cast<std::size_t>(count), {});
  for (int i = 0; i < count; ++i) {
    const Matching& m = rg.nodes[static_cast<std::size_t>(i)];
    gen.for_each(m, [&](const Move& mv) {
      auto it = rg.index.find(state_key(g, apply_move(g, m, mv)));
      if (it == rg.index.end()) fail(ErrorCode::Internal, "move leaves the enumerated matching set");
      rg.adjacency[static_cast<std::size_t>(i)].push_back(it->second);
    });
  }

  rg.component.assign(static_cast<std::size_t>(count), -1);
  std::vector<int> stack;
  for (int s = 0; s < count; ++s) {
    if (rg.component[static_cast<std::size_t>(s)] >= 0) continue;
    rg.component[static_cast<std::size_t>(s)] = rg.component_count;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : rg.adjacency[static_cast<std::size_t>(v)]) {
        if (rg.component[static_cast<std::size_t>(w)] < 0) {
          rg.component[static_cast<std::size_t>(w)] = rg.component_count;
          stack.push_back(w);
        }
      }
    }
    ++rg.component_count;
  }
  return rg;
}

ReconfigGraphStats reconfiguration_stats(const Graph& g, MatchingTarget target, const Mode& mode, std::size_t budget,
                                         const std::optional<Matching>& designated) {
  ReconfigGraph rg = build_reconfiguration_graph(g, target, mode, budget);
  ReconfigGraphStats st;
  st.nodes = rg.nodes.size();
  st.components = static_cast<std::size_t>(rg.component_count);
  st.component_sizes.assign(st.components, 0);
  for (int c : rg.component) ++st.component_sizes[static_cast<std::size_t>(c)];

  int only = -1;
  if (designated) {
    auto id = rg.index_of(*designated);
    if (!id) fail(ErrorCode::InvalidArgument, "designated matching is not a node of the reconfiguration graph");
    only = rg.component[static_cast<std::size_t>(*id)];
  }
  std::vector<int> dist(rg.nodes.size());
  std::deque<int> queue;
  for (std::size_t s = 0; s < rg.nodes.size(); ++s) {
    if (only >= 0 && rg.component[s] != only) continue;
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    queue.assign(1, static_cast<int>(s));
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      st.diameter = std::max(st.diameter, static_cast<std::size_t>(dist[static_cast<std::size_t>(v)]));
      for (int w : rg.adjacency[static_cast<std::size_t>(v)]) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return st;
}

}  // namespace matchflip
