#include "matchflip/outerplanar.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <unordered_set>

#include "matchflip/error.hpp"

namespace matchflip {

namespace {

std::uint64_t pair_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

/// Depth-first search over the live part of a graph, recording discovery
/// times, low points, subtree sizes and (optionally) the biconnected blocks
/// as edge lists.
struct DfsForest {
  std::vector<int> disc, low, parent, size;
  /// Vertices per tree, in discovery order.
  std::vector<std::vector<int>> trees;
  std::vector<std::vector<int>> blocks;
};

template <typename EdgeAlive, typename VertexAlive>
DfsForest dfs_forest(const Graph& g, const std::vector<std::vector<int>>& inc, EdgeAlive&& edge_alive,
                     VertexAlive&& vertex_alive, bool want_blocks) {
  const int n = g.n();
  DfsForest f;
  f.disc.assign(static_cast<std::size_t>(n), -1);
  f.low.assign(static_cast<std::size_t>(n), -1);
  f.parent.assign(static_cast<std::size_t>(n), -1);
  f.size.assign(static_cast<std::size_t>(n), 1);
  std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);
  std::vector<std::size_t> cursor(static_cast<std::size_t>(n), 0);
  std::vector<int> stack, edge_stack;
  int clock = 0;
  for (int root = 0; root < n; ++root) {
    if (!vertex_alive(root) || f.disc[root] >= 0) continue;
    f.trees.emplace_back();
    f.disc[root] = f.low[root] = clock++;
    f.trees.back().push_back(root);
    stack.push_back(root);
    while (!stack.empty()) {
      int v = stack.back();
      const auto& edges = inc[v];
      if (cursor[v] < edges.size()) {
        int id = edges[cursor[v]++];
        if (!edge_alive(id) || id == parent_edge[v]) continue;
        int w = g.edge(static_cast<std::size_t>(id)).other(v);
        if (f.disc[w] < 0) {
          f.parent[w] = v;
          parent_edge[w] = id;
          f.disc[w] = f.low[w] = clock++;
          f.trees.back().push_back(w);
          if (want_blocks) edge_stack.push_back(id);
          stack.push_back(w);
        } else if (f.disc[w] < f.disc[v]) {
          f.low[v] = std::min(f.low[v], f.disc[w]);
          if (want_blocks) edge_stack.push_back(id);
        }
        continue;
      }
      stack.pop_back();
      int p = f.parent[v];
      if (p < 0) continue;
      f.low[p] = std::min(f.low[p], f.low[v]);
      f.size[p] += f.size[v];
      if (want_blocks && f.low[v] >= f.disc[p]) {
        std::vector<int> block;
        while (true) {
          int id = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(id);
          if (id == parent_edge[v]) break;
        }
        f.blocks.push_back(std::move(block));
      }
    }
  }
  return f;
}

std::vector<std::vector<int>> incidence(const Graph& g) {
  std::vector<std::vector<int>> inc(static_cast<std::size_t>(g.n()));
  for (int v = 0; v < g.n(); ++v) inc[v].assign(g.incident_edges(v).begin(), g.incident_edges(v).end());
  return inc;
}

bool two_connected(const Graph& g) {
  if (g.n() < 3) return false;
  auto inc = incidence(g);
  auto f = dfs_forest(g, inc, [](int) { return true; }, [](int) { return true; }, false);
  if (f.trees.size() != 1) return false;
  int root_children = 0;
  for (int v = 0; v < g.n(); ++v) {
    int p = f.parent[v];
    if (p < 0) continue;
    if (f.parent[p] < 0) ++root_children;
    else if (f.low[v] >= f.disc[p]) return false;
  }
  return root_children == 1;
}

std::vector<int> normalized_cycle(std::vector<int> cyc) {
  auto it = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), it, cyc.end());
  if (cyc.size() > 2 && cyc.back() < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
  return cyc;
}

}  // namespace

void verify_boundary_order(const Graph& g, std::span<const int> order) {
  const int n = g.n();
  if (static_cast<int>(order.size()) != n) fail(ErrorCode::NotAPermutation, "boundary order has wrong length");
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int v = order[static_cast<std::size_t>(i)];
    if (v < 0 || v >= n || pos[v] >= 0) fail(ErrorCode::NotAPermutation, "bad boundary entry " + std::to_string(v));
    pos[v] = i;
  }
  if (n < 3) fail(ErrorCode::NotTwoConnected, "fewer than three vertices");
  for (int i = 0; i < n; ++i) {
    int a = order[static_cast<std::size_t>(i)], b = order[static_cast<std::size_t>((i + 1) % n)];
    if (!g.has_edge(a, b))
      fail(ErrorCode::NotOuterplanar, "boundary edge " + std::to_string(a) + "-" + std::to_string(b) + " missing");
  }
  std::vector<std::pair<int, int>> chords;
  for (const Edge& e : g.edges()) {
    int i = std::min(pos[e.u], pos[e.v]), j = std::max(pos[e.u], pos[e.v]);
    if (j - i == 1 || (i == 0 && j == n - 1)) continue;
    chords.emplace_back(i, j);
  }
  std::sort(chords.begin(), chords.end(), [](auto x, auto y) { return x.first != y.first ? x.first < y.first : x.second > y.second; });
  std::vector<int> open;  // right ends of enclosing chords
  for (auto [i, j] : chords) {
    while (!open.empty() && open.back() <= i) open.pop_back();
    if (!open.empty() && open.back() < j)
      fail(ErrorCode::NotOuterplanar, "crossing chords at boundary positions " + std::to_string(i) + "," +
                                          std::to_string(j));
    open.push_back(j);
  }
}

std::vector<int> boundary_order(const Graph& g) {
  const int n = g.n();
  if (!two_connected(g)) fail(ErrorCode::NotTwoConnected, "graph is not 2-connected");

  std::unordered_set<std::uint64_t> present;
  present.reserve(2 * g.m() + 16);
  std::vector<std::vector<int>> nbrs(static_cast<std::size_t>(n));
  std::vector<int> deg(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    nbrs[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    deg[v] = g.degree(v);
  }
  for (const Edge& e : g.edges()) present.insert(pair_key(e.u, e.v));
  std::vector<char> alive(static_cast<std::size_t>(n), 1);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 2) queue.push_back(v);

  // Contract degree-two vertices, joining their neighbours by a (possibly
  // virtual) edge, until a triangle remains.
  std::vector<std::array<int, 3>> ears;
  int remaining = n;
  while (remaining > 3) {
    int v = -1;
    while (!queue.empty()) {
      int c = queue.back();
      queue.pop_back();
      if (alive[c] && deg[c] == 2) {
        v = c;
        break;
      }
    }
    if (v < 0) fail(ErrorCode::NotOuterplanar, "no degree-two vertex left to contract");
    auto& nb = nbrs[v];
    std::erase_if(nb, [&](int w) { return !alive[w] || !present.count(pair_key(v, w)); });
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    if (nb.size() != 2) fail(ErrorCode::Internal, "degree bookkeeping in ear contraction");
    int a = nb[0], b = nb[1];
    alive[v] = 0;
    present.erase(pair_key(v, a));
    present.erase(pair_key(v, b));
    --remaining;
    if (present.count(pair_key(a, b))) {
      for (int x : {a, b})
        if (--deg[x] == 2) queue.push_back(x);
    } else {
      present.insert(pair_key(a, b));
      nbrs[a].push_back(b);
      nbrs[b].push_back(a);
    }
    ears.push_back({v, a, b});
  }

  std::vector<int> left;
  for (int v = 0; v < n; ++v)
    if (alive[v]) left.push_back(v);
  for (int i = 0; i < 3; ++i)
    if (!present.count(pair_key(left[i], left[(i + 1) % 3])))
      fail(ErrorCode::NotOuterplanar, "contraction did not end in a triangle");
  std::vector<int> next(static_cast<std::size_t>(n), -1), prev(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < 3; ++i) {
    next[left[i]] = left[(i + 1) % 3];
    prev[left[(i + 1) % 3]] = left[i];
  }
  for (auto it = ears.rbegin(); it != ears.rend(); ++it) {
    auto [v, a, b] = *it;
    if (next[b] == a) std::swap(a, b);
    if (next[a] != b) fail(ErrorCode::NotOuterplanar, "ear " + std::to_string(v) + " has no boundary slot");
    next[a] = v;
    prev[v] = a;
    next[v] = b;
    prev[b] = v;
  }
  std::vector<int> cyc;
  cyc.reserve(static_cast<std::size_t>(n));
  for (int v = left[0], i = 0; i < n; v = next[v], ++i) cyc.push_back(v);
  cyc = normalized_cycle(std::move(cyc));
  verify_boundary_order(g, cyc);
  return cyc;
}

namespace {

struct Case2Record {
  int x, y, a, b;
  bool e_ini, e_tar;
  /// Whether ab lies in the reduced matchings.
  bool f_ini, f_tar;
};

/// Rule-driven AlgOP. Every rule is local except the clean-up pass, which
/// splits at cut vertices and drops even chords once nothing local applies.
class Engine {
 public:
  Engine(const Graph& g, const Matching& m_ini, const Matching& m_tar)
      : g_(g),
        n_(g.n()),
        alive_v_(static_cast<std::size_t>(n_), 1),
        alive_e_(g.m(), 1),
        deg_(static_cast<std::size_t>(n_)),
        inc_(incidence(g)),
        mi_(static_cast<std::size_t>(n_)),
        mt_(static_cast<std::size_t>(n_)),
        queued_(static_cast<std::size_t>(n_), 0) {
    for (int v = 0; v < n_; ++v) {
      deg_[v] = g.degree(v);
      mi_[v] = m_ini.mate(v);
      mt_[v] = m_tar.mate(v);
    }
    alive_count_ = n_;
  }

  /// Per-edge boundary positions of the endpoints inside their block.
  void set_block_positions(std::vector<int> pos_lo, std::vector<int> pos_hi) {
    pos_lo_ = std::move(pos_lo);
    pos_hi_ = std::move(pos_hi);
  }

  bool run() {
    for (int v = 0; v < n_; ++v) push(v);
    while (alive_count_ > 0) {
      while (!work_.empty()) {
        int v = work_.back();
        work_.pop_back();
        queued_[v] = 0;
        if (!alive_v_[v]) continue;
        if (!local_step(v)) return false;
      }
      if (alive_count_ == 0) break;
      if (!cleanup(true))
        fail(ErrorCode::Internal, "no degree-two pair after clean-up");
    }
    return true;
  }

  /// Only cut-vertex splitting, to a fixpoint.
  void split_only() {
    while (cleanup(false)) {
    }
  }

  std::vector<std::vector<int>> live_components() {
    auto f = forest(false);
    return f.trees;
  }

  bool edge_alive(int id) const { return alive_e_[id]; }
  const std::vector<Case2Record>& records() const { return records_; }
  std::vector<ReductionStep>& trace() { return trace_; }

 private:
  DfsForest forest(bool blocks) {
    return dfs_forest(
        g_, inc_, [&](int id) { return alive_e_[id] != 0; }, [&](int v) { return alive_v_[v] && deg_[v] > 0; },
        blocks);
  }

  void push(int v) {
    if (!queued_[v]) {
      queued_[v] = 1;
      work_.push_back(v);
    }
  }

  const std::vector<int>& live_edges(int v) {
    std::erase_if(inc_[v], [&](int id) { return !alive_e_[id]; });
    return inc_[v];
  }

  int other(int id, int v) const { return g_.edge(static_cast<std::size_t>(id)).other(v); }

  void kill_edge(int id) {
    if (!alive_e_[id]) return;
    alive_e_[id] = 0;
    const Edge& e = g_.edge(static_cast<std::size_t>(id));
    --deg_[e.u];
    --deg_[e.v];
    push(e.u);
    push(e.v);
  }

  void kill_vertex(int v) {
    for (int id : live_edges(v)) kill_edge(id);
    inc_[v].clear();
    alive_v_[v] = 0;
    --alive_count_;
  }

  bool live_edge_between(int a, int b) const {
    if (a == b) return false;
    auto id = g_.edge_id(a, b);
    return id && alive_e_[*id];
  }

  void expect_unmatched(int id, const char* what) {
    const Edge& e = g_.edge(static_cast<std::size_t>(id));
    if (mi_[e.u] == e.v || mt_[e.u] == e.v)
      fail(ErrorCode::Internal, std::string(what) + " removed a matched edge");
  }

  /// Applies the first local rule at v; false on a NO certificate.
  bool local_step(int x) {
    if (deg_[x] == 0) fail(ErrorCode::Internal, "isolated vertex " + std::to_string(x) + " cannot be matched");
    const auto& ex = live_edges(x);
    if (deg_[x] == 1) {
      int w = other(ex[0], x);
      if (mi_[x] != w || mt_[x] != w) fail(ErrorCode::Internal, "pendant edge not in both matchings");
      trace_.push_back({ReductionStep::Kind::Pendant, x, w});
      kill_vertex(x);
      kill_vertex(w);
      return true;
    }
    if (deg_[x] != 2) return true;
    int n0 = other(ex[0], x), n1 = other(ex[1], x);
    for (auto [y, a] : {std::pair{n0, n1}, std::pair{n1, n0}}) {
      if (deg_[y] != 2) continue;
      const auto& ey = live_edges(y);
      int b = other(ey[0], y) == x ? other(ey[1], y) : other(ey[0], y);
      bool e_ini = mi_[x] == y, e_tar = mt_[x] == y;
      if (!live_edge_between(a, b)) {
        if (e_ini != e_tar) {
          trace_.push_back({ReductionStep::Kind::Case1Reject, x, y, a, b, e_ini, e_tar});
          return false;
        }
        if (e_ini) {
          trace_.push_back({ReductionStep::Kind::Case1Remove, x, y, a, b, true, true});
          kill_vertex(x);
          kill_vertex(y);
        } else {
          trace_.push_back({ReductionStep::Kind::Case1Drop, x, y, a, b, false, false});
          kill_edge(*g_.edge_id(x, y));
        }
        return true;
      }
      Case2Record rec{x, y, a, b, e_ini, e_tar, !e_ini || mi_[a] == b, !e_tar || mt_[a] == b};
      for (auto* m : {&mi_, &mt_}) {
        auto& mate = *m;
        if (mate[x] == y) continue;
        if (mate[x] != a || mate[y] != b) fail(ErrorCode::Internal, "degree-two pair not covered as expected");
        mate[a] = b;
        mate[b] = a;
      }
      records_.push_back(rec);
      trace_.push_back({ReductionStep::Kind::Case2, x, y, a, b, e_ini, e_tar});
      kill_vertex(x);
      kill_vertex(y);
      return true;
    }
    return true;
  }

  /// Removes edges at cut vertices into even components of G - v; in
  /// components without cut vertices, removes even chords (when `chords`).
  /// Returns whether anything was removed.
  bool cleanup(bool chords) {
    DfsForest f = forest(false);
    // Children in discovery order, as CSR over parents.
    std::vector<int> child_start(static_cast<std::size_t>(n_) + 1, 0), children;
    for (int v = 0; v < n_; ++v)
      if (f.parent[v] >= 0) ++child_start[f.parent[v] + 1];
    std::partial_sum(child_start.begin(), child_start.end(), child_start.begin());
    children.resize(static_cast<std::size_t>(child_start.back()));
    {
      std::vector<int> fill(child_start.begin(), child_start.end() - 1);
      for (const auto& tree : f.trees)
        for (int v : tree)
          if (f.parent[v] >= 0) children[fill[f.parent[v]]++] = v;
    }

    std::vector<int> doomed, chord_doomed;
    bool removed = false;
    for (const auto& tree : f.trees) {
      const int comp = static_cast<int>(tree.size());
      bool has_cut = false;
      for (int v : tree) {
        auto kids = std::span<const int>(children).subspan(static_cast<std::size_t>(child_start[v]),
                                                           static_cast<std::size_t>(child_start[v + 1] - child_start[v]));
        bool root = f.parent[v] < 0;
        int separated_total = 0;
        bool cut = root ? kids.size() >= 2 : false;
        for (int c : kids)
          if (root || f.low[c] >= f.disc[v]) {
            separated_total += f.size[c];
            if (!root) cut = true;
          }
        if (!cut) continue;
        has_cut = true;
        const int parent_side = comp - 1 - separated_total;
        for (int id : live_edges(v)) {
          int w = other(id, v);
          int side = parent_side;
          if (f.disc[w] > f.disc[v] && f.disc[w] < f.disc[v] + f.size[v]) {
            auto it = std::upper_bound(kids.begin(), kids.end(), f.disc[w],
                                       [&](int d, int c) { return d < f.disc[c]; });
            int c = *std::prev(it);
            if (root || f.low[c] >= f.disc[v]) side = f.size[c];
          }
          if (side % 2 == 0) doomed.push_back(id);
        }
      }
      if (has_cut || !chords || comp < 4) continue;
      if (pos_lo_.empty()) continue;
      // Boundary of this 2-connected component: the original block's cycle
      // restricted to its vertices.
      std::vector<std::pair<int, int>> by_pos;
      by_pos.reserve(tree.size());
      for (int v : tree) {
        int id = live_edges(v).front();
        by_pos.emplace_back(g_.edge(static_cast<std::size_t>(id)).u == v ? pos_lo_[id] : pos_hi_[id], v);
      }
      std::sort(by_pos.begin(), by_pos.end());
      for (int r = 0; r < comp; ++r) rank_scratch(by_pos[r].second) = r;
      for (int v : tree)
        for (int id : live_edges(v)) {
          int w = other(id, v);
          if (w < v) continue;
          if (std::abs(rank_scratch(v) - rank_scratch(w)) % 2 == 0) chord_doomed.push_back(id);
        }
    }
    for (int id : doomed) {
      if (!alive_e_[id]) continue;
      expect_unmatched(id, "cut-vertex split");
      const Edge& e = g_.edge(static_cast<std::size_t>(id));
      trace_.push_back({ReductionStep::Kind::SplitEdge, e.u, e.v});
      kill_edge(id);
      removed = true;
    }
    for (int id : chord_doomed) {
      if (!alive_e_[id]) continue;
      expect_unmatched(id, "even chord removal");
      const Edge& e = g_.edge(static_cast<std::size_t>(id));
      trace_.push_back({ReductionStep::Kind::RemoveEvenChord, e.u, e.v});
      kill_edge(id);
      removed = true;
    }
    return removed;
  }

  int& rank_scratch(int v) {
    if (rank_.empty()) rank_.assign(static_cast<std::size_t>(n_), 0);
    return rank_[v];
  }

  const Graph& g_;
  int n_;
  std::vector<char> alive_v_, alive_e_;
  std::vector<int> deg_;
  std::vector<std::vector<int>> inc_;
  std::vector<int> mi_, mt_;
  std::vector<char> queued_;
  std::vector<int> work_;
  int alive_count_ = 0;
  std::vector<int> pos_lo_, pos_hi_;
  std::vector<int> rank_;
  std::vector<Case2Record> records_;
  std::vector<ReductionStep> trace_;
};

void check_inputs(const Graph& g, const Matching& m_ini, const Matching& m_tar) {
  for (const Matching* m : {&m_ini, &m_tar}) {
    if (m->n() != g.n()) fail(ErrorCode::VertexOutOfRange, "matching and graph sizes differ");
    for (const Edge& e : m->edges())
      if (!g.has_edge(e.u, e.v))
        fail(ErrorCode::EdgeNotInGraph, "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    if (!m->is_perfect()) fail(ErrorCode::NotPerfect, "matching is not perfect");
  }
}

/// Lifts the reductions back into a flip sequence on the input graph.
/// Reduced sequences only ever consist of the square flips introduced here,
/// so each record contributes at most two flips.
std::vector<Move> lift(const std::vector<Case2Record>& records) {
  std::vector<std::array<int, 4>> flips;
  std::vector<int> next, prev;
  int head = -1, tail = -1;
  auto insert_before = [&](int at, std::array<int, 4> c) {
    int id = static_cast<int>(flips.size());
    flips.push_back(c);
    next.push_back(at);
    prev.push_back(at < 0 ? tail : prev[at]);
    if (prev[id] >= 0) next[prev[id]] = id;
    else head = id;
    if (at >= 0) prev[at] = id;
    else tail = id;
  };
  auto has_edge = [](const std::array<int, 4>& c, int a, int b) {
    for (int i = 0; i < 4; ++i) {
      int p = c[i], q = c[(i + 1) % 4];
      if ((p == a && q == b) || (p == b && q == a)) return true;
    }
    return false;
  };
  for (auto it = records.rbegin(); it != records.rend(); ++it) {
    const Case2Record& r = *it;
    const std::array<int, 4> square{r.x, r.y, r.b, r.a};
    bool e_in = r.e_ini, f_in = r.f_ini;
    for (int at = head; at >= 0; at = next[at]) {
      if (!has_edge(flips[at], r.a, r.b)) continue;
      if (!f_in && !e_in) fail(ErrorCode::Internal, "reduced state lost track of a square");
      if (f_in && !e_in) {
        insert_before(at, square);
        e_in = true;
      }
      f_in = !f_in;
    }
    if (f_in != r.f_tar) fail(ErrorCode::Internal, "lifted sequence ends in the wrong reduced state");
    if (e_in != r.e_tar) insert_before(-1, square);
  }
  std::vector<Move> out;
  out.reserve(flips.size());
  for (int at = head; at >= 0; at = next[at])
    out.push_back(make_flip(std::vector<int>(flips[at].begin(), flips[at].end())));
  return out;
}

}  // namespace

std::vector<SubInstance> split_at_cut_vertices(const Graph& g, const Matching& m_ini, const Matching& m_tar) {
  check_inputs(g, m_ini, m_tar);
  Engine engine(g, m_ini, m_tar);
  engine.split_only();
  std::vector<SubInstance> out;
  for (auto& comp : engine.live_components()) {
    std::sort(comp.begin(), comp.end());
    std::vector<int> local(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    std::vector<RawEdge> es;
    for (int v : comp)
      for (std::size_t k = 0; k < g.neighbors(v).size(); ++k) {
        int w = g.neighbors(v)[k];
        if (w > v && engine.edge_alive(g.incident_edges(v)[k])) es.emplace_back(local[v], local[w]);
      }
    SubInstance sub;
    sub.vertices = comp;
    sub.graph = Graph(static_cast<int>(comp.size()), es);
    sub.m_ini = Matching(static_cast<int>(comp.size()));
    sub.m_tar = Matching(static_cast<int>(comp.size()));
    for (int v : comp) {
      if (m_ini.mate(v) > v) sub.m_ini.add(local[v], local[m_ini.mate(v)]);
      if (m_tar.mate(v) > v) sub.m_tar.add(local[v], local[m_tar.mate(v)]);
    }
    out.push_back(std::move(sub));
  }
  return out;
}

OuterplanarResult solve_outerplanar(const Graph& g, const Matching& m_ini, const Matching& m_tar,
                                    const std::optional<std::vector<int>>& boundary_hint) {
  check_inputs(g, m_ini, m_tar);
  const int n = g.n();

  // Certify outerplanarity block by block and remember, for every edge, the
  // boundary positions of its endpoints within its block.
  std::vector<int> pos_lo(g.m(), 0), pos_hi(g.m(), 1);
  {
    auto inc = incidence(g);
    auto f = dfs_forest(g, inc, [](int) { return true; }, [&](int v) { return g.degree(v) > 0; }, true);
    std::vector<int> local(static_cast<std::size_t>(n), -1);
    for (const auto& block : f.blocks) {
      if (block.size() == 1) continue;
      std::vector<int> verts;
      for (int id : block)
        for (int v : {g.edge(static_cast<std::size_t>(id)).u, g.edge(static_cast<std::size_t>(id)).v})
          if (local[v] < 0) {
            local[v] = static_cast<int>(verts.size());
            verts.push_back(v);
          }
      std::vector<RawEdge> es;
      for (int id : block) {
        const Edge& e = g.edge(static_cast<std::size_t>(id));
        es.emplace_back(local[e.u], local[e.v]);
      }
      Graph bg(static_cast<int>(verts.size()), es);
      std::vector<int> cyc;
      if (boundary_hint && static_cast<int>(verts.size()) == n) {
        std::vector<int> mapped;
        for (int v : *boundary_hint) {
          if (v < 0 || v >= n) fail(ErrorCode::NotAPermutation, "boundary hint entry out of range");
          mapped.push_back(local[v]);
        }
        verify_boundary_order(bg, mapped);
        cyc = std::move(mapped);
      } else {
        cyc = boundary_order(bg);
      }
      std::vector<int> pos(verts.size());
      for (std::size_t i = 0; i < cyc.size(); ++i) pos[cyc[i]] = static_cast<int>(i);
      for (int id : block) {
        const Edge& e = g.edge(static_cast<std::size_t>(id));
        pos_lo[id] = pos[local[e.u]];
        pos_hi[id] = pos[local[e.v]];
      }
      for (int v : verts) local[v] = -1;
    }
    if (boundary_hint) {
      bool spanning = false;
      for (const auto& block : f.blocks) spanning |= block.size() == g.m() && n >= 3;
      if (!spanning) verify_boundary_order(g, *boundary_hint);
    }
  }

  Engine engine(g, m_ini, m_tar);
  engine.set_block_positions(std::move(pos_lo), std::move(pos_hi));
  OuterplanarResult res;
  res.yes = engine.run();
  res.trace = std::move(engine.trace());
  if (!res.yes) return res;
  ReconfigSequence seq{Mode::flip(), lift(engine.records())};
  Verdict v = verify_sequence(g, m_ini, seq, m_tar);
  if (!v.accepted) fail(ErrorCode::Internal, "lifted outerplanar sequence rejected at step " + std::to_string(v.step));
  res.sequence = std::move(seq);
  return res;
}

}  // namespace matchflip
