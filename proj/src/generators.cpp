#include "matchflip/generators.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <string>

#include "matchflip/error.hpp"
#include "matchflip/max_matching.hpp"

namespace matchflip {

namespace {

/// Uniform integer in [lo, hi], independent of the standard library's
/// distribution implementation so seeds reproduce across platforms.
int uniform(Rng& rng, int lo, int hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

double unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> es;
  es.reserve(g.m());
  for (const Edge& e : g.edges()) es.push_back(Edge::of(perm[e.u], perm[e.v]));
  return Graph(g.n(), std::span<const Edge>(es));
}

}  // namespace

std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[uniform(rng, 0, i)]);
  return p;
}

Matching random_max_matching(const Graph& g, Rng& rng, std::optional<int> size) {
  std::vector<int> perm = random_permutation(g.n(), rng);
  Matching shuffled = max_matching(relabel(g, perm));
  std::vector<int> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = static_cast<int>(i);
  std::vector<Edge> es;
  for (const Edge& e : shuffled.edges()) es.push_back(Edge::of(inv[e.u], inv[e.v]));
  for (std::size_t i = es.size(); i > 1; --i) std::swap(es[i - 1], es[uniform(rng, 0, static_cast<int>(i) - 1)]);
  if (size) {
    if (*size > static_cast<int>(es.size())) fail(ErrorCode::InvalidArgument, "size exceeds maximum matching");
    es.resize(static_cast<std::size_t>(*size));
  }
  return Matching::from_edges(g.n(), std::span<const Edge>(es));
}

Matching random_flip_walk(const Graph& g, Matching m, int steps, Rng& rng) {
  if (m.size() == 0) return m;
  for (int s = 0; s < steps; ++s) {
    int u = uniform(rng, 0, g.n() - 1);
    int v = m.mate(u);
    if (v < 0 || g.degree(u) < 2) continue;
    int x = g.neighbors(u)[uniform(rng, 0, g.degree(u) - 1)];
    int y = x == v ? -1 : m.mate(x);
    if (y < 0 || !g.has_edge(v, y)) continue;
    m.remove(u, v);
    m.remove(x, y);
    m.add(v, y);
    m.add(x, u);
  }
  return m;
}

Instance random_interval_instance(int n, Rng& rng, double spread) {
  if (n < 0 || n % 2 != 0) fail(ErrorCode::InvalidArgument, "n must be even");
  struct Interval {
    double l, r;
  };
  std::vector<Interval> iv(static_cast<std::size_t>(n));
  const double width = static_cast<double>(n / 2);
  for (int p = 0; p < n / 2; ++p) {
    double x = unit(rng) * width;
    for (int s = 0; s < 2; ++s) iv[2 * p + s] = {x - unit(rng) * spread, x + unit(rng) * spread};
  }
  std::vector<int> perm = random_permutation(n, rng);
  std::vector<Interval> placed(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) placed[perm[v]] = iv[v];

  // Sweep by left endpoint to emit overlapping pairs.
  std::vector<int> by_left(static_cast<std::size_t>(n));
  std::iota(by_left.begin(), by_left.end(), 0);
  std::sort(by_left.begin(), by_left.end(), [&](int a, int b) { return placed[a].l < placed[b].l; });
  std::vector<RawEdge> es;
  std::vector<int> active;
  for (int v : by_left) {
    std::erase_if(active, [&](int a) { return placed[a].r < placed[v].l; });
    for (int a : active) es.emplace_back(a, v);
    active.push_back(v);
  }

  Instance inst;
  inst.graph = Graph(n, es);
  std::vector<Edge> pairs;
  for (int p = 0; p < n / 2; ++p) pairs.push_back(Edge::of(perm[2 * p], perm[2 * p + 1]));
  inst.m_ini = Matching::from_edges(n, std::span<const Edge>(pairs));
  inst.m_tar = random_max_matching(inst.graph, rng);
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return placed[a].r != placed[b].r ? placed[a].r < placed[b].r : a < b;
  });
  inst.strong_order = std::move(order);
  return inst;
}

Instance random_outerplanar_instance(int n, Rng& rng, double chord_prob) {
  if (n < 4 || n % 2 != 0) fail(ErrorCode::InvalidArgument, "n must be even and at least 4");
  std::vector<RawEdge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  // Triangulate the polygon segment [a, b] by an apex c strictly inside.
  std::vector<std::pair<int, int>> todo{{0, n - 1}};
  while (!todo.empty()) {
    auto [a, b] = todo.back();
    todo.pop_back();
    if (b - a < 2) continue;
    int c = uniform(rng, a + 1, b - 1);
    for (auto [x, y] : {std::pair{a, c}, std::pair{c, b}}) {
      if (y - x < 2) continue;
      if (unit(rng) < chord_prob) es.emplace_back(x, y);
      todo.emplace_back(x, y);
    }
  }
  std::vector<int> perm = random_permutation(n, rng);
  Graph base(n, es);
  Instance inst;
  inst.graph = relabel(base, perm);
  std::vector<Edge> ini;
  for (int i = 0; i < n; i += 2) ini.push_back(Edge::of(perm[i], perm[i + 1]));
  inst.m_ini = Matching::from_edges(n, std::span<const Edge>(ini));
  inst.m_tar = random_max_matching(inst.graph, rng);
  inst.boundary_order = perm;
  return inst;
}

Instance random_cograph_instance(int n, Rng& rng) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "n must be positive");
  std::vector<int> verts = random_permutation(n, rng);
  std::vector<RawEdge> es;
  auto build = [&](auto&& self, int lo, int hi, bool join) -> void {
    if (hi - lo < 2) return;
    int mid = uniform(rng, lo + 1, hi - 1);
    if (join)
      for (int i = lo; i < mid; ++i)
        for (int j = mid; j < hi; ++j) es.emplace_back(verts[i], verts[j]);
    self(self, lo, mid, uniform(rng, 0, 1) == 1);
    self(self, mid, hi, uniform(rng, 0, 1) == 1);
  };
  build(build, 0, n, true);
  Instance inst;
  inst.graph = Graph(n, es);
  int mm = max_matching(inst.graph).size();
  int k = uniform(rng, 0, mm);
  inst.m_ini = random_max_matching(inst.graph, rng, k);
  inst.m_tar = random_max_matching(inst.graph, rng, k);
  return inst;
}

namespace {

/// Cotree shape: a leaf, or a node whose children are all of the other kind.
struct Shape {
  int size = 1;
  std::vector<const Shape*> children;
};

struct ShapeTables {
  std::vector<std::vector<std::unique_ptr<Shape>>> conn;  // connected, by size
  std::vector<std::vector<std::unique_ptr<Shape>>> disc;  // disconnected, by size
  std::vector<std::vector<std::unique_ptr<Shape>>> co;    // join children: leaf or disconnected

  /// Multisets of at least two parts drawn from `parts` (for sizes below n)
  /// with total size n, parts in nondecreasing (size, index) order.
  void combine(int n, const std::vector<std::vector<std::unique_ptr<Shape>>>& parts,
               std::vector<std::unique_ptr<Shape>>& out) {
    std::vector<const Shape*> chosen;
    auto rec = [&](auto&& self, int left, int min_size, std::size_t min_idx) -> void {
      if (left == 0) {
        if (chosen.size() < 2) return;
        auto s = std::make_unique<Shape>();
        s->size = n;
        s->children = chosen;
        out.push_back(std::move(s));
        return;
      }
      for (int sz = min_size; sz <= left && sz < n; ++sz) {
        const auto& pool = parts[static_cast<std::size_t>(sz)];
        for (std::size_t i = sz == min_size ? min_idx : 0; i < pool.size(); ++i) {
          chosen.push_back(pool[i].get());
          self(self, left - sz, sz, i);
          chosen.pop_back();
        }
      }
    };
    rec(rec, n, 1, 0);
  }

  explicit ShapeTables(int n)
      : conn(static_cast<std::size_t>(n) + 1), disc(static_cast<std::size_t>(n) + 1), co(static_cast<std::size_t>(n) + 1) {
    for (int m = 1; m <= n; ++m) {
      if (m == 1) {
        conn[1].push_back(std::make_unique<Shape>());
      } else {
        combine(m, conn, disc[m]);
        combine(m, co, conn[m]);
      }
      // Pool of join children of size m: the leaf or disconnected shapes.
      if (m == 1) co[1].push_back(std::make_unique<Shape>());
      for (const auto& d : disc[m]) co[m].push_back(std::make_unique<Shape>(*d));
    }
  }
};

}  // namespace

std::vector<Graph> all_connected_cographs(int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "n must be positive");
  ShapeTables t(n);
  std::vector<Graph> out;
  for (const auto& s : t.conn[static_cast<std::size_t>(n)]) {
    std::vector<RawEdge> es;
    int next = 0;
    // Returns the vertex range of the shape; `join` is the node's kind.
    auto emit = [&](auto&& self, const Shape* sh, bool join) -> std::pair<int, int> {
      int lo = next;
      if (sh->children.empty()) {
        ++next;
        return {lo, next};
      }
      std::vector<std::pair<int, int>> ranges;
      for (const Shape* c : sh->children) ranges.push_back(self(self, c, !join));
      if (join)
        for (std::size_t i = 0; i < ranges.size(); ++i)
          for (std::size_t j = i + 1; j < ranges.size(); ++j)
            for (int a = ranges[i].first; a < ranges[i].second; ++a)
              for (int b = ranges[j].first; b < ranges[j].second; ++b) es.emplace_back(a, b);
      return {lo, next};
    };
    emit(emit, s.get(), true);
    out.emplace_back(n, es);
  }
  return out;
}

}  // namespace matchflip
