#include "matchflip/cograph.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "matchflip/error.hpp"
#include "matchflip/max_matching.hpp"

namespace matchflip {

namespace {

std::string vertex_list(std::span<const int> vs) {
  std::string s;
  for (int v : vs) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

/// Components of the complement of g[vs], sorted, ordered by smallest member.
std::vector<std::vector<int>> co_components(const Graph& g, std::span<const int> vs) {
  std::vector<char> seen(vs.size(), 0);
  std::vector<std::vector<int>> out;
  for (std::size_t s = 0; s < vs.size(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      comp.push_back(vs[i]);
      for (std::size_t j = 0; j < vs.size(); ++j)
        if (!seen[j] && !g.has_edge(vs[i], vs[j])) {
          seen[j] = 1;
          stack.push_back(j);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end());
  return out;
}

[[noreturn]] void fail_not_cograph(const Graph& g, std::span<const int> vs) {
  auto p4 = find_induced_p4(g.induced(vs));
  if (!p4) fail(ErrorCode::Internal, "prime module without an induced P4");
  fail(ErrorCode::NotACograph, "induced P4 " + vertex_list(*p4));
}

/// Root split of a connected cograph on vs.
RootPartition split_join(const Graph& g, std::span<const int> vs) {
  auto groups = co_components(g, vs);
  if (groups.size() < 2) fail_not_cograph(g, vs);
  RootPartition part;
  part.b = groups.back();
  for (std::size_t i = 0; i + 1 < groups.size(); ++i) part.a.insert(part.a.end(), groups[i].begin(), groups[i].end());
  std::sort(part.a.begin(), part.a.end());
  if (part.a.size() < part.b.size()) std::swap(part.a, part.b);
  return part;
}

int build_node(const Graph& g, const std::vector<int>& vs, Cotree& t) {
  if (vs.size() == 1) {
    t.nodes.push_back({Cotree::Node::Kind::Leaf, vs[0], -1, -1});
    return static_cast<int>(t.nodes.size()) - 1;
  }
  auto groups = connected_components(g, vs);
  auto kind = Cotree::Node::Kind::Union;
  if (groups.size() == 1) {
    groups = co_components(g, vs);
    if (groups.size() == 1) fail_not_cograph(g, vs);
    kind = Cotree::Node::Kind::Join;
  }
  int node = build_node(g, groups[0], t);
  for (std::size_t i = 1; i < groups.size(); ++i) {
    int right = build_node(g, groups[i], t);
    t.nodes.push_back({kind, -1, node, right});
    node = static_cast<int>(t.nodes.size()) - 1;
  }
  return node;
}

/// A connected piece of the cograph with its root split.
struct View {
  const Graph* g = nullptr;
  std::vector<int> verts;
  std::vector<char> in;
  std::vector<char> in_b;
  bool drop_b = false;

  View(const Graph& graph, std::span<const int> vs, const RootPartition& part, bool drop)
      : g(&graph), verts(vs.begin(), vs.end()), in(graph.n(), 0), in_b(graph.n(), 0), drop_b(drop) {
    for (int v : vs) in[v] = 1;
    for (int v : part.b) in_b[v] = 1;
  }

  bool is_b(int v) const { return in_b[v] != 0; }
  bool keeps(int u, int v) const { return in[u] && in[v] && !(drop_b && in_b[u] && in_b[v]); }
  bool adj(int u, int v) const { return keeps(u, v) && g->has_edge(u, v); }

  Graph graph(std::span<const int> removed = {}) const {
    std::vector<char> gone(g->n(), 0);
    for (int v : removed) gone[v] = 1;
    return g->filter_edges([&](int id) {
      const Edge& e = g->edge(id);
      return keeps(e.u, e.v) && !gone[e.u] && !gone[e.v];
    });
  }
};

std::vector<Move> concat(std::vector<Move> a, std::span<const Move> b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

int mate_in(const Matching& m, int v) { return m.mate(v); }

/// Moves between equal-size matchings whose difference has no cycle.
std::vector<Move> cycle_free_moves(const View& v, const Matching& m1, const Matching& m2) {
  if (m1.size() != m2.size()) fail(ErrorCode::SizeMismatch, "matchings differ in size");
  SequenceBuilder f(*v.g, m1);
  SequenceBuilder b(*v.g, m2);
  for (;;) {
    auto comps = symmetric_difference_components(f.current(), b.current());
    if (comps.empty()) break;
    const DiffComponent* path = nullptr;
    for (const auto& c : comps) {
      if (c.kind == DiffComponent::Kind::EvenCycle)
        fail(ErrorCode::CycleInDifference, "cycle through " + vertex_list(c.vertices));
      if (c.kind == DiffComponent::Kind::AlternatingPath && !path) path = &c;
    }
    if (path) {
      int x1 = path->vertices[0], x2 = path->vertices[1], x3 = path->vertices[2];
      if (f.current().contains(x1, x2)) b.slide(x3, x2, x1);
      else f.slide(x3, x2, x1);
      continue;
    }
    // Only single edges remain, as many from each side.
    Edge ei{-1, -1}, et{-1, -1};
    for (const auto& c : comps) {
      Edge e = Edge::of(c.vertices[0], c.vertices[1]);
      if (f.current().contains(e)) {
        if (ei.u < 0) ei = e;
      } else if (et.u < 0) {
        et = e;
      }
    }
    if (ei.u < 0 || et.u < 0) fail(ErrorCode::Internal, "unbalanced single edges");
    const Matching& cur = f.current();
    bool done = false;
    for (int p : {ei.u, ei.v}) {
      for (int q : {et.u, et.v}) {
        if (!v.adj(p, q)) continue;
        f.slide(ei.other(p), p, q);
        f.slide(p, q, et.other(q));
        done = true;
        break;
      }
      if (done) break;
    }
    for (int p : {ei.u, ei.v}) {
      if (done) break;
      for (int q : {et.u, et.v}) {
        if (done) break;
        for (int w : v.verts) {
          if (w == ei.u || w == ei.v || w == et.u || w == et.v) continue;
          if (!v.adj(p, w) || !v.adj(w, q)) continue;
          int op = ei.other(p), oq = et.other(q);
          if (!cur.covers(w)) {
            f.slide(op, p, w);
            f.slide(p, w, q);
            f.slide(w, q, oq);
          } else {
            int w2 = mate_in(cur, w);
            f.slide(w2, w, q);
            f.slide(w, q, oq);
            f.slide(op, p, w);
            f.slide(p, w, w2);
          }
          done = true;
          break;
        }
      }
    }
    if (!done) fail(ErrorCode::InvalidArgument, "edges at distance above two; graph is not a connected cograph");
  }
  return concat(f.take_moves(), reversed(b.moves()));
}

/// Removes every edge inside B from the builder's matching (other than
/// `keep`), using an A-A edge for a flip or a free A vertex for a slide.
void clear_b_edges(const View& v, SequenceBuilder& s, std::optional<Edge> keep) {
  for (;;) {
    const Matching& m = s.current();
    std::optional<Edge> bad;
    std::optional<Edge> aa;
    for (int u : v.verts) {
      int w = m.mate(u);
      if (w < u) continue;
      Edge e{u, w};
      if (v.is_b(u) && v.is_b(w) && !(keep && *keep == e) && !bad) bad = e;
      if (!v.is_b(u) && !v.is_b(w) && !aa) aa = e;
    }
    if (!bad) return;
    int a = bad->u, b = bad->v;
    if (aa) {
      s.flip(a, b, aa->u, aa->v);
      continue;
    }
    auto free_a = std::find_if(v.verts.begin(), v.verts.end(), [&](int x) { return !v.is_b(x) && !m.covers(x); });
    if (free_a == v.verts.end()) fail(ErrorCode::Internal, "no free vertex in A");
    s.slide(b, a, *free_a);
  }
}

/// Windows of `len` consecutive vertices along a difference component, in
/// both directions.
void for_windows(const DiffComponent& c, std::size_t len, const std::function<bool(const std::vector<int>&)>& fn,
                 bool& hit) {
  const auto& vs = c.vertices;
  std::size_t sz = vs.size();
  if (len > sz) return;
  bool cyc = c.kind == DiffComponent::Kind::EvenCycle;
  std::size_t starts = cyc ? sz : sz - len + 1;
  std::vector<int> w(len);
  for (int dir : {1, -1}) {
    for (std::size_t s = 0; s < starts; ++s) {
      for (std::size_t j = 0; j < len; ++j) {
        std::size_t idx;
        if (dir == 1) idx = (s + j) % sz;
        else idx = cyc ? (s + sz - j % sz) % sz : sz - 1 - (s + j);
        w[j] = vs[idx];
      }
      if (fn(w)) {
        hit = true;
        return;
      }
    }
  }
}

/// Moves from an anchor (exactly one edge e inside B) to x.
std::vector<Move> b_edge_route(const View& v, const Matching& anchor, Edge e, const Matching& x) {
  const Graph& g = *v.g;
  SequenceBuilder m(g, anchor);
  SequenceBuilder s(g, x);
  clear_b_edges(v, s, std::nullopt);
  const int xe = e.u, ye = e.v;
  const int cap = 10 * (symmetric_difference_size(m.current(), s.current()) + 4);
  auto is_a = [&](int u) { return !v.is_b(u); };

  for (int iter = 0;; ++iter) {
    if (iter > cap) fail(ErrorCode::Internal, "anchor normalisation did not converge");
    if (!m.current().contains(e)) fail(ErrorCode::Internal, "anchor lost its edge inside B");
    auto comps = symmetric_difference_components(m.current(), s.current());
    bool hit = false;

    // A cycle entirely in A is rotated through e.
    for (const auto& c : comps) {
      if (c.kind != DiffComponent::Kind::EvenCycle) continue;
      if (!std::all_of(c.vertices.begin(), c.vertices.end(), is_a)) continue;
      const std::size_t len = c.vertices.size();
      auto u = [&](std::size_t j) { return c.vertices[j % len]; };
      const std::size_t l = len / 2;
      m.flip(xe, ye, u(len), u(1));
      for (std::size_t j = 1; j < l; ++j) m.flip(xe, u(2 * j - 1), u(2 * j), u(2 * j + 1));
      m.flip(xe, u(2 * l - 1), u(2 * l), ye);
      hit = true;
      break;
    }
    if (hit) continue;

    auto flip_on_holder = [&](const std::vector<int>& w) {
      SequenceBuilder& side = m.current().contains(w[0], w[1]) ? m : s;
      side.flip(w[0], w[1], w[2], w[3]);
      return true;
    };
    for (const auto& c : comps) {
      for_windows(
          c, 4,
          [&](const std::vector<int>& w) {
            if (!(v.is_b(w[0]) && is_a(w[1]) && is_a(w[2]) && is_a(w[3]))) return false;
            return flip_on_holder(w);
          },
          hit);
      if (hit) break;
    }
    if (hit) continue;
    for (const auto& c : comps) {
      for_windows(
          c, 4,
          [&](const std::vector<int>& w) {
            for (int j = 0; j < 3; ++j)
              if (v.is_b(w[j]) == v.is_b(w[j + 1])) return false;
            return flip_on_holder(w);
          },
          hit);
      if (hit) break;
    }
    if (hit) continue;
    for (const auto& c : comps) {
      for_windows(
          c, 6,
          [&](const std::vector<int>& w) {
            int uu = w[0], vv = w[1], ww = w[2], xx = w[3], yy = w[4], zz = w[5];
            if (!m.current().contains(uu, vv)) return false;
            if (!(v.is_b(uu) && v.is_b(xx) && is_a(vv) && is_a(ww) && is_a(yy) && is_a(zz))) return false;
            m.flip(xe, ye, zz, yy);
            m.flip(xx, ww, xe, yy);
            m.flip(ye, zz, uu, vv);
            m.flip(xe, ww, vv, ye);
            return true;
          },
          hit);
      if (hit) break;
    }
    if (!hit) break;
  }

  for (const auto& c : symmetric_difference_components(m.current(), s.current())) {
    if (c.kind != DiffComponent::Kind::EvenCycle) continue;
    bool through_e = std::find(c.vertices.begin(), c.vertices.end(), xe) != c.vertices.end() &&
                     std::find(c.vertices.begin(), c.vertices.end(), ye) != c.vertices.end();
    if (c.vertices.size() != 4 || !through_e)
      fail(ErrorCode::Internal, "cycle left after normalisation: " + vertex_list(c.vertices));
    m.push(make_flip(c.vertices));
  }
  auto middle = cycle_free_moves(v, m.current(), s.current());
  return concat(concat(m.take_moves(), middle), reversed(s.moves()));
}

/// Moves from an anchor leaving b free to x; v ignores edges inside B.
std::vector<Move> free_b_route(const View& v, const Matching& anchor, int fb, const Matching& x) {
  SequenceBuilder m(*v.g, anchor);
  for (;;) {
    auto comps = symmetric_difference_components(m.current(), x);
    auto it = std::find_if(comps.begin(), comps.end(),
                           [](const DiffComponent& c) { return c.kind == DiffComponent::Kind::EvenCycle; });
    if (it == comps.end()) break;
    const auto& c = it->vertices;
    const std::size_t len = c.size();
    std::size_t i = 0;
    while (i < len && v.is_b(c[i])) ++i;
    if (i == len) fail(ErrorCode::Internal, "cycle inside B");
    bool fwd = m.current().contains(c[i], c[(i + 1) % len]);
    std::vector<int> xs(len);
    for (std::size_t j = 0; j < len; ++j) xs[j] = fwd ? c[(i + j) % len] : c[(i + len - j) % len];
    const std::size_t t = len / 2;
    m.slide(xs[1], xs[0], fb);
    for (std::size_t j = 1; j < t; ++j) m.slide(xs[2 * j + 1], xs[2 * j], xs[2 * j - 1]);
    m.slide(fb, xs[0], xs[len - 1]);
  }
  auto tail = cycle_free_moves(v, m.current(), x);
  return concat(m.take_moves(), tail);
}

struct Anchor {
  Conditions cond;
  Matching matching;
  Edge e{-1, -1};
  int free_b = -1;
};

std::vector<Edge> first_edges(const Matching& m, int k) {
  auto es = m.edges();
  es.resize(static_cast<std::size_t>(k));
  return es;
}

Anchor compute_anchor(const Graph& g, std::span<const int> vs, const RootPartition& part, int k) {
  View full(g, vs, part, false);
  Graph vg = full.graph();
  Anchor out;
  out.matching = Matching(g.n());
  if (k >= 1) {
    for (const Edge& e : vg.edges()) {
      if (!full.is_b(e.u) || !full.is_b(e.v)) continue;
      int rm[2] = {e.u, e.v};
      if (max_matching_size_without(vg, rm) < k - 1) continue;
      out.cond.c1 = true;
      out.e = e;
      auto rest = max_matching(full.graph(rm));
      auto es = first_edges(rest, k - 1);
      es.push_back(e);
      SequenceBuilder s(g, Matching::from_edges(g.n(), es));
      clear_b_edges(full, s, e);
      out.matching = s.current();
      break;
    }
  }
  for (int b : part.b) {
    int rm[1] = {b};
    if (max_matching_size_without(vg, rm) < k) continue;
    out.cond.c2 = true;
    if (!out.cond.c1) {
      out.free_b = b;
      View dropped(g, vs, part, true);
      out.matching = Matching::from_edges(g.n(), first_edges(max_matching(dropped.graph(rm)), k));
    }
    break;
  }
  return out;
}

void check_partition(const Graph& g, const RootPartition& part) {
  std::vector<char> seen(g.n(), 0);
  for (const auto* side : {&part.a, &part.b})
    for (int v : *side) {
      if (v < 0 || v >= g.n() || seen[v]) fail(ErrorCode::InvalidArgument, "partition is not a vertex partition");
      seen[v] = 1;
    }
  if (part.a.empty() || part.b.empty() || part.a.size() < part.b.size())
    fail(ErrorCode::InvalidArgument, "partition needs non-empty sides with |A| >= |B|");
  for (int a : part.a)
    for (int b : part.b)
      if (!g.has_edge(a, b)) fail(ErrorCode::InvalidArgument, "A is not complete to B");
}

std::vector<int> all_vertices(const Graph& g, const RootPartition& part) {
  std::vector<int> vs = part.a;
  vs.insert(vs.end(), part.b.begin(), part.b.end());
  std::sort(vs.begin(), vs.end());
  if (static_cast<int>(vs.size()) != g.n()) fail(ErrorCode::InvalidArgument, "partition does not cover the graph");
  return vs;
}

void check_pair(const Graph& g, const Matching& m1, const Matching& m2) {
  if (m1.n() != g.n() || m2.n() != g.n()) fail(ErrorCode::VertexOutOfRange, "matching and graph sizes differ");
  for (const auto* m : {&m1, &m2})
    for (const Edge& e : m->edges())
      if (!g.has_edge(e.u, e.v))
        fail(ErrorCode::EdgeNotInGraph, "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
  if (m1.size() != m2.size()) fail(ErrorCode::SizeMismatch, "matchings differ in size");
}

}  // namespace

std::vector<int> Cotree::leaves(int node) const {
  std::vector<int> out;
  std::vector<int> stack{node};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    const Node& nd = nodes[x];
    if (nd.kind == Node::Kind::Leaf) {
      out.push_back(nd.vertex);
    } else {
      stack.push_back(nd.left);
      stack.push_back(nd.right);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::array<int, 4>> find_induced_p4(const Graph& g) {
  for (const Edge& mid : g.edges()) {
    for (int bb : {mid.u, mid.v}) {
      int cc = mid.other(bb);
      for (int a : g.neighbors(bb)) {
        if (a == cc || g.has_edge(a, cc)) continue;
        for (int d : g.neighbors(cc)) {
          if (d == bb || d == a || g.has_edge(d, bb) || g.has_edge(a, d)) continue;
          return std::array<int, 4>{a, bb, cc, d};
        }
      }
    }
  }
  return std::nullopt;
}

Cotree build_cotree(const Graph& g) {
  Cotree t;
  if (g.n() == 0) return t;
  std::vector<int> vs(static_cast<std::size_t>(g.n()));
  for (int i = 0; i < g.n(); ++i) vs[i] = i;
  t.root = build_node(g, vs, t);
  return t;
}

RootPartition root_partition(const Graph& g) {
  if (g.n() < 2) fail(ErrorCode::InvalidArgument, "a single vertex has no join split");
  build_cotree(g);
  if (connected_components(g).size() != 1) fail(ErrorCode::InvalidArgument, "graph is disconnected");
  std::vector<int> vs(static_cast<std::size_t>(g.n()));
  for (int i = 0; i < g.n(); ++i) vs[i] = i;
  return split_join(g, vs);
}

Conditions check_conditions(const Graph& g, const RootPartition& part, int k) {
  check_partition(g, part);
  return compute_anchor(g, all_vertices(g, part), part, k).cond;
}

ReconfigSequence transform_cycle_free(const Graph& g, const Matching& m1, const Matching& m2) {
  check_pair(g, m1, m2);
  std::vector<int> vs(static_cast<std::size_t>(g.n()));
  for (int i = 0; i < g.n(); ++i) vs[i] = i;
  View v(g, vs, RootPartition{}, false);
  return {Mode::flip_slide(), cycle_free_moves(v, m1, m2)};
}

ReconfigSequence transform_with_B_edge(const Graph& g, const RootPartition& part, const Matching& m1,
                                       const Matching& m2) {
  check_pair(g, m1, m2);
  check_partition(g, part);
  auto vs = all_vertices(g, part);
  Anchor an = compute_anchor(g, vs, part, m1.size());
  if (!an.cond.c1) fail(ErrorCode::ConditionViolated, "no matching of this size uses an edge inside B");
  View v(g, vs, part, false);
  auto to_ini = b_edge_route(v, an.matching, an.e, m1);
  auto to_tar = b_edge_route(v, an.matching, an.e, m2);
  return {Mode::flip_slide(), concat(reversed(to_ini), to_tar)};
}

ReconfigSequence transform_with_free_B_vertex(const Graph& g, const RootPartition& part, const Matching& m1,
                                              const Matching& m2) {
  check_pair(g, m1, m2);
  check_partition(g, part);
  auto vs = all_vertices(g, part);
  Anchor an = compute_anchor(g, vs, part, m1.size());
  if (an.cond.c1) fail(ErrorCode::ConditionViolated, "a matching of this size uses an edge inside B");
  if (!an.cond.c2) fail(ErrorCode::ConditionViolated, "every matching of this size covers B");
  View v(g, vs, part, true);
  auto to_ini = free_b_route(v, an.matching, an.free_b, m1);
  auto to_tar = free_b_route(v, an.matching, an.free_b, m2);
  return {Mode::flip_slide(), concat(reversed(to_ini), to_tar)};
}

struct CographSolver::Piece {
  std::vector<int> vertices;
  RootPartition part;
  std::map<int, Anchor> anchors;
};

CographSolver::CographSolver(const Graph& g) : g_(g) { build_cotree(g_); }

CographSolver::~CographSolver() = default;

CographSolver::Piece& CographSolver::piece(const std::vector<int>& vertices) {
  auto& slot = pieces_[vertices];
  if (!slot) {
    slot = std::make_unique<Piece>();
    slot->vertices = vertices;
    slot->part = split_join(g_, vertices);
  }
  return *slot;
}

std::optional<std::vector<Move>> CographSolver::solve_set(const std::vector<int>& vertices, const Matching& m_ini,
                                                          const Matching& m_tar, bool build) {
  std::vector<Move> out;
  for (const auto& comp : connected_components(g_, vertices)) {
    Matching a = restrict_to(m_ini, comp);
    Matching b = restrict_to(m_tar, comp);
    if (a.size() != b.size()) return std::nullopt;
    if (comp.size() == 1 || a == b) continue;
    Piece& p = piece(comp);
    const int k = a.size();
    auto it = p.anchors.find(k);
    if (it == p.anchors.end()) it = p.anchors.emplace(k, compute_anchor(g_, comp, p.part, k)).first;
    const Anchor& an = it->second;

    if (an.cond.c1 || an.cond.c2) {
      if (!build) continue;
      std::vector<Move> to_ini, to_tar;
      if (an.cond.c1) {
        View v(g_, comp, p.part, false);
        to_ini = b_edge_route(v, an.matching, an.e, a);
        to_tar = b_edge_route(v, an.matching, an.e, b);
      } else {
        View v(g_, comp, p.part, true);
        to_ini = free_b_route(v, an.matching, an.free_b, a);
        to_tar = free_b_route(v, an.matching, an.free_b, b);
      }
      out = concat(std::move(out), reversed(to_ini));
      out = concat(std::move(out), to_tar);
      continue;
    }

    // Every matching of this size covers B from A: recurse on G[A].
    auto sub = solve_set(p.part.a, restrict_to(a, p.part.a), restrict_to(b, p.part.a), build);
    if (!sub) return std::nullopt;
    if (!build) continue;

    std::vector<char> in_b(g_.n(), 0);
    for (int x : p.part.b) in_b[x] = 1;
    SequenceBuilder cur(g_, a);
    for (const Move& mv : *sub) {
      const auto* s = std::get_if<Slide>(&mv);
      if (!s) {
        cur.push(mv);
        continue;
      }
      int pv = s->pivot();
      int u = s->removed.other(pv), w = s->added.other(pv);
      if (cur.current().covers(w)) cur.flip(u, pv, w, cur.current().mate(w));
      else cur.push(mv);
    }
    auto to_b = [&](const Matching& m, int x) { return m.covers(x) && in_b[m.mate(x)]; };
    std::vector<int> surplus, deficit;
    for (int x : p.part.a) {
      bool now = to_b(cur.current(), x), want = to_b(b, x);
      if (now && !want) surplus.push_back(x);
      if (!now && want) deficit.push_back(x);
    }
    if (surplus.size() != deficit.size()) fail(ErrorCode::Internal, "A-B assignment counts differ");
    for (std::size_t i = 0; i < surplus.size(); ++i) cur.slide(surplus[i], cur.current().mate(surplus[i]), deficit[i]);
    for (int y : p.part.b) {
      if (!b.covers(y)) continue;
      int want = b.mate(y), have = cur.current().mate(y);
      if (have == want) continue;
      cur.flip(y, have, cur.current().mate(want), want);
    }
    if (!(cur.current() == b)) fail(ErrorCode::Internal, "lift did not reach the target");
    out = concat(std::move(out), cur.moves());
  }
  return out;
}

bool CographSolver::decide(const Matching& m_ini, const Matching& m_tar) {
  check_pair(g_, m_ini, m_tar);
  std::vector<int> vs(static_cast<std::size_t>(g_.n()));
  for (int i = 0; i < g_.n(); ++i) vs[i] = i;
  return solve_set(vs, m_ini, m_tar, false).has_value();
}

std::optional<ReconfigSequence> CographSolver::solve(const Matching& m_ini, const Matching& m_tar) {
  check_pair(g_, m_ini, m_tar);
  std::vector<int> vs(static_cast<std::size_t>(g_.n()));
  for (int i = 0; i < g_.n(); ++i) vs[i] = i;
  auto moves = solve_set(vs, m_ini, m_tar, true);
  if (!moves) return std::nullopt;
  ReconfigSequence seq{Mode::flip_slide(), std::move(*moves)};
  if (seq.moves.size() > static_cast<std::size_t>(kCographLengthFactor) * static_cast<std::size_t>(g_.n()))
    fail(ErrorCode::Internal, "sequence of length " + std::to_string(seq.moves.size()) + " exceeds the bound");
  if (m_ini.is_perfect() && m_tar.is_perfect()) {
    for (const Move& mv : seq.moves)
      if (std::holds_alternative<Slide>(mv)) fail(ErrorCode::Internal, "slide between perfect matchings");
    seq.mode = Mode::flip();
  }
  Verdict vd = verify_sequence(g_, m_ini, seq, m_tar);
  if (!vd.accepted) fail(ErrorCode::Internal, "constructed sequence rejected at step " + std::to_string(vd.step));
  return seq;
}

CographResult solve_cograph(const Graph& g, const Matching& m_ini, const Matching& m_tar) {
  CographSolver solver(g);
  CographResult r;
  r.sequence = solver.solve(m_ini, m_tar);
  r.yes = r.sequence.has_value();
  return r;
}

}  // namespace matchflip
