#include "matchflip/hardness.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

#include "matchflip/error.hpp"
#include "matchflip/reconfig.hpp"

namespace matchflip {

namespace {

std::string edge_name(int e) { return "edge " + std::to_string(e); }

/// Sum of in-coming weights per vertex.
std::vector<int> in_weights(const NclMachine& m, const NclConfiguration& c) {
  std::vector<int> w(m.types.size(), 0);
  for (std::size_t e = 0; e < m.edges.size(); ++e)
    if (c.head[e] != NclConfiguration::kNeutral) w[static_cast<std::size_t>(c.head[e])] += m.edges[e].weight;
  return w;
}

void check_orients(const NclMachine& m, const NclConfiguration& c) {
  if (c.head.size() != m.edges.size())
    fail(ErrorCode::InvalidConfiguration, "configuration orients " + std::to_string(c.head.size()) + " of " +
                                              std::to_string(m.edges.size()) + " edges");
  for (std::size_t e = 0; e < m.edges.size(); ++e) {
    int h = c.head[e];
    if (h != NclConfiguration::kNeutral && h != m.edges[e].u && h != m.edges[e].v)
      fail(ErrorCode::InvalidConfiguration, edge_name(static_cast<int>(e)) + " points to a non-endpoint");
  }
}

/// Port of each edge at its u and v ends: AND puts the weight-2 edge first.
std::vector<std::array<int, 2>> assign_ports(const NclMachine& m) {
  std::vector<std::array<int, 2>> ports(m.edges.size(), {-1, -1});
  std::vector<int> next(m.types.size(), 0);
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t e = 0; e < m.edges.size(); ++e) {
      for (int side = 0; side < 2; ++side) {
        int x = side == 0 ? m.edges[e].u : m.edges[e].v;
        bool is_and = m.types[static_cast<std::size_t>(x)] == NclVertexType::And;
        // AND: the weight-2 edge in the first pass, weight-1 edges after.
        bool now = is_and ? (pass == 0) == (m.edges[e].weight == 2) : pass == 0;
        if (now) ports[e][static_cast<std::size_t>(side)] = next[static_cast<std::size_t>(x)]++;
      }
    }
  }
  return ports;
}

GadgetTemplate make_template(int n, std::vector<RawEdge> edges, std::vector<RawEdge> orange,
                             std::vector<std::array<int, 2>> ports, std::vector<int> color) {
  GadgetTemplate t;
  t.vertices = n;
  for (auto [a, b] : edges) t.edges.push_back(Edge::of(a, b));
  for (auto [a, b] : orange) t.orange.push_back(Edge::of(a, b));
  std::sort(t.edges.begin(), t.edges.end());
  std::sort(t.orange.begin(), t.orange.end());
  t.ports = std::move(ports);
  t.color = std::move(color);
  return t;
}

/// Bitmask of the ports a gadget does not cover.
int uncovered_mask(const std::vector<bool>& inward, GadgetKind kind) {
  int mask = 0;
  for (std::size_t p = 0; p < inward.size(); ++p) {
    // Vertex gadgets cover inward ports; the edge gadget covers the ports
    // its vertices do not claim.
    bool covered = kind == GadgetKind::Edge ? !inward[p] : inward[p];
    if (!covered) mask |= 1 << p;
  }
  return mask;
}

/// First perfect matching of the covered part of a template, per mask of
/// uncovered ports; nullopt when there is none.
const std::vector<std::optional<std::vector<Edge>>>& local_table(GadgetKind kind) {
  static const auto tables = [] {
    std::array<std::vector<std::optional<std::vector<Edge>>>, 3> out;
    for (GadgetKind kd : {GadgetKind::Edge, GadgetKind::And, GadgetKind::Or}) {
      const GadgetTemplate& t = gadget_template(kd);
      auto& tab = out[static_cast<std::size_t>(kd)];
      int ports = static_cast<int>(t.ports.size());
      for (int mask = 0; mask < (1 << ports); ++mask) {
        std::vector<char> gone(static_cast<std::size_t>(t.vertices), 0);
        int covered = t.vertices;
        for (int p = 0; p < ports; ++p)
          if (mask >> p & 1) {
            gone[t.ports[p][0]] = gone[t.ports[p][1]] = 1;
            covered -= 2;
          }
        std::vector<Edge> kept;
        for (const Edge& e : t.edges)
          if (!gone[e.u] && !gone[e.v]) kept.push_back(e);
        Graph h(t.vertices, std::span<const Edge>(kept));
        auto ms = enumerate_matchings(h, MatchingTarget::of_size(covered / 2));
        if (ms.empty()) tab.emplace_back(std::nullopt);
        else tab.emplace_back(ms.front().edges());
      }
    }
    return out;
  }();
  return tables[static_cast<std::size_t>(kind)];
}

void check_structure(const GadgetInstance& inst) {
  const Graph& g = inst.graph;
  for (const Edge& e : g.edges())
    if (inst.color[e.u] == inst.color[e.v]) fail(ErrorCode::Internal, "gadget graph is not bipartite");
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) > 5) fail(ErrorCode::Internal, "gadget graph has degree above five");
  for (const Gadget& gd : inst.gadgets)
    for (const auto& p : gd.ports)
      if (inst.color[p[0]] == inst.color[p[1]]) fail(ErrorCode::Internal, "connector pair on one side");
}

/// Path a = w0, w1, ..., w_len = b with fresh vertices from `next`.
std::vector<int> fresh_path(int a, int b, int len, int& next) {
  std::vector<int> p{a};
  for (int i = 1; i < len; ++i) p.push_back(next++);
  p.push_back(b);
  return p;
}

}  // namespace

void validate_machine(const NclMachine& m) {
  const int n = m.vertex_count();
  std::vector<std::vector<int>> weights(static_cast<std::size_t>(n));
  for (std::size_t e = 0; e < m.edges.size(); ++e) {
    const NclEdge& ed = m.edges[e];
    if (ed.u < 0 || ed.u >= n || ed.v < 0 || ed.v >= n)
      fail(ErrorCode::MalformedMachine, edge_name(static_cast<int>(e)) + " has an endpoint out of range");
    if (ed.u == ed.v) fail(ErrorCode::MalformedMachine, edge_name(static_cast<int>(e)) + " is a loop");
    if (ed.weight != 1 && ed.weight != 2)
      fail(ErrorCode::MalformedMachine, edge_name(static_cast<int>(e)) + " has weight " + std::to_string(ed.weight));
    weights[static_cast<std::size_t>(ed.u)].push_back(ed.weight);
    weights[static_cast<std::size_t>(ed.v)].push_back(ed.weight);
  }
  for (int v = 0; v < n; ++v) {
    auto& w = weights[static_cast<std::size_t>(v)];
    if (w.size() != 3)
      fail(ErrorCode::MalformedMachine, "vertex " + std::to_string(v) + " has degree " + std::to_string(w.size()));
    std::sort(w.begin(), w.end());
    bool is_and = m.types[static_cast<std::size_t>(v)] == NclVertexType::And;
    std::vector<int> want = is_and ? std::vector<int>{1, 1, 2} : std::vector<int>{2, 2, 2};
    if (w != want) fail(ErrorCode::MalformedMachine, "vertex " + std::to_string(v) + " has wrong incident weights");
  }
}

bool validate_ncl(const NclMachine& m, const NclConfiguration& c) {
  validate_machine(m);
  check_orients(m, c);
  auto w = in_weights(m, c);
  return std::all_of(w.begin(), w.end(), [](int x) { return x >= 2; });
}

std::vector<NclConfiguration> valid_configurations(const NclMachine& m) {
  validate_machine(m);
  const int e = m.edge_count();
  if (e > 24) fail(ErrorCode::InvalidArgument, "too many edges to enumerate");
  std::vector<NclConfiguration> out;
  NclConfiguration c;
  c.head.resize(static_cast<std::size_t>(e));
  for (std::uint32_t bits = 0; bits < (1u << e); ++bits) {
    for (int i = 0; i < e; ++i) c.head[i] = (bits >> i & 1) ? m.edges[i].v : m.edges[i].u;
    auto w = in_weights(m, c);
    if (std::all_of(w.begin(), w.end(), [](int x) { return x >= 2; })) out.push_back(c);
  }
  return out;
}

bool ncl_reachable(const NclMachine& m, const NclConfiguration& c_ini, const NclConfiguration& c_tar) {
  for (const auto* c : {&c_ini, &c_tar}) {
    if (!validate_ncl(m, *c)) fail(ErrorCode::InvalidConfiguration, "configuration is not valid");
    for (int h : c->head)
      if (h == NclConfiguration::kNeutral) fail(ErrorCode::InvalidConfiguration, "neutral edge");
  }
  const int e = m.edge_count();
  if (e > 30) fail(ErrorCode::InvalidArgument, "too many edges to search");
  auto bits_of = [&](const NclConfiguration& c) {
    std::uint32_t b = 0;
    for (int i = 0; i < e; ++i)
      if (c.head[i] == m.edges[i].v) b |= 1u << i;
    return b;
  };
  auto valid = [&](std::uint32_t b) {
    std::vector<int> w(m.types.size(), 0);
    for (int i = 0; i < e; ++i) w[(b >> i & 1) ? m.edges[i].v : m.edges[i].u] += m.edges[i].weight;
    return std::all_of(w.begin(), w.end(), [](int x) { return x >= 2; });
  };
  std::uint32_t start = bits_of(c_ini), goal = bits_of(c_tar);
  std::unordered_set<std::uint32_t> seen{start};
  std::deque<std::uint32_t> queue{start};
  while (!queue.empty()) {
    std::uint32_t b = queue.front();
    queue.pop_front();
    if (b == goal) return true;
    for (int i = 0; i < e; ++i) {
      std::uint32_t nb = b ^ (1u << i);
      if (!seen.count(nb) && valid(nb)) {
        seen.insert(nb);
        queue.push_back(nb);
      }
    }
  }
  return false;
}

std::string to_string(GadgetKind kind) {
  switch (kind) {
    case GadgetKind::Edge: return "edge";
    case GadgetKind::And: return "and";
    case GadgetKind::Or: return "or";
  }
  return "?";
}

const GadgetTemplate& gadget_template(GadgetKind kind) {
  // Edge gadget: 0,1 connectors at v; 2..5 the middle column top to
  // bottom; 6,7 connectors at w.
  static const GadgetTemplate edge = make_template(
      8, {{0, 2}, {2, 6}, {7, 5}, {5, 1}, {0, 3}, {3, 6}, {1, 4}, {4, 7}, {3, 4}}, {{0, 2}, {7, 5}, {3, 4}},
      {{{0, 1}}, {{6, 7}}}, {0, 1, 1, 1, 0, 0, 0, 1});
  // AND: 0,1 weight-2 connectors; 2,3 and 4,5 weight-1 connectors; 6,7
  // internal.
  static const GadgetTemplate and_gadget = make_template(
      8, {{0, 1}, {1, 7}, {7, 4}, {4, 5}, {5, 3}, {3, 2}, {2, 6}, {6, 0}, {5, 1}, {3, 0}}, {{7, 4}, {5, 3}, {2, 6}},
      {{{0, 1}}, {{2, 3}}, {{5, 4}}}, {0, 1, 0, 1, 1, 0, 1, 0});
  // OR: three connector pairs 0,1 / 2,3 / 4,5; 6,7 internal.
  static const GadgetTemplate or_gadget = make_template(
      8, {{0, 1}, {1, 4}, {4, 5}, {5, 3}, {3, 2}, {2, 0}, {0, 6}, {6, 3}, {1, 7}, {7, 5}, {2, 7}, {4, 6}},
      {{1, 4}, {5, 3}, {2, 0}}, {{{0, 1}}, {{3, 2}}, {{4, 5}}}, {0, 1, 1, 0, 0, 1, 1, 0});
  switch (kind) {
    case GadgetKind::Edge: return edge;
    case GadgetKind::And: return and_gadget;
    case GadgetKind::Or: return or_gadget;
  }
  return edge;
}

GadgetInstance build_gadget_graph(const NclMachine& m) {
  validate_machine(m);
  GadgetInstance inst;
  inst.machine = m;
  inst.edge_ports = assign_ports(m);
  const int nv = m.vertex_count(), ne = m.edge_count();
  const int n = 8 * nv + 4 * ne;
  inst.color.assign(static_cast<std::size_t>(n), 0);

  for (int v = 0; v < nv; ++v) {
    GadgetKind kind = m.types[static_cast<std::size_t>(v)] == NclVertexType::And ? GadgetKind::And : GadgetKind::Or;
    const GadgetTemplate& t = gadget_template(kind);
    Gadget gd;
    gd.kind = kind;
    gd.ncl_id = v;
    for (int i = 0; i < 8; ++i) {
      gd.vertices.push_back(8 * v + i);
      inst.color[8 * v + i] = t.color[i];
    }
    for (const Edge& e : t.edges) gd.edges.push_back(Edge::of(8 * v + e.u, 8 * v + e.v));
    for (const auto& p : t.ports) gd.ports.push_back({8 * v + p[0], 8 * v + p[1]});
    for (const Edge& e : t.orange) inst.orange.push_back(Edge::of(8 * v + e.u, 8 * v + e.v));
    inst.gadgets.push_back(std::move(gd));
  }
  const GadgetTemplate& et = gadget_template(GadgetKind::Edge);
  for (int e = 0; e < ne; ++e) {
    const NclEdge& ed = m.edges[static_cast<std::size_t>(e)];
    const auto& pu = inst.gadgets[ed.u].ports[inst.edge_ports[e][0]];
    const auto& pv = inst.gadgets[ed.v].ports[inst.edge_ports[e][1]];
    std::array<int, 8> local{pu[0], pu[1], 0, 0, 0, 0, pv[0], pv[1]};
    for (int i = 2; i < 6; ++i) {
      local[i] = 8 * nv + 4 * e + (i - 2);
      inst.color[local[i]] = et.color[i];
    }
    Gadget gd;
    gd.kind = GadgetKind::Edge;
    gd.ncl_id = e;
    gd.vertices.assign(local.begin(), local.end());
    for (const Edge& x : et.edges) gd.edges.push_back(Edge::of(local[x.u], local[x.v]));
    gd.ports = {pu, pv};
    for (const Edge& x : et.orange) inst.orange.push_back(Edge::of(local[x.u], local[x.v]));
    inst.gadgets.push_back(std::move(gd));
  }

  std::vector<Edge> all;
  for (const Gadget& gd : inst.gadgets) all.insert(all.end(), gd.edges.begin(), gd.edges.end());
  inst.graph = Graph(n, std::span<const Edge>(all));
  inst.edge_owner.assign(inst.graph.m(), -1);
  for (std::size_t i = 0; i < inst.gadgets.size(); ++i)
    for (const Edge& e : inst.gadgets[i].edges) inst.edge_owner[*inst.graph.edge_id(e.u, e.v)] = static_cast<int>(i);
  check_structure(inst);
  return inst;
}

Matching map_matching(const GadgetInstance& sub, const Matching& m) {
  std::map<Edge, std::size_t> by_original;
  for (std::size_t i = 0; i < sub.subdivisions.size(); ++i) by_original[sub.subdivisions[i].original] = i;
  std::vector<char> used(sub.subdivisions.size(), 0);
  std::vector<Edge> out;
  for (const Edge& e : m.edges()) {
    auto it = by_original.find(e);
    if (it == by_original.end()) {
      out.push_back(e);
      continue;
    }
    used[it->second] = 1;
    const auto& p = sub.subdivisions[it->second].path;
    for (std::size_t i = 0; i + 1 < p.size(); i += 2) out.push_back(Edge::of(p[i], p[i + 1]));
  }
  for (std::size_t s = 0; s < sub.subdivisions.size(); ++s) {
    if (used[s]) continue;
    const auto& p = sub.subdivisions[s].path;
    for (std::size_t i = 1; i + 2 < p.size(); i += 2) out.push_back(Edge::of(p[i], p[i + 1]));
  }
  return Matching::from_edges(sub.graph.n(), std::span<const Edge>(out));
}

Matching encode(const GadgetInstance& inst, const NclConfiguration& c) {
  const NclMachine& m = inst.machine;
  if (!validate_ncl(m, c)) fail(ErrorCode::InvalidConfiguration, "configuration is not valid");
  for (int h : c.head)
    if (h == NclConfiguration::kNeutral) fail(ErrorCode::InvalidConfiguration, "neutral edges have no encoding");
  const int nv = m.vertex_count();
  std::vector<Edge> edges;
  auto place = [&](const Gadget& gd, const std::vector<bool>& inward) {
    const auto& tab = local_table(gd.kind);
    const auto& local = tab[static_cast<std::size_t>(uncovered_mask(inward, gd.kind))];
    if (!local) fail(ErrorCode::Internal, "legal gadget state without a perfect matching");
    // Template ids are the first eight vertices of a placed gadget.
    for (const Edge& e : *local) edges.push_back(Edge::of(gd.vertices[e.u], gd.vertices[e.v]));
  };
  for (int v = 0; v < nv; ++v) {
    std::vector<bool> inward(3, false);
    for (std::size_t e = 0; e < m.edges.size(); ++e) {
      if (c.head[e] != v) continue;
      int side = m.edges[e].u == v ? 0 : 1;
      inward[static_cast<std::size_t>(inst.edge_ports[e][static_cast<std::size_t>(side)])] = true;
    }
    place(inst.gadgets[static_cast<std::size_t>(v)], inward);
  }
  for (std::size_t e = 0; e < m.edges.size(); ++e)
    place(inst.gadgets[nv + e], {c.head[e] == m.edges[e].u, c.head[e] == m.edges[e].v});

  int base_n = 8 * nv + 4 * m.edge_count();
  Matching base = Matching::from_edges(base_n, std::span<const Edge>(edges));
  if (inst.subdivisions.empty()) return base;
  return map_matching(inst, base);
}

NclConfiguration decode(const GadgetInstance& inst, const Matching& mm) {
  const NclMachine& m = inst.machine;
  const Graph& g = inst.graph;
  if (mm.n() != g.n() || !mm.is_perfect()) fail(ErrorCode::InvalidConfiguration, "not a perfect matching");
  auto owner_of = [&](int x) {
    auto id = g.edge_id(x, mm.mate(x));
    if (!id) fail(ErrorCode::InvalidConfiguration, "matching edge outside the graph");
    return inst.edge_owner[static_cast<std::size_t>(*id)];
  };
  NclConfiguration c;
  const int nv = m.vertex_count();
  for (std::size_t e = 0; e < m.edges.size(); ++e) {
    const Gadget& eg = inst.gadgets[nv + e];
    bool claimed[2];
    for (int side = 0; side < 2; ++side) {
      int vtx = side == 0 ? m.edges[e].u : m.edges[e].v;
      const auto& p = eg.ports[static_cast<std::size_t>(side)];
      bool a = owner_of(p[0]) == vtx, b = owner_of(p[1]) == vtx;
      if (a != b) fail(ErrorCode::InvalidConfiguration, "split connector pair on " + edge_name(static_cast<int>(e)));
      claimed[side] = a;
    }
    if (claimed[0] && claimed[1]) fail(ErrorCode::InvalidConfiguration, edge_name(static_cast<int>(e)) + " points both ways");
    c.head.push_back(claimed[0] ? m.edges[e].u : claimed[1] ? m.edges[e].v : NclConfiguration::kNeutral);
  }
  return c;
}

ReducedInstance reduce_ncl_to_pmr(const NclMachine& m, const NclConfiguration& c_ini, const NclConfiguration& c_tar) {
  for (const NclEdge& e : m.edges)
    if (e.u < 0 || e.v < 0 || e.u >= m.vertex_count() || e.v >= m.vertex_count())
      fail(ErrorCode::InvalidConfiguration, "dangling edge");
  ReducedInstance r;
  r.gadgets = build_gadget_graph(m);
  r.m_ini = encode(r.gadgets, c_ini);
  r.m_tar = encode(r.gadgets, c_tar);
  for (const auto& [mm, c] : {std::pair{&r.m_ini, &c_ini}, std::pair{&r.m_tar, &c_tar}}) {
    for (const Edge& e : mm->edges())
      if (!r.gadgets.graph.has_edge(e.u, e.v)) fail(ErrorCode::Internal, "encoding uses a non-edge");
    if (!(decode(r.gadgets, *mm) == *c)) fail(ErrorCode::Internal, "encoding does not decode");
  }
  return r;
}

GadgetInstance subdivide_for_kflip(const GadgetInstance& inst, int k) {
  Mode::kflip(k);
  if (inst.k != 4) fail(ErrorCode::InvalidArgument, "instance is already subdivided");
  if (k == 4) return inst;
  GadgetInstance out = inst;
  out.k = k;
  int next = inst.graph.n();
  std::map<Edge, std::vector<int>> paths;
  for (const Edge& e : inst.orange) {
    auto p = fresh_path(e.u, e.v, k - 3, next);
    out.subdivisions.push_back({e, p});
    paths[e] = p;
  }
  out.color.resize(static_cast<std::size_t>(next));
  for (const auto& s : out.subdivisions)
    for (std::size_t i = 1; i + 1 < s.path.size(); ++i) out.color[s.path[i]] = inst.color[s.path[0]] ^ static_cast<int>(i & 1);
  out.orange.clear();
  for (Gadget& gd : out.gadgets) {
    std::vector<Edge> edges;
    for (const Edge& e : gd.edges) {
      auto it = paths.find(e);
      if (it == paths.end()) {
        edges.push_back(e);
        continue;
      }
      const auto& p = it->second;
      for (std::size_t i = 0; i + 1 < p.size(); ++i) edges.push_back(Edge::of(p[i], p[i + 1]));
      for (std::size_t i = 1; i + 1 < p.size(); ++i) gd.vertices.push_back(p[i]);
      out.orange.push_back(Edge::of(p[0], p[1]));
    }
    gd.edges = std::move(edges);
  }
  std::vector<Edge> all;
  for (const Gadget& gd : out.gadgets) all.insert(all.end(), gd.edges.begin(), gd.edges.end());
  out.graph = Graph(next, std::span<const Edge>(all));
  out.edge_owner.assign(out.graph.m(), -1);
  for (std::size_t i = 0; i < out.gadgets.size(); ++i)
    for (const Edge& e : out.gadgets[i].edges) out.edge_owner[*out.graph.edge_id(e.u, e.v)] = static_cast<int>(i);
  check_structure(out);
  return out;
}

GadgetReport gadget_selftest(GadgetKind kind, int k) {
  Mode mode = k == 4 ? Mode::flip() : Mode::kflip(k);
  const GadgetTemplate& t = gadget_template(kind);
  const int ports = static_cast<int>(t.ports.size());
  int next = t.vertices;
  std::vector<Edge> edges;
  std::set<Edge> orange;
  // Edges standing for edge-gadget material: the whole template for the
  // edge gadget, the stubs for a vertex gadget.
  std::set<Edge> edge_side;
  const bool own_side = kind == GadgetKind::Edge;
  auto add_edge = [&](Edge e, bool is_orange, bool on_edge_side) {
    edges.push_back(e);
    if (is_orange) orange.insert(e);
    if (on_edge_side) edge_side.insert(e);
  };
  auto add_path = [&](int a, int b, bool on_edge_side) {
    auto p = fresh_path(a, b, k - 3, next);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) add_edge(Edge::of(p[i], p[i + 1]), true, on_edge_side);
  };
  for (const Edge& e : t.edges) {
    if (std::find(t.orange.begin(), t.orange.end(), e) != t.orange.end()) add_path(e.u, e.v, own_side);
    else add_edge(e, false, own_side);
  }
  // Per port, the vertex whose partner decides the class.
  std::vector<std::array<int, 2>> probe;
  for (const auto& p : t.ports) {
    if (kind == GadgetKind::Edge) {
      add_edge(Edge::of(p[0], p[1]), false, false);
      probe.push_back({p[0], p[1]});
    } else {
      int q0 = next++;
      int q1 = next++;
      add_edge(Edge::of(p[0], q0), false, true);
      add_edge(Edge::of(q1, p[1]), false, true);
      add_path(q0, q1, true);
      probe.push_back({p[0], q0});
    }
  }
  Graph h(next, std::span<const Edge>(edges));

  GadgetReport rep;
  rep.kind = kind;
  rep.k = k;
  for (int mask = 0; mask < (1 << ports); ++mask) {
    GadgetClass c;
    for (int p = 0; p < ports; ++p) c.inward.push_back((mask >> p & 1) != 0);
    switch (kind) {
      case GadgetKind::Edge: c.legal = !(c.inward[0] && c.inward[1]); break;
      case GadgetKind::And: c.legal = c.inward[0] || (c.inward[1] && c.inward[2]); break;
      case GadgetKind::Or: c.legal = mask != 0; break;
    }
    rep.classes.push_back(std::move(c));
  }

  ReconfigGraph rg = build_reconfiguration_graph(h, MatchingTarget::perfect_matchings(), mode);
  std::vector<int> cls(rg.nodes.size(), 0);
  for (std::size_t i = 0; i < rg.nodes.size(); ++i) {
    int mask = 0;
    for (int p = 0; p < ports; ++p) {
      bool joined = rg.nodes[i].contains(probe[p][0], probe[p][1]);
      // Edge gadget: the connector edge marks a claim. Vertex gadget: the
      // stub reaching in marks an uncovered port.
      bool inward = kind == GadgetKind::Edge ? joined : !joined;
      if (inward) mask |= 1 << p;
    }
    cls[i] = mask;
    ++rep.classes[mask].matchings;
  }
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < rg.nodes.size(); ++i)
    for (int j : rg.adjacency[i])
      if (cls[i] != cls[j]) seen.insert({std::min(cls[i], cls[j]), std::max(cls[i], cls[j])});
  rep.transitions.assign(seen.begin(), seen.end());

  for (int mask = 0; mask < (1 << ports); ++mask) {
    GadgetClass& c = rep.classes[mask];
    if (!c.legal && c.matchings > 0) rep.forbidden_unmatchable = false;
    if (c.legal && c.matchings == 0) rep.legal_nonempty = false;
    // Connectivity of the class's matchings through same-class moves.
    std::vector<int> members;
    for (std::size_t i = 0; i < rg.nodes.size(); ++i)
      if (cls[i] == mask) members.push_back(static_cast<int>(i));
    if (members.size() > 1) {
      std::unordered_set<int> reached{members[0]};
      std::vector<int> stack{members[0]};
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y : rg.adjacency[x])
          if (cls[y] == mask && reached.insert(y).second) stack.push_back(y);
      }
      c.connected = reached.size() == members.size();
    }
    if (!c.connected) rep.internally_connected = false;
  }

  std::set<std::pair<int, int>> expected;
  for (int a = 0; a < (1 << ports); ++a)
    for (int p = 0; p < ports; ++p) {
      int b = a ^ (1 << p);
      if (a < b && rep.classes[a].legal && rep.classes[b].legal) expected.insert({a, b});
    }
  rep.external_adjacency = expected == seen;

  for (const Matching& m : rg.nodes)
    for (const Flip& f : alternating_cycles(h, m, k)) {
      bool hit = false, through = false;
      for (std::size_t i = 0; i < f.cycle.size(); ++i) {
        Edge e = Edge::of(f.cycle[i], f.cycle[(i + 1) % f.cycle.size()]);
        hit = hit || orange.count(e) > 0;
        through = through || edge_side.count(e) > 0;
      }
      if (through && !hit) rep.cycles_use_orange = false;
    }
  return rep;
}

Graph split_completion(const Graph& g, std::span<const int> side) {
  std::vector<char> in(static_cast<std::size_t>(g.n()), 0);
  for (int v : side) {
    if (v < 0 || v >= g.n()) fail(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v));
    in[v] = 1;
  }
  for (const Edge& e : g.edges())
    if (in[e.u] == in[e.v]) fail(ErrorCode::NotBipartite, "edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} within a side");
  int count = static_cast<int>(std::count(in.begin(), in.end(), 1));
  if (2 * count != g.n()) fail(ErrorCode::UnbalancedSides, std::to_string(count) + " of " + std::to_string(g.n()));
  std::vector<Edge> es = g.edges();
  for (int a = 0; a < g.n(); ++a)
    for (int b = a + 1; b < g.n(); ++b)
      if (in[a] && in[b]) es.push_back({a, b});
  return Graph(g.n(), std::span<const Edge>(es));
}

KFactorInstance k_factor_instance(const Graph& g, const Matching& m_ini, const Matching& m_tar, int k) {
  if (k < 2) fail(ErrorCode::InvalidArgument, "k must be at least 2");
  for (const auto* m : {&m_ini, &m_tar}) {
    if (m->n() != g.n() || !m->is_perfect()) fail(ErrorCode::NotPerfect, "matchings must be perfect");
    for (const Edge& e : m->edges())
      if (!g.has_edge(e.u, e.v)) fail(ErrorCode::EdgeNotInGraph, "matching edge outside the graph");
  }
  // Vertex i gets k-1 pendants; the pendant groups of 2t and 2t+1 form a
  // complete bipartite graph, so every pendant has degree exactly k.
  const int n = g.n();
  const int extra = k - 1;
  auto x = [&](int i, int j) { return n + i * extra + j; };
  std::vector<Edge> forced;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < extra; ++j) forced.push_back(Edge::of(i, x(i, j)));
  for (int i = 0; i < n; i += 2)
    for (int j = 0; j < extra; ++j)
      for (int j2 = 0; j2 < extra; ++j2) forced.push_back(Edge::of(x(i, j), x(i + 1, j2)));
  std::vector<Edge> all = g.edges();
  all.insert(all.end(), forced.begin(), forced.end());
  KFactorInstance out;
  out.graph = Graph(n + n * extra, std::span<const Edge>(all));
  out.h_ini = forced;
  out.h_tar = forced;
  for (const Edge& e : m_ini.edges()) out.h_ini.push_back(e);
  for (const Edge& e : m_tar.edges()) out.h_tar.push_back(e);
  std::sort(out.h_ini.begin(), out.h_ini.end());
  std::sort(out.h_tar.begin(), out.h_tar.end());
  return out;
}

bool is_k_factor(const Graph& g, std::span<const Edge> edges, int k) {
  std::vector<int> deg(static_cast<std::size_t>(g.n()), 0);
  std::set<Edge> distinct;
  for (const Edge& e : edges) {
    if (!g.has_edge(e.u, e.v) || !distinct.insert(e).second) return false;
    ++deg[e.u];
    ++deg[e.v];
  }
  return std::all_of(deg.begin(), deg.end(), [&](int d) { return d == k; });
}

bool factor_flip_reachable(const Graph& g, std::span<const Edge> from, std::span<const Edge> to, std::size_t budget) {
  auto key_of = [&](std::span<const Edge> es) {
    std::vector<char> key(g.m(), 0);
    for (const Edge& e : es) {
      auto id = g.edge_id(e.u, e.v);
      if (!id) fail(ErrorCode::EdgeNotInGraph, "factor edge outside the graph");
      key[static_cast<std::size_t>(*id)] = 1;
    }
    return std::string(key.begin(), key.end());
  };
  std::string start = key_of(from), goal = key_of(to);
  std::unordered_set<std::string> seen{start};
  std::deque<std::string> queue{start};
  auto in = [&](const std::string& s, int a, int b) {
    auto id = g.edge_id(a, b);
    return id && s[static_cast<std::size_t>(*id)];
  };
  while (!queue.empty()) {
    std::string s = queue.front();
    queue.pop_front();
    if (s == goal) return true;
    for (std::size_t id = 0; id < g.m(); ++id) {
      if (!s[id]) continue;
      const Edge& ab = g.edge(id);
      for (auto [a, b] : {std::pair{ab.u, ab.v}, std::pair{ab.v, ab.u}}) {
        for (int c : g.neighbors(b)) {
          if (c == a || in(s, b, c)) continue;
          for (int d : g.neighbors(c)) {
            if (d == a || d == b || !in(s, c, d) || !g.has_edge(d, a) || in(s, d, a)) continue;
            std::string t = s;
            t[id] = 0;
            t[static_cast<std::size_t>(*g.edge_id(c, d))] = 0;
            t[static_cast<std::size_t>(*g.edge_id(b, c))] = 1;
            t[static_cast<std::size_t>(*g.edge_id(d, a))] = 1;
            if (seen.insert(t).second) {
              if (seen.size() > budget) fail(ErrorCode::BudgetExceeded, "factor search exceeded the budget");
              queue.push_back(std::move(t));
            }
          }
        }
      }
    }
  }
  return false;
}

}  // namespace matchflip
