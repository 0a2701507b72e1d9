#include "matchflip/matching.hpp"

#include <algorithm>
#include <string>

#include "matchflip/error.hpp"

namespace matchflip {

namespace {

std::string edge_str(int a, int b) { return "{" + std::to_string(a) + "," + std::to_string(b) + "}"; }

}  // namespace

Matching Matching::from_edges(int n, std::span<const Edge> edges) {
  Matching m(n);
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) fail(ErrorCode::VertexOutOfRange, edge_str(e.u, e.v));
    if (e.u == e.v) fail(ErrorCode::SelfLoop, edge_str(e.u, e.v));
    if (m.contains(e)) continue;
    if (m.covers(e.u) || m.covers(e.v)) fail(ErrorCode::NotAMatching, "shared endpoint at " + edge_str(e.u, e.v));
    m.add(e.u, e.v);
  }
  return m;
}

Matching Matching::from_edges(int n, std::span<const RawEdge> edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [a, b] : edges) es.push_back(Edge{a, b});
  return from_edges(n, es);
}

Matching Matching::of(const Graph& g, std::span<const RawEdge> edges) {
  for (auto [a, b] : edges)
    if (!g.has_edge(a, b)) fail(ErrorCode::EdgeNotInGraph, edge_str(a, b));
  return from_edges(g.n(), edges);
}

void Matching::add(int a, int b) {
  if (a == b || covers(a) || covers(b)) fail(ErrorCode::NotAMatching, "cannot add " + edge_str(a, b));
  mate_[a] = b;
  mate_[b] = a;
  ++size_;
}

void Matching::remove(int a, int b) {
  if (!contains(a, b)) fail(ErrorCode::NotAMatching, "cannot remove " + edge_str(a, b));
  mate_[a] = -1;
  mate_[b] = -1;
  --size_;
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int v = 0; v < n(); ++v)
    if (mate_[v] > v) out.push_back(Edge{v, mate_[v]});
  return out;
}

MatchingStatus matching_status(const Graph& g, std::span<const RawEdge> edges) {
  std::vector<int> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<Edge> unique;
  for (auto [a, b] : edges) {
    if (!g.has_edge(a, b)) fail(ErrorCode::EdgeNotInGraph, edge_str(a, b));
    unique.push_back(Edge::of(a, b));
  }
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  for (const Edge& e : unique) {
    if (seen[e.u]++ || seen[e.v]++) return {MatchingStatus::Kind::NotMatching, 0};
  }
  int size = static_cast<int>(unique.size());
  if (2 * size == g.n()) return {MatchingStatus::Kind::PerfectMatching, size};
  return {MatchingStatus::Kind::Matching, size};
}

Matching restrict_to(const Matching& m, std::span<const int> vertices) {
  std::vector<char> in(static_cast<std::size_t>(m.n()), 0);
  for (int v : vertices) in[v] = 1;
  Matching out(m.n());
  for (int v : vertices)
    if (m.covers(v) && v < m.mate(v) && in[m.mate(v)]) out.add(v, m.mate(v));
  return out;
}

std::vector<DiffComponent> symmetric_difference_components(const Matching& a, const Matching& b) {
  const int n = a.n();
  // In a △ b every vertex has at most one edge from each side.
  auto a_nb = [&](int v) { return a.covers(v) && a.mate(v) != b.mate(v) ? a.mate(v) : -1; };
  auto b_nb = [&](int v) { return b.covers(v) && b.mate(v) != a.mate(v) ? b.mate(v) : -1; };

  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<DiffComponent> out;
  auto walk = [&](int start, bool take_a) {
    std::vector<int> vs{start};
    seen[start] = 1;
    int cur = start;
    while (true) {
      int next = take_a ? a_nb(cur) : b_nb(cur);
      if (next < 0 || next == start) break;
      seen[next] = 1;
      vs.push_back(next);
      cur = next;
      take_a = !take_a;
    }
    return vs;
  };

  // Paths first: start from endpoints (degree one in the difference).
  for (int v = 0; v < n; ++v) {
    if (seen[v]) continue;
    int da = a_nb(v), db = b_nb(v);
    if ((da >= 0) == (db >= 0)) continue;
    auto vs = walk(v, da >= 0);
    DiffComponent c;
    c.kind = vs.size() == 2 ? DiffComponent::Kind::SingleEdge : DiffComponent::Kind::AlternatingPath;
    c.vertices = std::move(vs);
    out.push_back(std::move(c));
  }
  // Remaining difference vertices lie on cycles.
  for (int v = 0; v < n; ++v) {
    if (seen[v] || a_nb(v) < 0) continue;
    DiffComponent c;
    c.kind = DiffComponent::Kind::EvenCycle;
    c.vertices = walk(v, true);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const DiffComponent& x, const DiffComponent& y) {
    return *std::min_element(x.vertices.begin(), x.vertices.end()) <
           *std::min_element(y.vertices.begin(), y.vertices.end());
  });
  return out;
}

int symmetric_difference_size(const Matching& a, const Matching& b) {
  int count = 0;
  for (int v = 0; v < a.n(); ++v) {
    if (a.covers(v) && a.mate(v) > v && b.mate(v) != a.mate(v)) ++count;
    if (b.covers(v) && b.mate(v) > v && a.mate(v) != b.mate(v)) ++count;
  }
  return count;
}

}  // namespace matchflip
