#include "matchflip/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "matchflip/error.hpp"

namespace matchflip {

namespace {

std::vector<Edge> checked_edges(int n, std::span<const RawEdge> raw) {
  if (n < 0) fail(ErrorCode::VertexOutOfRange, "negative vertex count");
  std::vector<Edge> out;
  out.reserve(raw.size());
  for (auto [a, b] : raw) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      fail(ErrorCode::VertexOutOfRange, "edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
    if (a == b) fail(ErrorCode::SelfLoop, "vertex " + std::to_string(a));
    out.push_back(Edge::of(a, b));
  }
  return out;
}

}  // namespace

Graph::Graph(int n, std::span<const RawEdge> edges) : n_(n) { build(checked_edges(n, edges)); }

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  std::vector<RawEdge> raw;
  raw.reserve(edges.size());
  for (const Edge& e : edges) raw.emplace_back(e.u, e.v);
  build(checked_edges(n, raw));
}

void Graph::build(std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
    fail(ErrorCode::DuplicateEdge, "{" + std::to_string(dup->u) + "," + std::to_string(dup->v) + "}");
  edges_ = std::move(edges);

  offset_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (const Edge& e : edges_) {
    ++offset_[e.u + 1];
    ++offset_[e.v + 1];
  }
  std::partial_sum(offset_.begin(), offset_.end(), offset_.begin());
  adj_.resize(2 * edges_.size());
  adj_edge_.resize(2 * edges_.size());
  std::vector<int> fill(offset_.begin(), offset_.end() - 1);
  // Two passes over the sorted edge list: smaller neighbours first, then
  // larger ones, which leaves every neighbour list sorted.
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adj_[fill[e.v]] = e.u;
    adj_edge_[fill[e.v]++] = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    adj_[fill[e.u]] = e.v;
    adj_edge_[fill[e.u]++] = static_cast<int>(i);
  }
}

std::optional<int> Graph::edge_id(int a, int b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return std::nullopt;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto nb = neighbors(a);
  auto it = std::lower_bound(nb.begin(), nb.end(), b);
  if (it == nb.end() || *it != b) return std::nullopt;
  return incident_edges(a)[static_cast<std::size_t>(it - nb.begin())];
}

Graph Graph::induced(std::span<const int> keep) const {
  std::vector<char> in(static_cast<std::size_t>(n_), 0);
  for (int v : keep) in[v] = 1;
  return filter_edges([&](int id) { return in[edges_[id].u] && in[edges_[id].v]; });
}

Graph validate_graph(int n, std::span<const RawEdge> edges) { return Graph(n, edges); }

std::vector<std::vector<int>> connected_components(const Graph& g, std::span<const int> vertices) {
  std::vector<int> all;
  if (vertices.empty()) {
    all.resize(static_cast<std::size_t>(g.n()));
    std::iota(all.begin(), all.end(), 0);
    vertices = all;
  }
  std::vector<char> member(static_cast<std::size_t>(g.n()), 0);
  for (int v : vertices) member[v] = 1;
  std::vector<int> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());

  std::vector<char> seen(static_cast<std::size_t>(g.n()), 0);
  std::vector<std::vector<int>> out;
  std::vector<int> stack;
  for (int s : sorted) {
    if (seen[s]) continue;
    std::vector<int> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int w : g.neighbors(v)) {
        if (member[w] && !seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.n()), -1);
  std::vector<int> stack;
  for (int s = 0; s < g.n(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

}  // namespace matchflip
