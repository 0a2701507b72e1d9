#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace matchflip {

/// Unordered vertex pair, always stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  static Edge of(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

  bool touches(int x) const { return u == x || v == x; }
  int other(int x) const { return x == u ? v : u; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using RawEdge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept in CSR form with sorted neighbour lists, and every
/// neighbour slot carries the index of the edge in edges(). Immutable once
/// built; copies are cheap enough for the desk-scale sizes the oracle uses.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph, rejecting self-loops, duplicates and out-of-range ids.
  Graph(int n, std::span<const RawEdge> edges);
  Graph(int n, std::span<const Edge> edges);

  int n() const { return n_; }
  std::size_t m() const { return edges_.size(); }

  /// Edges sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t id) const { return edges_[id]; }

  std::span<const int> neighbors(int v) const {
    return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
  }
  /// Edge ids aligned with neighbors(v).
  std::span<const int> incident_edges(int v) const {
    return {adj_edge_.data() + offset_[v], adj_edge_.data() + offset_[v + 1]};
  }
  int degree(int v) const { return offset_[v + 1] - offset_[v]; }

  bool has_edge(int a, int b) const { return edge_id(a, b).has_value(); }
  std::optional<int> edge_id(int a, int b) const;

  /// Same vertex ids, only the edges with both ends in `keep`.
  Graph induced(std::span<const int> keep) const;
  /// Same vertex ids, edges filtered by a predicate on edge ids.
  template <typename Pred>
  Graph filter_edges(Pred&& keep_edge) const {
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (keep_edge(static_cast<int>(i))) kept.push_back(edges_[i]);
    return Graph(n_, std::span<const Edge>(kept));
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  void build(std::vector<Edge> edges);

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offset_{0};
  std::vector<int> adj_;
  std::vector<int> adj_edge_;
};

/// Validating constructor under its operational name.
Graph validate_graph(int n, std::span<const RawEdge> edges);

/// Connected components restricted to `vertices` (all vertices when empty),
/// each sorted, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g, std::span<const int> vertices = {});

/// 2-colouring if the graph is bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);

}  // namespace matchflip
