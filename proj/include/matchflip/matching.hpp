#pragma once

#include <span>
#include <vector>

#include "matchflip/graph.hpp"

namespace matchflip {

/// A set of pairwise independent edges over vertices 0..n-1, stored as a
/// mate array. Membership in a particular Graph is checked separately
/// (matching_status, Matching::of).
class Matching {
 public:
  Matching() = default;
  explicit Matching(int n) : mate_(static_cast<std::size_t>(n), -1) {}

  /// Throws NotAMatching on shared endpoints, VertexOutOfRange on bad ids.
  static Matching from_edges(int n, std::span<const Edge> edges);
  static Matching from_edges(int n, std::span<const RawEdge> edges);
  /// As from_edges, additionally requiring every edge to be in g.
  static Matching of(const Graph& g, std::span<const RawEdge> edges);

  int n() const { return static_cast<int>(mate_.size()); }
  int size() const { return size_; }
  int mate(int v) const { return mate_[v]; }
  bool covers(int v) const { return mate_[v] >= 0; }
  bool contains(int a, int b) const { return a != b && mate_[a] == b; }
  bool contains(const Edge& e) const { return contains(e.u, e.v); }
  bool is_perfect() const { return 2 * size_ == n(); }

  void add(int a, int b);
  void remove(int a, int b);

  /// Sorted edge list.
  std::vector<Edge> edges() const;

  friend bool operator==(const Matching& a, const Matching& b) { return a.mate_ == b.mate_; }

 private:
  std::vector<int> mate_;
  int size_ = 0;
};

struct MatchingStatus {
  enum class Kind { NotMatching, Matching, PerfectMatching };
  Kind kind = Kind::NotMatching;
  int size = 0;

  friend bool operator==(const MatchingStatus&, const MatchingStatus&) = default;
};

/// Classifies an edge set of g. Throws EdgeNotInGraph for foreign edges.
MatchingStatus matching_status(const Graph& g, std::span<const RawEdge> edges);

/// Restriction of m to the edges with both ends in `vertices`.
Matching restrict_to(const Matching& m, std::span<const int> vertices);

struct DiffComponent {
  enum class Kind { SingleEdge, AlternatingPath, EvenCycle };
  Kind kind = Kind::SingleEdge;
  /// Path order (single edge and path) or cyclic order (cycle). Paths start
  /// at their smaller endpoint; cycles start at their smallest vertex and
  /// continue along its edge from the first matching.
  std::vector<int> vertices;

  std::size_t edge_count() const {
    return kind == Kind::EvenCycle ? vertices.size() : vertices.size() - 1;
  }
};

/// Maximal connected components of a △ b, ordered by smallest vertex.
std::vector<DiffComponent> symmetric_difference_components(const Matching& a, const Matching& b);

/// |a △ b| in edges.
int symmetric_difference_size(const Matching& a, const Matching& b);

}  // namespace matchflip
