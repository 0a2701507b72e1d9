#pragma once

#include <optional>
#include <span>
#include <vector>

#include "matchflip/graph.hpp"
#include "matchflip/matching.hpp"
#include "matchflip/reconfig.hpp"

namespace matchflip {

/// The Hamiltonian outer cycle of a 2-connected outerplanar graph, found by
/// degree-two ear contraction. Normalized to start at the smallest vertex
/// and continue towards its smaller cycle neighbour.
/// Throws NotTwoConnected or NotOuterplanar.
std::vector<int> boundary_order(const Graph& g);

/// Checks that `order` is a boundary cycle of g: consecutive vertices are
/// adjacent and no two chords cross. Throws NotAPermutation or
/// NotOuterplanar.
void verify_boundary_order(const Graph& g, std::span<const int> order);

/// A piece of the input after cut-vertex splitting, on its own vertex ids
/// 0..k-1; `vertices[i]` is the original id of local vertex i.
struct SubInstance {
  std::vector<int> vertices;
  Graph graph;
  Matching m_ini;
  Matching m_tar;
};

/// Repeatedly removes, at every cut vertex, its edges into even components
/// (no perfect matching uses them) until every piece is 2-connected or a
/// single edge. Throws NotPerfect.
std::vector<SubInstance> split_at_cut_vertices(const Graph& g, const Matching& m_ini, const Matching& m_tar);

struct ReductionStep {
  enum class Kind { SplitEdge, RemoveEvenChord, Pendant, Case1Drop, Case1Remove, Case2, Case1Reject };
  Kind kind;
  /// SplitEdge / RemoveEvenChord / Case1Drop: the removed edge in u, v.
  /// Pendant: the forced edge. Case1Remove / Case2 / Case1Reject: the
  /// degree-two pair in u, v and their outer neighbours in a, b.
  int u = -1, v = -1, a = -1, b = -1;
  bool e_in_ini = false;
  bool e_in_tar = false;
};

struct OuterplanarResult {
  bool yes = false;
  /// Flip sequence when yes.
  std::optional<ReconfigSequence> sequence;
  std::vector<ReductionStep> trace;
};

/// Decides flip reachability between two perfect matchings of an
/// outerplanar graph and, on YES, builds a flip sequence of length at most
/// n. A boundary hint is verified and used when the graph is 2-connected.
/// Throws NotOuterplanar, NotPerfect, EdgeNotInGraph.
OuterplanarResult solve_outerplanar(const Graph& g, const Matching& m_ini, const Matching& m_tar,
                                    const std::optional<std::vector<int>>& boundary_hint = std::nullopt);

}  // namespace matchflip
