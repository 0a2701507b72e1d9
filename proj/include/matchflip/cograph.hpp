#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "matchflip/graph.hpp"
#include "matchflip/matching.hpp"
#include "matchflip/reconfig.hpp"

namespace matchflip {

/// Binary cotree. Leaves carry a vertex; internal nodes are Union or Join
/// with exactly two children.
struct Cotree {
  struct Node {
    enum class Kind { Leaf, Union, Join };
    Kind kind = Kind::Leaf;
    int vertex = -1;
    int left = -1;
    int right = -1;
  };
  std::vector<Node> nodes;
  int root = -1;

  /// Vertices under a node, sorted.
  std::vector<int> leaves(int node) const;
};

/// An induced path a-b-c-d, if the graph has one.
std::optional<std::array<int, 4>> find_induced_p4(const Graph& g);

/// Cotree by recursive component / co-component splitting, multi-way nodes
/// left-folded in order of smallest vertex. Throws NotACograph naming an
/// induced P4.
Cotree build_cotree(const Graph& g);

struct RootPartition {
  std::vector<int> a;
  std::vector<int> b;
};

/// The split under the root join of a connected cograph, |A| >= |B|.
/// Throws NotACograph (also for disconnected inputs) or InvalidArgument
/// when there is a single vertex.
RootPartition root_partition(const Graph& g);

struct Conditions {
  bool c1 = false;
  bool c2 = false;
};

/// C1: some size-k matching has an edge inside B. C2: some size-k matching
/// leaves a vertex of B free. Decided with maximum matchings.
Conditions check_conditions(const Graph& g, const RootPartition& part, int k);

/// Flip/slide sequence between equal-size matchings of a connected cograph
/// whose symmetric difference has no cycle; at most 2|M1 △ M2| moves.
/// Throws CycleInDifference.
ReconfigSequence transform_cycle_free(const Graph& g, const Matching& m1, const Matching& m2);

/// Route through an anchor holding exactly one edge inside B.
/// Throws ConditionViolated unless C1 holds.
ReconfigSequence transform_with_B_edge(const Graph& g, const RootPartition& part, const Matching& m1,
                                       const Matching& m2);

/// Route through an anchor leaving a vertex of B free; edges inside B are
/// ignored. Throws ConditionViolated unless C2 holds and C1 fails.
ReconfigSequence transform_with_free_B_vertex(const Graph& g, const RootPartition& part, const Matching& m1,
                                              const Matching& m2);

/// Length bound constant asserted on every produced sequence: at most
/// kCographLengthFactor * n moves.
inline constexpr int kCographLengthFactor = 40;

/// Reusable solver for one cograph; caches partitions, conditions and
/// anchors per vertex set and matching size.
class CographSolver {
 public:
  /// Throws NotACograph.
  explicit CographSolver(const Graph& g);

  const Graph& graph() const { return g_; }

  /// Flip/slide reachability between two matchings.
  bool decide(const Matching& m_ini, const Matching& m_tar);

  /// As decide, and on YES a verified FlipSlide sequence (flips only when
  /// both matchings are perfect).
  std::optional<ReconfigSequence> solve(const Matching& m_ini, const Matching& m_tar);

  struct Piece;

 private:
  Piece& piece(const std::vector<int>& vertices);
  std::optional<std::vector<Move>> solve_set(const std::vector<int>& vertices, const Matching& m_ini,
                                             const Matching& m_tar, bool build);

  Graph g_;
  std::map<std::vector<int>, std::unique_ptr<Piece>> pieces_;

 public:
  ~CographSolver();
  CographSolver(const CographSolver&) = delete;
  CographSolver& operator=(const CographSolver&) = delete;
};

struct CographResult {
  bool yes = false;
  std::optional<ReconfigSequence> sequence;
};

/// One-shot solve. Throws NotACograph.
CographResult solve_cograph(const Graph& g, const Matching& m_ini, const Matching& m_tar);

}  // namespace matchflip
