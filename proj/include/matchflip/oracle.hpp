#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <optional>
#include <vector>

#include "matchflip/graph.hpp"
#include "matchflip/matching.hpp"
#include "matchflip/reconfig.hpp"

namespace matchflip {

inline constexpr std::size_t kDefaultBudget = 2'000'000;

/// A matching as a bitset over the edge ids of its host graph.
using StateKey = std::vector<std::uint64_t>;

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept;
};

StateKey state_key(const Graph& g, const Matching& m);
Matching state_matching(const Graph& g, const StateKey& key);

/// Which matchings form the nodes of a reconfiguration graph.
struct MatchingTarget {
  bool perfect = true;
  int size = 0;

  static MatchingTarget perfect_matchings() { return {true, 0}; }
  static MatchingTarget of_size(int k) { return {false, k}; }
};

/// Every matching of g selected by `target`, ordered lexicographically by
/// sorted edge list. Throws BudgetExceeded past `budget` matchings.
std::vector<Matching> enumerate_matchings(const Graph& g, MatchingTarget target, std::size_t budget = kDefaultBudget);

/// Every alternating cycle of length k through m (as vertex cycles, canonical).
std::vector<Flip> alternating_cycles(const Graph& g, const Matching& m, int k);

/// The matchings one move away from m under `mode`.
std::vector<Matching> neighbors(const Graph& g, const Matching& m, const Mode& mode);

struct Reachability {
  bool reachable = false;
  /// Shortest distance when reachable.
  std::optional<std::size_t> distance;
  /// A shortest sequence, filled when requested.
  std::optional<ReconfigSequence> path;
  /// States visited by the search.
  std::size_t explored = 0;
};

/// BFS from m1 under `mode`. Throws SizeMismatch when |m1| != |m2| and
/// BudgetExceeded once more than `budget` states are discovered.
Reachability reachable(const Graph& g, const Matching& m1, const Matching& m2, const Mode& mode, bool want_path,
                       std::size_t budget = kDefaultBudget);

/// Explicit reconfiguration graph over all matchings selected by a target.
struct ReconfigGraph {
  std::vector<Matching> nodes;
  std::vector<std::vector<int>> adjacency;
  /// Component label per node, numbered in order of first node.
  std::vector<int> component;
  int component_count = 0;

  /// Node index of m, if present.
  std::optional<int> index_of(const Matching& m) const;

  std::unordered_map<StateKey, int, StateKeyHash> index;
  Graph graph;
};

ReconfigGraph build_reconfiguration_graph(const Graph& g, MatchingTarget target, const Mode& mode,
                                          std::size_t budget = kDefaultBudget);

struct ReconfigGraphStats {
  std::size_t nodes = 0;
  std::size_t components = 0;
  /// Sizes in order of first node.
  std::vector<std::size_t> component_sizes;
  /// Diameter of the component of the designated matching, or the largest
  /// component diameter when none is designated.
  std::size_t diameter = 0;
};

ReconfigGraphStats reconfiguration_stats(const Graph& g, MatchingTarget target, const Mode& mode,
                                         std::size_t budget = kDefaultBudget,
                                         const std::optional<Matching>& designated = std::nullopt);

}  // namespace matchflip
