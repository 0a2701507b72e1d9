#pragma once

#include <array>
#include <span>
#include <vector>

#include "matchflip/graph.hpp"
#include "matchflip/matching.hpp"
#include "matchflip/reconfig.hpp"

namespace matchflip {

struct StrongOrderCheck {
  bool valid = true;
  /// Vertices v_i, v_j, v_k, v_l with v_i v_k, v_i v_l, v_j v_k edges,
  /// i < j, k < l, but v_j v_l missing. Meaningful only when !valid.
  std::array<int, 4> witness{-1, -1, -1, -1};
};

/// Exhaustive check of the strong-ordering implication over distinct
/// quadruples. Throws NotAPermutation.
StrongOrderCheck verify_strong_ordering(const Graph& g, std::span<const int> order);

/// A vertex order (v_1, ..., v_n) known to be strong for its graph.
class StrongOrder {
 public:
  /// Verifies the order against g; throws NotAPermutation or OrderInvalid.
  StrongOrder(const Graph& g, std::vector<int> order);

  /// Skips the cubic verification; only the permutation is checked. The
  /// solver still throws OrderInvalid if a swap it relies on is missing.
  static StrongOrder trusted(int n, std::vector<int> order);

  const std::vector<int>& order() const { return order_; }
  int position(int v) const { return position_[v]; }

 private:
  StrongOrder() = default;
  void index(int n);

  std::vector<int> order_;
  std::vector<int> position_;
};

/// Greedy perfect matching: the earliest unmatched vertex takes its earliest
/// unmatched neighbour. Throws NoPerfectMatching if some vertex is stuck.
Matching canonical_matching(const Graph& g, const StrongOrder& order);

/// Flip-only sequence M_ini -> canonical -> M_tar of length at most n.
/// Throws NotPerfect for non-perfect inputs.
ReconfigSequence solve_strongly_orderable(const Graph& g, const StrongOrder& order, const Matching& m_ini,
                                          const Matching& m_tar);

}  // namespace matchflip
