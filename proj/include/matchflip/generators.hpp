#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "matchflip/graph.hpp"
#include "matchflip/matching.hpp"

namespace matchflip {

/// A graph with two matchings of equal size and optional solver hints.
struct Instance {
  Graph graph;
  Matching m_ini;
  Matching m_tar;
  std::optional<std::vector<int>> strong_order;
  std::optional<std::vector<int>> boundary_order;
};

using Rng = std::mt19937_64;

/// Random interval graph on n (even) vertices built from n/2 pairs of
/// intervals sharing a point, so a perfect matching exists. The hint is the
/// right-endpoint order, which is a strong ordering of any interval graph.
/// `spread` scales interval lengths relative to the average gap.
Instance random_interval_instance(int n, Rng& rng, double spread = 2.0);

/// Random 2-connected outerplanar graph: an n-gon, a random triangulation of
/// it, each chord kept with probability `chord_prob`, then relabelled.
/// Carries the boundary hint; n must be even and at least 4.
Instance random_outerplanar_instance(int n, Rng& rng, double chord_prob = 0.5);

/// Random connected cograph from a random binary cotree with a join root;
/// matchings of a random size up to the maximum.
Instance random_cograph_instance(int n, Rng& rng);

/// Every connected cograph on n vertices up to isomorphism, one per
/// cotree shape (joins of single vertices and disconnected cographs).
std::vector<Graph> all_connected_cographs(int n);

/// A uniformly relabelled maximum matching of g (blossom on permuted ids),
/// truncated to `size` edges when given.
Matching random_max_matching(const Graph& g, Rng& rng, std::optional<int> size = std::nullopt);

/// Applies up to `steps` random flips to m (attempts that find no
/// alternating 4-cycle are skipped), staying in m's flip component.
Matching random_flip_walk(const Graph& g, Matching m, int steps, Rng& rng);

/// Random permutation of 0..n-1.
std::vector<int> random_permutation(int n, Rng& rng);

}  // namespace matchflip
