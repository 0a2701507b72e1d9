#pragma once

#include "matchflip/graph.hpp"
#include "matchflip/matching.hpp"

namespace matchflip {

/// Maximum-cardinality matching of a general graph (Edmonds' blossom
/// algorithm).
Matching max_matching(const Graph& g);

/// Size of a maximum matching of g with the given vertices deleted.
int max_matching_size_without(const Graph& g, std::span<const int> removed);

}  // namespace matchflip
