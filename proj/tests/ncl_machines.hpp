#pragma once

#include <vector>

#include "matchflip/hardness.hpp"

namespace machines {

using matchflip::NclConfiguration;
using matchflip::NclEdge;
using matchflip::NclMachine;
using matchflip::NclVertexType;

/// Two AND vertices joined by two weight-1 edges and one weight-2 edge.
/// Its two valid configurations are frozen.
inline NclMachine and_theta() {
  return {{NclVertexType::And, NclVertexType::And}, {{0, 1, 1}, {0, 1, 1}, {0, 1, 2}}};
}

/// Two OR vertices joined by three weight-2 edges.
inline NclMachine or_theta() {
  return {{NclVertexType::Or, NclVertexType::Or}, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}}};
}

/// K4 with OR vertices.
inline NclMachine or_k4() {
  return {std::vector<NclVertexType>(4, NclVertexType::Or),
          {{0, 1, 2}, {0, 2, 2}, {0, 3, 2}, {1, 2, 2}, {1, 3, 2}, {2, 3, 2}}};
}

/// AND pair sharing two weight-1 edges, each hanging off an OR vertex; the
/// OR vertices share two more edges.
inline NclMachine and_or_ring() {
  return {{NclVertexType::And, NclVertexType::And, NclVertexType::Or, NclVertexType::Or},
          {{0, 1, 1}, {0, 1, 1}, {0, 2, 2}, {1, 3, 2}, {2, 3, 2}, {2, 3, 2}}};
}

/// Three AND vertices on a weight-1 triangle, each tied to an OR hub by a
/// weight-2 edge. Six valid configurations in three pairs.
inline NclMachine and_k4() {
  return {{NclVertexType::And, NclVertexType::And, NclVertexType::And, NclVertexType::Or},
          {{0, 1, 1}, {0, 2, 1}, {0, 3, 2}, {1, 2, 1}, {1, 3, 2}, {2, 3, 2}}};
}

/// Triangular prism with OR vertices: six vertices, nine edges.
inline NclMachine or_prism() {
  return {std::vector<NclVertexType>(6, NclVertexType::Or),
          {{0, 1, 2}, {1, 2, 2}, {2, 0, 2}, {3, 4, 2}, {4, 5, 2}, {5, 3, 2}, {0, 3, 2}, {1, 4, 2}, {2, 5, 2}}};
}

inline std::vector<NclMachine> all() { return {and_theta(), or_theta(), or_k4(), and_or_ring(), and_k4()}; }

}  // namespace machines
