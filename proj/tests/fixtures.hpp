#pragma once

#include <initializer_list>
#include <vector>

#include "matchflip/graph.hpp"
#include "matchflip/matching.hpp"

namespace fixtures {

using matchflip::Graph;
using matchflip::Matching;
using matchflip::RawEdge;

inline Graph make(int n, std::initializer_list<RawEdge> edges) {
  std::vector<RawEdge> es(edges);
  return Graph(n, es);
}

inline Matching match(const Graph& g, std::initializer_list<RawEdge> edges) {
  std::vector<RawEdge> es(edges);
  return Matching::of(g, es);
}

inline Graph cycle(int n) {
  std::vector<RawEdge> es;
  for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
  return Graph(n, es);
}

inline Graph path(int n) {
  std::vector<RawEdge> es;
  for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
  return Graph(n, es);
}

inline Graph complete(int n) {
  std::vector<RawEdge> es;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
  return Graph(n, es);
}

inline Graph petersen() {
  std::vector<RawEdge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(i, i + 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph(10, es);
}

/// C6 on 0..5 plus the chord {0,3}: the six-cycle 1..6 with chord 1-4,
/// shifted to zero-based ids.
inline Graph c6_chord() {
  return make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
}

}  // namespace fixtures
