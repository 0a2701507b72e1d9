#include "matchflip/max_matching.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

namespace matchflip {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
using BoostVertex = boost::graph_traits<BoostGraph>::vertex_descriptor;

Matching run_blossom(int n, const std::vector<Edge>& edges) {
  BoostGraph bg(static_cast<std::size_t>(n));
  for (const Edge& e : edges) boost::add_edge(e.u, e.v, bg);
  std::vector<BoostVertex> mate(static_cast<std::size_t>(n));
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  const BoostVertex none = boost::graph_traits<BoostGraph>::null_vertex();
  Matching m(n);
  for (int v = 0; v < n; ++v) {
    BoostVertex w = mate[v];
    if (w != none && static_cast<int>(w) > v) m.add(v, static_cast<int>(w));
  }
  return m;
}

}  // namespace

Matching max_matching(const Graph& g) {
  if (g.n() == 0) return Matching(0);
  return run_blossom(g.n(), g.edges());
}

int max_matching_size_without(const Graph& g, std::span<const int> removed) {
  std::vector<char> gone(static_cast<std::size_t>(g.n()), 0);
  for (int v : removed) gone[v] = 1;
  std::vector<Edge> kept;
  for (const Edge& e : g.edges())
    if (!gone[e.u] && !gone[e.v]) kept.push_back(e);
  if (g.n() == 0) return 0;
  return run_blossom(g.n(), kept).size();
}

}  // namespace matchflip
