#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "fixtures.hpp"
#include "matchflip/error.hpp"
#include "matchflip/generators.hpp"
#include "matchflip/oracle.hpp"
#include "matchflip/strongly_orderable.hpp"

using namespace matchflip;
using namespace fixtures;

namespace {

/// Direct transcription of the definition, all distinct quadruples.
bool brute_strong(const Graph& g, const std::vector<int>& order) {
  const int n = g.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l) {
          if (k == i || k == j || l == i || l == j) continue;
          int vi = order[i], vj = order[j], vk = order[k], vl = order[l];
          if (g.has_edge(vi, vk) && g.has_edge(vi, vl) && g.has_edge(vj, vk) && !g.has_edge(vj, vl)) return false;
        }
  return true;
}

}  // namespace

TEST_CASE("verify_strong_ordering examples") {
  Graph c4 = cycle(4);
  std::vector<int> o{0, 1, 3, 2};
  CHECK(verify_strong_ordering(c4, o).valid);

  Graph k3 = complete(3);
  std::vector<int> id3{0, 1, 2};
  CHECK(verify_strong_ordering(k3, id3).valid);
  CHECK(verify_strong_ordering(path(3), id3).valid);

  Graph c6 = cycle(6);
  std::vector<int> id6{0, 1, 2, 3, 4, 5};
  auto bad = verify_strong_ordering(c6, id6);
  CHECK_FALSE(bad.valid);
  auto [vi, vj, vk, vl] = bad.witness;
  CHECK(c6.has_edge(vi, vk));
  CHECK(c6.has_edge(vi, vl));
  CHECK(c6.has_edge(vj, vk));
  CHECK_FALSE(c6.has_edge(vj, vl));

  // No ordering of C6 is strong.
  std::vector<int> perm = id6;
  int valid = 0;
  do valid += verify_strong_ordering(c6, perm).valid;
  while (std::next_permutation(perm.begin(), perm.end()));
  CHECK(valid == 0);

  std::vector<int> dup{0, 0, 1, 2};
  CHECK_THROWS_AS(verify_strong_ordering(c4, dup), Error);
}

TEST_CASE("bitset verifier agrees with the definition") {
  Rng rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    int n = 4 + static_cast<int>(rng() % 6);
    std::vector<RawEdge> es;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng() % 2) es.emplace_back(i, j);
    Graph g(n, es);
    std::vector<int> order = random_permutation(n, rng);
    CHECK(verify_strong_ordering(g, order).valid == brute_strong(g, order));
  }
}

TEST_CASE("right-endpoint order of a random interval graph is strong") {
  Rng rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    Instance inst = random_interval_instance(2 + 2 * static_cast<int>(rng() % 5), rng);
    CHECK(brute_strong(inst.graph, *inst.strong_order));
  }
}

TEST_CASE("canonical_matching") {
  Graph c4 = cycle(4);
  StrongOrder o(c4, {0, 1, 3, 2});
  CHECK(canonical_matching(c4, o) == match(c4, {{0, 1}, {3, 2}}));

  Graph k2 = path(2);
  CHECK(canonical_matching(k2, StrongOrder(k2, {0, 1})) == match(k2, {{0, 1}}));

  Graph p3 = path(3);
  CHECK_THROWS_AS(canonical_matching(p3, StrongOrder(p3, {0, 1, 2})), Error);
}

TEST_CASE("solve_strongly_orderable examples") {
  Graph c4 = cycle(4);
  StrongOrder o(c4, {0, 1, 3, 2});
  Matching a = match(c4, {{0, 1}, {2, 3}});
  Matching b = match(c4, {{0, 3}, {1, 2}});
  CHECK(solve_strongly_orderable(c4, o, a, a).moves.empty());
  auto seq = solve_strongly_orderable(c4, o, a, b);
  CHECK(seq.moves.size() <= 2);
  CHECK(verify_sequence(c4, a, seq, b).accepted);

  Graph k4 = complete(4);
  StrongOrder ok4(k4, {0, 1, 2, 3});
  Matching x = match(k4, {{0, 2}, {1, 3}});
  Matching y = match(k4, {{0, 3}, {1, 2}});
  auto sk = solve_strongly_orderable(k4, ok4, x, y);
  CHECK(sk.moves.size() <= 4);
  CHECK(verify_sequence(k4, x, sk, y).accepted);
  CHECK(reachable(k4, x, y, Mode::flip(), false).distance == 1u);

  CHECK_THROWS_AS(solve_strongly_orderable(c4, o, match(c4, {{0, 1}}), b), Error);
  CHECK_THROWS_AS(StrongOrder(cycle(6), {0, 1, 2, 3, 4, 5}), Error);
}

TEST_CASE("solver agrees with oracle on small interval graphs") {
  Rng rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + 2 * static_cast<int>(rng() % 5);
    Instance inst = random_interval_instance(n, rng, 1.5);
    StrongOrder order(inst.graph, *inst.strong_order);
    auto pms = enumerate_matchings(inst.graph, MatchingTarget::perfect_matchings());
    auto rg = build_reconfiguration_graph(inst.graph, MatchingTarget::perfect_matchings(), Mode::flip());
    CHECK(rg.component_count == 1);
    for (const Matching& a : pms)
      for (const Matching& b : pms) {
        auto seq = solve_strongly_orderable(inst.graph, order, a, b);
        CHECK(seq.moves.size() <= static_cast<std::size_t>(n));
        CHECK(verify_sequence(inst.graph, a, seq, b).accepted);
      }
  }
}

TEST_CASE("trusted order still detects a broken swap") {
  Graph c6 = cycle(6);
  auto bad = StrongOrder::trusted(6, {0, 1, 2, 3, 4, 5});
  Matching a = match(c6, {{0, 1}, {2, 3}, {4, 5}});
  Matching b = match(c6, {{1, 2}, {3, 4}, {5, 0}});
  CHECK_THROWS_AS(solve_strongly_orderable(c6, bad, a, b), Error);
}
