#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fixtures.hpp"
#include "matchflip/error.hpp"
#include "matchflip/max_matching.hpp"
#include "matchflip/oracle.hpp"

using namespace matchflip;
using namespace fixtures;

TEST_CASE("enumerate_matchings") {
  auto k4 = enumerate_matchings(complete(4), MatchingTarget::perfect_matchings());
  REQUIRE(k4.size() == 3);
  CHECK(k4[0].edges() == std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK(k4[1].edges() == std::vector<Edge>{{0, 2}, {1, 3}});
  CHECK(k4[2].edges() == std::vector<Edge>{{0, 3}, {1, 2}});
  CHECK(enumerate_matchings(cycle(6), MatchingTarget::perfect_matchings()).size() == 2);
  CHECK(enumerate_matchings(cycle(4), MatchingTarget::of_size(1)).size() == 4);
  CHECK(enumerate_matchings(path(3), MatchingTarget::perfect_matchings()).empty());
  CHECK(enumerate_matchings(Graph(), MatchingTarget::perfect_matchings()).size() == 1);
  // The Petersen graph has six perfect matchings.
  CHECK(enumerate_matchings(petersen(), MatchingTarget::perfect_matchings()).size() == 6);
  CHECK_THROWS_AS(enumerate_matchings(complete(8), MatchingTarget::perfect_matchings(), 10), Error);
}

TEST_CASE("reachable") {
  Graph k4 = complete(4);
  auto r = reachable(k4, match(k4, {{0, 1}, {2, 3}}), match(k4, {{0, 2}, {1, 3}}), Mode::flip(), true);
  CHECK(r.reachable);
  CHECK(r.distance == 1u);
  REQUIRE(r.path);
  CHECK(r.path->moves.size() == 1);

  Graph c6 = cycle(6);
  Matching a = match(c6, {{0, 1}, {2, 3}, {4, 5}});
  Matching b = match(c6, {{1, 2}, {3, 4}, {5, 0}});
  CHECK_FALSE(reachable(c6, a, b, Mode::flip(), false).reachable);
  CHECK(reachable(c6, a, b, Mode::kflip(6), false).distance == 1u);

  Graph g = c6_chord();
  Matching ini = match(g, {{0, 1}, {2, 3}, {4, 5}});
  Matching tar = match(g, {{1, 2}, {3, 4}, {5, 0}});
  auto rc = reachable(g, ini, tar, Mode::flip(), true);
  CHECK(rc.distance == 2u);
  REQUIRE(rc.path);
  CHECK(verify_sequence(g, ini, *rc.path, tar).accepted);
  // The midpoint is {14,23,56} in one-based labels.
  CHECK(apply_move(g, ini, rc.path->moves[0]) == match(g, {{0, 3}, {1, 2}, {4, 5}}));

  CHECK_THROWS_AS(reachable(g, ini, match(g, {{0, 1}}), Mode::flip(), false), Error);
}

TEST_CASE("reachable is symmetric and paths verify") {
  Graph g = petersen();
  auto pms = enumerate_matchings(g, MatchingTarget::of_size(3));
  for (std::size_t i = 0; i < pms.size(); i += 37)
    for (std::size_t j = 0; j < pms.size(); j += 53) {
      auto ab = reachable(g, pms[i], pms[j], Mode::flip_slide(), true);
      auto ba = reachable(g, pms[j], pms[i], Mode::flip_slide(), false);
      CHECK(ab.reachable == ba.reachable);
      CHECK(ab.distance == ba.distance);
      if (ab.path) CHECK(verify_sequence(g, pms[i], *ab.path, pms[j]).accepted);
    }
}

TEST_CASE("reconfiguration_stats") {
  auto k4 = reconfiguration_stats(complete(4), MatchingTarget::perfect_matchings(), Mode::flip());
  CHECK(k4.nodes == 3);
  CHECK(k4.components == 1);
  CHECK(k4.diameter == 1);

  auto c6 = reconfiguration_stats(cycle(6), MatchingTarget::perfect_matchings(), Mode::flip());
  CHECK(c6.nodes == 2);
  CHECK(c6.components == 2);
  CHECK(c6.component_sizes == std::vector<std::size_t>{1, 1});

  auto c6k = reconfiguration_stats(cycle(6), MatchingTarget::perfect_matchings(), Mode::kflip(6));
  CHECK(c6k.components == 1);
  CHECK(c6k.diameter == 1);
}

TEST_CASE("kflip(4) agrees with flip-only on perfect matchings") {
  Graph g = complete(6);
  auto a = reconfiguration_stats(g, MatchingTarget::perfect_matchings(), Mode::flip());
  auto b = reconfiguration_stats(g, MatchingTarget::perfect_matchings(), Mode::kflip(4));
  CHECK(a.nodes == b.nodes);
  CHECK(a.components == b.components);
  CHECK(a.diameter == b.diameter);
}

TEST_CASE("alternating cycles of K6") {
  Graph g = complete(6);
  Matching m = match(g, {{0, 1}, {2, 3}, {4, 5}});
  // Six-cycles alternating with a fixed perfect matching of K6: 8.
  CHECK(alternating_cycles(g, m, 6).size() == 8);
  CHECK(alternating_cycles(g, m, 4).size() == 6);
}

TEST_CASE("max_matching") {
  CHECK(max_matching(cycle(4)).size() == 2);
  CHECK(max_matching(complete(3)).size() == 1);
  CHECK(max_matching(petersen()).size() == 5);
  CHECK(max_matching(Graph()).size() == 0);
}
