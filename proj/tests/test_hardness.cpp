#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "matchflip/error.hpp"
#include "matchflip/hardness.hpp"
#include "matchflip/oracle.hpp"
#include "ncl_machines.hpp"

using namespace matchflip;
using namespace fixtures;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::Internal;
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
  return d;
}

}  // namespace

TEST_CASE("validate_ncl") {
  NclMachine m = machines::and_theta();
  // Vertex 0: both weight-1 edges in, weight-2 edge out.
  CHECK(validate_ncl(m, {{0, 0, 1}}));
  CHECK_FALSE(validate_ncl(m, {{0, 1, 1}}));
  CHECK_FALSE(validate_ncl(m, {{0, 0, NclConfiguration::kNeutral}}));
  NclMachine o = machines::or_theta();
  CHECK_FALSE(validate_ncl(o, {{1, 1, 1}}));  // vertex 0 all outward
  CHECK(validate_ncl(o, {{0, 1, 1}}));
  NclMachine bad{{NclVertexType::Or, NclVertexType::Or}, {{0, 1, 2}, {0, 1, 2}}};
  CHECK(code_of([&] { validate_ncl(bad, {{0, 1}}); }) == ErrorCode::MalformedMachine);
  NclMachine weights{{NclVertexType::And, NclVertexType::And}, {{0, 1, 2}, {0, 1, 2}, {0, 1, 1}}};
  CHECK(code_of([&] { validate_machine(weights); }) == ErrorCode::MalformedMachine);
  CHECK(code_of([&] { validate_ncl(o, {{0, 1}}); }) == ErrorCode::InvalidConfiguration);
  CHECK(code_of([&] { validate_ncl(o, {{0, 1, 5}}); }) == ErrorCode::InvalidConfiguration);
}

TEST_CASE("NCL reachability on the test machines") {
  auto and_cfg = valid_configurations(machines::and_theta());
  REQUIRE(and_cfg.size() == 2);
  CHECK_FALSE(ncl_reachable(machines::and_theta(), and_cfg[0], and_cfg[1]));
  auto or_cfg = valid_configurations(machines::or_theta());
  CHECK(or_cfg.size() == 6);
  for (const auto& c : or_cfg) CHECK(ncl_reachable(machines::or_theta(), or_cfg[0], c));
}

TEST_CASE("gadget self-tests") {
  for (int k : {4, 6}) {
    for (GadgetKind kind : {GadgetKind::Edge, GadgetKind::And, GadgetKind::Or}) {
      CAPTURE(k);
      CAPTURE(to_string(kind));
      GadgetReport r = gadget_selftest(kind, k);
      CHECK(r.forbidden_unmatchable);
      CHECK(r.legal_nonempty);
      CHECK(r.internally_connected);
      CHECK(r.external_adjacency);
      CHECK(r.cycles_use_orange);
      CHECK(r.passed());
    }
  }
  // Regression counts per class (bit p set: port p inward).
  auto counts = [](GadgetKind kind) {
    std::vector<std::size_t> out;
    for (const auto& c : gadget_selftest(kind).classes) out.push_back(c.matchings);
    return out;
  };
  CHECK(counts(GadgetKind::Edge) == std::vector<std::size_t>{4, 1, 1, 0});
  CHECK(counts(GadgetKind::And) == std::vector<std::size_t>{0, 1, 0, 2, 0, 2, 1, 5});
  CHECK(counts(GadgetKind::Or) == std::vector<std::size_t>{0, 1, 1, 3, 1, 3, 3, 9});
  // Edge gadget: reversal passes through the neutral class only.
  auto edge = gadget_selftest(GadgetKind::Edge);
  CHECK(edge.transitions == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
}

TEST_CASE("gadget templates") {
  for (GadgetKind kind : {GadgetKind::Edge, GadgetKind::And, GadgetKind::Or}) {
    const GadgetTemplate& t = gadget_template(kind);
    Graph g(t.vertices, std::span<const Edge>(t.edges));
    CHECK(max_degree(g) <= 3);
    for (const Edge& e : t.edges) CHECK(t.color[e.u] != t.color[e.v]);
    for (const auto& p : t.ports) CHECK(t.color[p[0]] != t.color[p[1]]);
    CHECK(t.orange.size() == 3);
  }
  const GadgetTemplate& e = gadget_template(GadgetKind::Edge);
  for (const auto& p : e.ports) {
    CHECK(Graph(8, std::span<const Edge>(e.edges)).degree(p[0]) == 2);
    CHECK(Graph(8, std::span<const Edge>(e.edges)).degree(p[1]) == 2);
  }
}

TEST_CASE("reduction structure and round trips") {
  for (const NclMachine& m : machines::all()) {
    GadgetInstance inst = build_gadget_graph(m);
    CHECK(inst.graph.n() == 8 * m.vertex_count() + 4 * m.edge_count());
    CHECK(bipartition(inst.graph).has_value());
    CHECK(max_degree(inst.graph) == 5);
    auto cfgs = valid_configurations(m);
    std::set<std::vector<Edge>> images;
    for (const auto& c : cfgs) {
      Matching pm = encode(inst, c);
      CHECK(pm.is_perfect());
      CHECK(decode(inst, pm) == c);
      images.insert(pm.edges());
    }
    CHECK(images.size() == cfgs.size());
    ReducedInstance r = reduce_ncl_to_pmr(m, cfgs.front(), cfgs.front());
    CHECK(r.m_ini == r.m_tar);
  }
  NclMachine m = machines::or_theta();
  CHECK(code_of([&] { reduce_ncl_to_pmr(m, {{1, 1, 1}}, {{0, 1, 1}}); }) == ErrorCode::InvalidConfiguration);
  NclMachine dangling{{NclVertexType::And}, {{0, 1, 1}, {0, 2, 1}, {0, 3, 2}}};
  CHECK(code_of([&] { reduce_ncl_to_pmr(dangling, {{0, 0, 0}}, {{0, 0, 0}}); }) == ErrorCode::InvalidConfiguration);
}

TEST_CASE("matchings reachable from an encoding decode to valid configurations") {
  for (const NclMachine& m : {machines::and_theta(), machines::or_theta()}) {
    GadgetInstance inst = build_gadget_graph(m);
    ReconfigGraph rg = build_reconfiguration_graph(inst.graph, MatchingTarget::perfect_matchings(), Mode::flip());
    std::set<int> live;
    for (const auto& c : valid_configurations(m)) live.insert(rg.component[static_cast<std::size_t>(*rg.index_of(encode(inst, c)))]);
    std::size_t undecodable = 0;
    for (std::size_t i = 0; i < rg.nodes.size(); ++i) {
      if (live.count(rg.component[i])) {
        CHECK(validate_ncl(m, decode(inst, rg.nodes[i])));
      } else {
        try {
          decode(inst, rg.nodes[i]);
        } catch (const Error&) {
          ++undecodable;
        }
      }
    }
    // Split connector states exist, but only in components without encodings.
    CHECK(undecodable > 0);
  }
}

TEST_CASE("NCL reachability equals flip reachability of the reduction") {
  for (const NclMachine& m : machines::all()) {
    auto cfgs = valid_configurations(m);
    GadgetInstance inst = build_gadget_graph(m);
    // Flip components of the encodings, then compare all pairs.
    std::vector<int> comp(cfgs.size(), -1);
    int next = 0;
    for (std::size_t i = 0; i < cfgs.size(); ++i) {
      if (comp[i] >= 0) continue;
      comp[i] = next;
      Matching a = encode(inst, cfgs[i]);
      for (std::size_t j = i + 1; j < cfgs.size(); ++j) {
        if (comp[j] >= 0) continue;
        if (reachable(inst.graph, a, encode(inst, cfgs[j]), Mode::flip(), false).reachable) comp[j] = next;
      }
      ++next;
    }
    for (std::size_t i = 0; i < cfgs.size(); ++i)
      for (std::size_t j = 0; j < cfgs.size(); ++j)
        CHECK(ncl_reachable(m, cfgs[i], cfgs[j]) == (comp[i] == comp[j]));
  }
}

TEST_CASE("subdivide_for_kflip") {
  NclMachine m = machines::and_theta();
  GadgetInstance base = build_gadget_graph(m);
  CHECK(code_of([&] { subdivide_for_kflip(base, 5); }) == ErrorCode::KOdd);
  CHECK(code_of([&] { subdivide_for_kflip(base, 2); }) == ErrorCode::KTooSmall);
  GadgetInstance same = subdivide_for_kflip(base, 4);
  CHECK(same.graph == base.graph);

  GadgetInstance six = subdivide_for_kflip(base, 6);
  CHECK(six.graph.n() == base.graph.n() + 2 * static_cast<int>(base.orange.size()));
  CHECK(bipartition(six.graph).has_value());
  CHECK(max_degree(six.graph) <= 5);
  CHECK(code_of([&] { subdivide_for_kflip(six, 6); }) == ErrorCode::InvalidArgument);
  auto cfgs = valid_configurations(m);
  for (const auto& c : cfgs) {
    Matching pm = encode(six, c);
    CHECK(pm.is_perfect());
    CHECK(decode(six, pm) == c);
    CHECK(pm == map_matching(six, encode(base, c)));
  }
  // Same number of perfect matchings before and after.
  CHECK(enumerate_matchings(six.graph, MatchingTarget::perfect_matchings()).size() ==
        enumerate_matchings(base.graph, MatchingTarget::perfect_matchings()).size());
  // The frozen AND machine stays frozen under 6-flips.
  CHECK_FALSE(reachable(six.graph, encode(six, cfgs[0]), encode(six, cfgs[1]), Mode::kflip(6), false).reachable);
  // A live machine stays live.
  NclMachine o = machines::or_theta();
  GadgetInstance osix = subdivide_for_kflip(build_gadget_graph(o), 6);
  auto ocfg = valid_configurations(o);
  for (const auto& c : ocfg)
    CHECK(reachable(osix.graph, encode(osix, ocfg[0]), encode(osix, c), Mode::kflip(6), false).reachable);
}

TEST_CASE("split_completion") {
  Graph c4 = split_completion(cycle(4), std::vector<int>{0, 2});
  CHECK(c4.has_edge(0, 2));
  CHECK(c4.m() == 5);
  CHECK(enumerate_matchings(c4, MatchingTarget::perfect_matchings()).size() == 2);
  Graph c6 = split_completion(cycle(6), std::vector<int>{0, 2, 4});
  CHECK(c6.m() == 9);
  CHECK(enumerate_matchings(c6, MatchingTarget::perfect_matchings()).size() == 2);
  CHECK(split_completion(path(2), std::vector<int>{0}) == path(2));
  CHECK(code_of([] { split_completion(cycle(4), std::vector<int>{0, 1}); }) == ErrorCode::NotBipartite);
  CHECK(code_of([] { split_completion(path(3), std::vector<int>{1}); }) == ErrorCode::UnbalancedSides);
}

TEST_CASE("k_factor_instance") {
  Graph k2 = path(2);
  Matching m = match(k2, {{0, 1}});
  auto two = k_factor_instance(k2, m, m, 2);
  CHECK(two.graph.n() == 4);
  CHECK(is_k_factor(two.graph, two.h_ini, 2));

  Graph c4 = cycle(4);
  Matching a = match(c4, {{0, 1}, {2, 3}});
  Matching b = match(c4, {{1, 2}, {3, 0}});
  auto three = k_factor_instance(c4, a, b, 3);
  CHECK(three.graph.n() == 12);
  CHECK(is_k_factor(three.graph, three.h_ini, 3));
  CHECK(is_k_factor(three.graph, three.h_tar, 3));
  for (int v = 4; v < 12; ++v) CHECK(three.graph.degree(v) == 3);
  for (int v = 0; v < 4; ++v) CHECK(three.graph.degree(v) == 2 + 2);
  CHECK(factor_flip_reachable(three.graph, three.h_ini, three.h_tar));
  CHECK(code_of([&] { k_factor_instance(c4, a, b, 1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([&] { k_factor_instance(c4, match(c4, {{0, 1}}), b, 2); }) == ErrorCode::NotPerfect);

  // C6 has two perfect matchings and no flip between them.
  Graph c6 = cycle(6);
  Matching p = match(c6, {{0, 1}, {2, 3}, {4, 5}});
  Matching q = match(c6, {{1, 2}, {3, 4}, {5, 0}});
  auto six = k_factor_instance(c6, p, q, 3);
  CHECK_FALSE(factor_flip_reachable(six.graph, six.h_ini, six.h_tar));
}
