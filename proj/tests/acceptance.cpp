// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "matchflip/cograph.hpp"
#include "matchflip/error.hpp"
#include "matchflip/generators.hpp"
#include "matchflip/hardness.hpp"
#include "matchflip/oracle.hpp"
#include "matchflip/outerplanar.hpp"
#include "matchflip/strongly_orderable.hpp"
#include "ncl_machines.hpp"

using namespace matchflip;
using namespace fixtures;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <typename Fn>
double timed(Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return seconds_since(t0);
}

int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
  return d;
}

std::string pair_name(const Matching& a, const Matching& b) {
  std::ostringstream s;
  for (const Edge& e : a.edges()) s << e.u << "-" << e.v << " ";
  s << "->";
  for (const Edge& e : b.edges()) s << " " << e.u << "-" << e.v;
  return s.str();
}

void cograph_oracle(Outcome& o) {
  std::size_t graphs = 0, pairs = 0, yes = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : all_connected_cographs(n)) {
      ++graphs;
      CographSolver solver(g);
      for (int k = 0; 2 * k <= n; ++k) {
        auto rg = build_reconfiguration_graph(g, MatchingTarget::of_size(k), Mode::flip_slide());
        if (rg.nodes.empty()) break;
        for (std::size_t i = 0; i < rg.nodes.size(); ++i) {
          for (std::size_t j = 0; j < rg.nodes.size(); ++j) {
            ++pairs;
            bool expect = rg.component[i] == rg.component[j];
            auto seq = solver.solve(rg.nodes[i], rg.nodes[j]);
            o.require(seq.has_value() == expect, "n=" + std::to_string(n) + " " + pair_name(rg.nodes[i], rg.nodes[j]));
            if (!seq) continue;
            ++yes;
            o.require(verify_sequence(g, rg.nodes[i], *seq, rg.nodes[j]).accepted, "sequence rejected");
          }
        }
      }
    }
  }
  o.detail << graphs << " connected cographs (n <= 8), " << pairs << " equal-size pairs, " << yes
           << " reachable, every sequence verified";
}

void outerplanar_oracle(Outcome& o) {
  Rng rng(2024);
  std::size_t graphs = 0, pairs = 0, yes = 0;
  while (graphs < 500) {
    int n = 4 + 2 * static_cast<int>(rng() % 4);
    double chords = static_cast<double>(rng() % 100) / 100.0;
    Instance inst = random_outerplanar_instance(n, rng, chords);
    ++graphs;
    auto rg = build_reconfiguration_graph(inst.graph, MatchingTarget::perfect_matchings(), Mode::flip());
    for (std::size_t i = 0; i < rg.nodes.size(); ++i) {
      for (std::size_t j = 0; j < rg.nodes.size(); ++j) {
        ++pairs;
        bool expect = rg.component[i] == rg.component[j];
        auto hint = (i + j) % 2 ? inst.boundary_order : std::nullopt;
        OuterplanarResult r = solve_outerplanar(inst.graph, rg.nodes[i], rg.nodes[j], hint);
        o.require(r.yes == expect, "n=" + std::to_string(n) + " " + pair_name(rg.nodes[i], rg.nodes[j]));
        if (!r.yes) continue;
        ++yes;
        o.require(r.sequence && verify_sequence(inst.graph, rg.nodes[i], *r.sequence, rg.nodes[j]).accepted,
                  "sequence rejected");
        o.require(r.sequence && r.sequence->moves.size() <= static_cast<std::size_t>(n), "sequence longer than n");
      }
    }
  }
  o.detail << graphs << " 2-connected outerplanar graphs (n <= 10), " << pairs << " perfect-matching pairs, " << yes
           << " reachable";
}

void strongly_orderable_suite(Outcome& o) {
  Rng rng(99);
  std::size_t longest = 0;
  int cases = 0;
  for (; cases < 500; ++cases) {
    int n = 2 + 2 * static_cast<int>(rng() % 100);
    Instance inst = random_interval_instance(n, rng);
    StrongOrder order(inst.graph, *inst.strong_order);
    ReconfigSequence seq = solve_strongly_orderable(inst.graph, order, inst.m_ini, inst.m_tar);
    o.require(verify_sequence(inst.graph, inst.m_ini, seq, inst.m_tar).accepted, "sequence rejected");
    o.require(seq.moves.size() <= static_cast<std::size_t>(n), "sequence longer than n");
    longest = std::max(longest, seq.moves.size());
  }
  o.detail << cases << " random interval graphs (n <= 200) with verified orders, all sequences verified, longest "
           << longest;
}

void small_cycles(Outcome& o) {
  Graph c6 = cycle(6);
  Matching a = match(c6, {{0, 1}, {2, 3}, {4, 5}}), b = match(c6, {{1, 2}, {3, 4}, {5, 0}});
  o.require(!solve_outerplanar(c6, a, b).yes, "C6 solver says YES");
  o.require(!reachable(c6, a, b, Mode::flip(), false).reachable, "C6 oracle says YES");
  Graph c4 = cycle(4);
  Matching p = match(c4, {{0, 1}, {2, 3}}), q = match(c4, {{1, 2}, {3, 0}});
  auto r = solve_outerplanar(c4, p, q);
  o.require(r.yes && r.sequence && r.sequence->moves.size() == 1, "C4 solver not a single flip");
  auto d = reachable(c4, p, q, Mode::flip(), false);
  o.require(d.reachable && d.distance == 1u, "C4 oracle distance is not 1");
  o.detail << "C6 NO under solver and oracle; C4 YES at distance 1";
}

void gadget_suite(Outcome& o) {
  std::vector<GadgetReport> reports;
  double secs = timed([&] {
    for (GadgetKind kind : {GadgetKind::Edge, GadgetKind::And, GadgetKind::Or}) reports.push_back(gadget_selftest(kind));
  });
  for (const GadgetReport& r : reports) {
    o.require(r.passed(), to_string(r.kind) + " self-test");
    o.detail << to_string(r.kind) << " ok, ";
  }
  o.require(secs < 1.0, "self-tests took " + std::to_string(secs) + " s");
  o.detail << "total " << secs << " s";
}

void reduction_structure(Outcome& o) {
  auto list = machines::all();
  list.push_back(machines::or_prism());
  std::size_t configs = 0;
  for (const NclMachine& m : list) {
    o.require(m.vertex_count() <= 6, "machine too large");
    GadgetInstance inst = build_gadget_graph(m);
    o.require(bipartition(inst.graph).has_value(), "reduction not bipartite");
    o.require(max_degree(inst.graph) <= 5, "maximum degree above five");
    auto cfgs = valid_configurations(m);
    std::set<std::vector<Edge>> images;
    for (const auto& c : cfgs) {
      Matching pm = encode(inst, c);
      o.require(pm.is_perfect(), "encoding not perfect");
      o.require(decode(inst, pm) == c, "decode(encode(c)) != c");
      images.insert(pm.edges());
      ++configs;
    }
    o.require(images.size() == cfgs.size(), "encodings collide");
    ReducedInstance r = reduce_ncl_to_pmr(m, cfgs.front(), cfgs.back());
    o.require(r.m_ini == encode(inst, cfgs.front()) && r.m_tar == encode(inst, cfgs.back()), "reduction matchings");
  }
  o.detail << list.size() << " machines (<= 6 vertices): bipartite, max degree <= 5, " << configs
           << " configurations round-trip";
}

void end_to_end(Outcome& o) {
  std::size_t pairs = 0, yes = 0;
  for (const NclMachine& m : machines::all()) {
    GadgetInstance inst = build_gadget_graph(m);
    auto cfgs = valid_configurations(m);
    std::vector<Matching> enc;
    for (const auto& c : cfgs) enc.push_back(encode(inst, c));
    for (std::size_t i = 0; i < cfgs.size(); ++i)
      for (std::size_t j = 0; j < cfgs.size(); ++j) {
        ++pairs;
        bool ncl = ncl_reachable(m, cfgs[i], cfgs[j]);
        yes += ncl;
        bool flip = i == j || reachable(inst.graph, enc[i], enc[j], Mode::flip(), false).reachable;
        o.require(ncl == flip, "NCL and flip reachability differ");
      }
  }
  o.detail << machines::all().size() << " machines, " << pairs << " configuration pairs (" << yes
           << " reachable), NCL reachability equals flip reachability";
}

std::set<std::vector<Edge>> pm_set(const Graph& g) {
  std::set<std::vector<Edge>> out;
  for (const Matching& m : enumerate_matchings(g, MatchingTarget::perfect_matchings())) out.insert(m.edges());
  return out;
}

void corollaries(Outcome& o) {
  Rng rng(7);
  // Split completion on random balanced bipartite graphs.
  int split_cases = 0;
  for (; split_cases < 300; ++split_cases) {
    int n = 2 + 2 * static_cast<int>(rng() % 6);
    auto perm = random_permutation(n, rng);
    std::vector<int> side(perm.begin(), perm.begin() + n / 2);
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    for (int v : side) in[v] = true;
    int p = 20 + static_cast<int>(rng() % 70);
    std::vector<RawEdge> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (in[u] != in[v] && static_cast<int>(rng() % 100) < p) es.emplace_back(u, v);
    Graph g(n, es);
    o.require(pm_set(g) == pm_set(split_completion(g, side)), "split completion changed the perfect matchings");
  }

  // k-factor lift on small bases: every perfect-matching pair, k = 2..4.
  int factor_pairs = 0;
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + 2 * static_cast<int>(rng() % 3);
    std::vector<RawEdge> es;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() % 100 < 60) es.emplace_back(u, v);
    Graph g(n, es);
    auto pms = enumerate_matchings(g, MatchingTarget::perfect_matchings());
    for (int k = 2; k <= 4; ++k)
      for (const Matching& a : pms)
        for (const Matching& b : pms) {
          ++factor_pairs;
          KFactorInstance f = k_factor_instance(g, a, b, k);
          for (int v = n; v < f.graph.n(); ++v) o.require(f.graph.degree(v) == k, "new vertex degree != k");
          o.require(is_k_factor(f.graph, f.h_ini, k) && is_k_factor(f.graph, f.h_tar, k), "not a k-factor");
          o.require(factor_flip_reachable(f.graph, f.h_ini, f.h_tar) ==
                        reachable(g, a, b, Mode::flip(), false).reachable,
                    "k-factor reachability differs from the oracle");
        }
  }

  // Subdivision for 6-flips: per-gadget counts and connectivity.
  for (GadgetKind kind : {GadgetKind::Edge, GadgetKind::And, GadgetKind::Or}) {
    GadgetReport four = gadget_selftest(kind, 4), six = gadget_selftest(kind, 6);
    o.require(six.passed(), to_string(kind) + " self-test at k = 6");
    o.require(four.classes.size() == six.classes.size(), "class count changed");
    for (std::size_t c = 0; c < four.classes.size() && c < six.classes.size(); ++c)
      o.require(four.classes[c].matchings == six.classes[c].matchings, to_string(kind) + " class count changed");
  }
  for (const NclMachine& m : {machines::and_theta(), machines::or_theta()}) {
    GadgetInstance base = build_gadget_graph(m), sub = subdivide_for_kflip(base, 6);
    auto rb = build_reconfiguration_graph(base.graph, MatchingTarget::perfect_matchings(), Mode::flip());
    auto rs = build_reconfiguration_graph(sub.graph, MatchingTarget::perfect_matchings(), Mode::kflip(6));
    o.require(rb.nodes.size() == rs.nodes.size(), "subdivision changed the perfect-matching count");
    auto cfgs = valid_configurations(m);
    for (const auto& a : cfgs)
      for (const auto& b : cfgs) {
        auto ib = [&](const auto& rg, const GadgetInstance& gi, const NclConfiguration& c) {
          return rg.component[static_cast<std::size_t>(*rg.index_of(encode(gi, c)))];
        };
        o.require((ib(rb, base, a) == ib(rb, base, b)) == (ib(rs, sub, a) == ib(rs, sub, b)),
                  "6-flip reachability differs after subdivision");
      }
  }
  o.detail << "split completion on " << split_cases << " bipartite graphs (n <= 12); k-factor lift on "
           << factor_pairs << " pairs (n <= 6, k = 2..4); subdivision k = 6 keeps gadget counts and reachability";
}

/// Edge multiset touched by a move, to tell a genuine corruption from a
/// relabelling of the same move.
std::vector<Edge> footprint(const Move& mv) {
  std::vector<Edge> out;
  if (const auto* f = std::get_if<Flip>(&mv)) {
    for (std::size_t i = 0; i < f->cycle.size(); ++i)
      out.push_back(Edge::of(f->cycle[i], f->cycle[(i + 1) % f->cycle.size()]));
  } else {
    const auto& s = std::get<Slide>(mv);
    out = {s.removed, s.added};
  }
  std::sort(out.begin(), out.end());
  return out;
}

struct Source {
  Graph graph;
  Matching m_ini;
  Matching m_tar;
  ReconfigSequence seq;
};

std::vector<Source> mutation_sources(Rng& rng) {
  std::vector<Source> out;
  for (int i = 0; i < 40; ++i) {
    Instance inst = random_interval_instance(4 + 2 * static_cast<int>(rng() % 15), rng);
    StrongOrder order(inst.graph, *inst.strong_order);
    out.push_back({inst.graph, inst.m_ini, inst.m_tar, solve_strongly_orderable(inst.graph, order, inst.m_ini, inst.m_tar)});
  }
  for (int i = 0; i < 40; ++i) {
    Instance inst = random_outerplanar_instance(6 + 2 * static_cast<int>(rng() % 10), rng);
    Matching tar = random_flip_walk(inst.graph, inst.m_ini, 40, rng);
    auto r = solve_outerplanar(inst.graph, inst.m_ini, tar);
    if (r.yes) out.push_back({inst.graph, inst.m_ini, tar, *r.sequence});
  }
  for (int i = 0; i < 80; ++i) {
    Instance inst = random_cograph_instance(6 + static_cast<int>(rng() % 20), rng);
    if (auto seq = solve_cograph(inst.graph, inst.m_ini, inst.m_tar).sequence)
      out.push_back({inst.graph, inst.m_ini, inst.m_tar, *seq});
  }
  std::erase_if(out, [](const Source& s) { return s.seq.moves.empty(); });
  return out;
}

void mutations(Outcome& o) {
  Rng rng(31337);
  auto sources = mutation_sources(rng);
  for (const Source& s : sources) o.require(verify_sequence(s.graph, s.m_ini, s.seq, s.m_tar).accepted, "source rejected");
  int done = 0, rejected = 0;
  std::size_t kinds[4] = {0, 0, 0, 0};
  while (done < 10000) {
    const Source& s = sources[rng() % sources.size()];
    ReconfigSequence seq = s.seq;
    Matching tar = s.m_tar;
    const std::size_t i = rng() % seq.moves.size();
    int kind = static_cast<int>(rng() % 4);
    if (kind == 0) {
      // Move one vertex of the move elsewhere.
      Move mv = seq.moves[i];
      int x = static_cast<int>(rng() % s.graph.n());
      if (auto* f = std::get_if<Flip>(&mv)) {
        f->cycle[rng() % f->cycle.size()] = x;
      } else {
        auto& sl = std::get<Slide>(mv);
        int v = sl.pivot();
        sl.added = Edge::of(v, x == v ? (x + 1) % s.graph.n() : x);
      }
      if (footprint(mv) == footprint(seq.moves[i])) continue;
      seq.moves[i] = mv;
    } else if (kind == 1) {
      // Swap in a different legal move at the same step.
      Matching cur = s.m_ini;
      for (std::size_t j = 0; j < i; ++j) apply_move_inplace(s.graph, cur, seq.moves[j]);
      auto next = neighbors(s.graph, cur, seq.mode);
      if (next.size() < 2) continue;
      auto mv = move_between(cur, next[rng() % next.size()]);
      if (!mv || footprint(*mv) == footprint(seq.moves[i])) continue;
      seq.moves[i] = *mv;
    } else if (kind == 2) {
      seq.moves.erase(seq.moves.begin() + static_cast<std::ptrdiff_t>(i));
    } else {
      // Corrupt the final matching.
      auto next = neighbors(s.graph, tar, seq.mode);
      if (next.empty()) continue;
      tar = next[rng() % next.size()];
    }
    ++done;
    ++kinds[kind];
    bool accepted = verify_sequence(s.graph, s.m_ini, seq, tar).accepted;
    rejected += !accepted;
    o.require(!accepted, "mutant accepted");
  }
  o.detail << sources.size() << " verified source sequences, " << done << " mutations (" << kinds[0] << " vertex, "
           << kinds[1] << " swapped move, " << kinds[2] << " deleted move, " << kinds[3] << " final matching), "
           << rejected << " rejected";
}

void performance(Outcome& o) {
  Rng rng(10000);
  const int n = 10000;
  Instance interval = random_interval_instance(n, rng);
  StrongOrder order = StrongOrder::trusted(n, *interval.strong_order);
  ReconfigSequence seq;
  double t_so = timed([&] { seq = solve_strongly_orderable(interval.graph, order, interval.m_ini, interval.m_tar); });
  o.require(verify_sequence(interval.graph, interval.m_ini, seq, interval.m_tar).accepted, "interval sequence rejected");
  o.require(t_so < 1.0, "strongly orderable took " + std::to_string(t_so) + " s");

  Instance op = random_outerplanar_instance(n, rng);
  Matching tar = random_flip_walk(op.graph, op.m_ini, 20000, rng);
  OuterplanarResult r_yes, r_rand;
  double t_yes = timed([&] { r_yes = solve_outerplanar(op.graph, op.m_ini, tar); });
  double t_rand = timed([&] { r_rand = solve_outerplanar(op.graph, op.m_ini, op.m_tar); });
  o.require(r_yes.yes && verify_sequence(op.graph, op.m_ini, *r_yes.sequence, tar).accepted, "outerplanar walk target");
  o.require(t_yes < 1.0 && t_rand < 1.0, "outerplanar over 1 s");
  o.detail << "n = " << n << ": strongly orderable " << t_so << " s (" << seq.moves.size()
           << " flips), outerplanar " << t_yes << " s (YES, " << r_yes.sequence->moves.size() << " flips) and "
           << t_rand << " s (" << (r_rand.yes ? "YES" : "NO") << ")";
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"cograph oracle cross-validation", cograph_oracle},
      {"outerplanar oracle cross-validation", outerplanar_oracle},
      {"strongly orderable sequences", strongly_orderable_suite},
      {"C6 and C4", small_cycles},
      {"gadget self-tests", gadget_suite},
      {"reduction structure", reduction_structure},
      {"NCL end-to-end", end_to_end},
      {"corollaries", corollaries},
      {"verifier mutation tests", mutations},
      {"performance", performance},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Outcome o;
    double secs = 0;
    try {
      secs = timed([&] { fn(o); });
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << index << " " << name << ": " << o.detail.str() << " ["
              << secs << " s]" << std::endl;
  }
  return failed ? 1 : 0;
}
