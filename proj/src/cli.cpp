#include "matchflip/cli.hpp"

#include <cstdlib>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "matchflip/cograph.hpp"
#include "matchflip/error.hpp"
#include "matchflip/generators.hpp"
#include "matchflip/hardness.hpp"
#include "matchflip/io.hpp"
#include "matchflip/oracle.hpp"
#include "matchflip/outerplanar.hpp"
#include "matchflip/strongly_orderable.hpp"

namespace matchflip {

namespace {

using json = nlohmann::ordered_json;

struct ModeOptions {
  std::string name = "flip";
  int k = 4;

  Mode mode() const {
    if (name == "flip") return Mode::flip();
    if (name == "flip_slide") return Mode::flip_slide();
    return Mode::kflip(k);
  }
};

void add_mode(CLI::App* cmd, ModeOptions& m) {
  cmd->add_option("--mode", m.name, "flip, flip_slide or kflip")
      ->check(CLI::IsMember({"flip", "flip_slide", "kflip"}));
  cmd->add_option("--k", m.k, "cycle length for kflip");
}

/// Flag, then MATCHFLIP_BUDGET, then the library default.
std::size_t budget_of(const std::optional<std::size_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("MATCHFLIP_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || *env == '-') fail(ErrorCode::ParseError, "MATCHFLIP_BUDGET must be a count");
    return static_cast<std::size_t>(v);
  }
  return kDefaultBudget;
}

MatchingTarget target_of(const Instance& inst) {
  return inst.m_ini.is_perfect() ? MatchingTarget::perfect_matchings() : MatchingTarget::of_size(inst.m_ini.size());
}

void emit(const std::optional<std::string>& path, std::string_view text, std::ostream& out) {
  if (path) write_file(*path, text);
  else out << text;
}

struct SolveOptions {
  std::string instance;
  std::string cls = "auto";
  std::optional<std::string> emit;
};

int cmd_solve(const SolveOptions& o, std::ostream& out) {
  Instance inst = parse_instance(read_file(o.instance));
  const Graph& g = inst.graph;
  if (inst.m_ini.size() != inst.m_tar.size()) fail(ErrorCode::SizeMismatch, "matchings differ in size");
  std::string cls = o.cls;
  if (cls == "auto") {
    if (!find_induced_p4(g)) {
      cls = "cograph";
    } else {
      try {
        if (inst.boundary_order) verify_boundary_order(g, *inst.boundary_order);
        else if (inst.m_ini.is_perfect()) solve_outerplanar(g, inst.m_ini, inst.m_ini);
        else throw Error(ErrorCode::NotPerfect, "");
        cls = "outerplanar";
      } catch (const Error& e) {
        if (e.code() != ErrorCode::NotOuterplanar && e.code() != ErrorCode::NotPerfect) throw;
        if (!inst.strong_order) fail(ErrorCode::InvalidArgument, "no solver applies to this instance");
        cls = "strongly_orderable";
      }
    }
  }
  bool yes = false;
  std::optional<ReconfigSequence> seq;
  if (cls == "cograph") {
    auto r = solve_cograph(g, inst.m_ini, inst.m_tar);
    yes = r.yes;
    seq = std::move(r.sequence);
  } else if (cls == "outerplanar") {
    auto r = solve_outerplanar(g, inst.m_ini, inst.m_tar, inst.boundary_order);
    yes = r.yes;
    seq = std::move(r.sequence);
  } else {
    if (!inst.strong_order) fail(ErrorCode::InvalidArgument, "strongly_orderable needs a strong_order hint");
    StrongOrder order(g, *inst.strong_order);
    seq = solve_strongly_orderable(g, order, inst.m_ini, inst.m_tar);
    yes = true;
  }
  out << (yes ? "YES" : "NO") << "\n";
  out << "class " << cls << "\n";
  if (yes) {
    Verdict v = verify_sequence(g, inst.m_ini, *seq, inst.m_tar);
    if (!v.accepted) fail(ErrorCode::Internal, "solver emitted a rejected sequence: " + v.detail);
    out << "length " << seq->moves.size() << "\n";
    if (o.emit) write_file(*o.emit, write_sequence(*seq));
  }
  return yes ? kExitYes : kExitNo;
}

struct VerifyOptions {
  std::string sequence;
  std::string instance;
};

int cmd_verify(const VerifyOptions& o, ModeOptions& mode_opts, bool mode_given, std::ostream& out) {
  ReconfigSequence seq = parse_sequence(read_file(o.sequence));
  Instance inst = parse_instance(read_file(o.instance));
  if (mode_given) seq.mode = mode_opts.mode();
  Verdict v = verify_sequence(inst.graph, inst.m_ini, seq, inst.m_tar);
  if (v.accepted) {
    out << "Accept\n" << "length " << seq.moves.size() << "\n";
    return kExitYes;
  }
  out << "Reject\n" << "step " << v.step << "\n" << "reason " << to_string(v.reason) << "\n";
  if (!v.detail.empty()) out << "detail " << v.detail << "\n";
  return kExitNo;
}

struct OracleOptions {
  std::string instance;
  bool want_path = false;
  std::optional<std::size_t> budget;
  std::optional<std::string> emit;
};

int cmd_oracle(const OracleOptions& o, const ModeOptions& m, std::ostream& out) {
  Instance inst = parse_instance(read_file(o.instance));
  Mode mode = m.mode();
  Reachability r = reachable(inst.graph, inst.m_ini, inst.m_tar, mode, o.want_path, budget_of(o.budget));
  out << (r.reachable ? "YES" : "NO") << "\n";
  json j;
  j["reachable"] = r.reachable;
  j["distance"] = r.distance ? json(*r.distance) : json(nullptr);
  j["explored"] = r.explored;
  j["mode"] = to_string(mode);
  if (r.path) j["path"] = json::parse(write_sequence(*r.path));
  out << j.dump() << "\n";
  if (r.path && o.emit) write_file(*o.emit, write_sequence(*r.path));
  return r.reachable ? kExitYes : kExitNo;
}

struct StatsOptions {
  std::string instance;
  std::optional<std::size_t> budget;
};

int cmd_stats(const StatsOptions& o, const ModeOptions& m, std::ostream& out) {
  Instance inst = parse_instance(read_file(o.instance));
  Mode mode = m.mode();
  ReconfigGraphStats s = reconfiguration_stats(inst.graph, target_of(inst), mode, budget_of(o.budget), inst.m_ini);
  json j;
  j["mode"] = to_string(mode);
  j["nodes"] = s.nodes;
  j["components"] = s.components;
  j["component_sizes"] = s.component_sizes;
  j["diameter"] = s.diameter;
  out << j.dump() << "\n";
  return kExitYes;
}

struct GenNclOptions {
  std::string machine;
  std::optional<int> k;
  std::optional<std::string> out;
};

int cmd_gen_ncl(const GenNclOptions& o, std::ostream& out) {
  NclInstance ncl = parse_ncl(read_file(o.machine));
  ReducedInstance r = reduce_ncl_to_pmr(ncl.machine, ncl.c_ini, ncl.c_tar);
  Instance inst;
  if (o.k && *o.k != 4) {
    GadgetInstance sub = subdivide_for_kflip(r.gadgets, *o.k);
    inst.graph = sub.graph;
    inst.m_ini = map_matching(sub, r.m_ini);
    inst.m_tar = map_matching(sub, r.m_tar);
  } else {
    if (o.k) Mode::kflip(*o.k);
    inst.graph = r.gadgets.graph;
    inst.m_ini = r.m_ini;
    inst.m_tar = r.m_tar;
  }
  emit(o.out, write_instance(inst), out);
  return kExitYes;
}

struct GenRandomOptions {
  std::string cls;
  int n = 0;
  std::uint64_t seed = 0;
  std::optional<std::string> out;
};

int cmd_gen_random(const GenRandomOptions& o, std::ostream& out) {
  if (o.n < 0) fail(ErrorCode::InvalidArgument, "n must be non-negative");
  Rng rng(o.seed);
  Instance inst;
  if (o.cls == "strongly_orderable") inst = random_interval_instance(o.n, rng);
  else if (o.cls == "outerplanar") inst = random_outerplanar_instance(o.n, rng);
  else inst = random_cograph_instance(o.n, rng);
  emit(o.out, write_instance(inst), out);
  return kExitYes;
}

int exit_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::BudgetExceeded: return kExitBudget;
    case ErrorCode::Internal: return kExitInternal;
    default: return kExitMalformed;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matching reconfiguration toolkit", "matchflip"};
  app.require_subcommand(1, 1);

  SolveOptions solve;
  auto* c_solve = app.add_subcommand("solve", "decide reachability with a polynomial solver");
  c_solve->add_option("instance", solve.instance, "instance JSON")->required();
  c_solve->add_option("--class", solve.cls, "auto, strongly_orderable, outerplanar or cograph")
      ->check(CLI::IsMember({"auto", "strongly_orderable", "outerplanar", "cograph"}));
  c_solve->add_option("--emit", solve.emit, "write the sequence here on YES");

  VerifyOptions verify;
  ModeOptions verify_mode;
  auto* c_verify = app.add_subcommand("verify", "replay a sequence against an instance");
  c_verify->add_option("sequence", verify.sequence, "sequence JSON")->required();
  c_verify->add_option("instance", verify.instance, "instance JSON")->required();
  add_mode(c_verify, verify_mode);

  OracleOptions oracle;
  ModeOptions oracle_mode;
  auto* c_oracle = app.add_subcommand("oracle", "brute-force reachability by BFS");
  c_oracle->add_option("instance", oracle.instance, "instance JSON")->required();
  add_mode(c_oracle, oracle_mode);
  c_oracle->add_flag("--want-path", oracle.want_path, "include a shortest sequence");
  c_oracle->add_option("--budget", oracle.budget, "state budget (default: MATCHFLIP_BUDGET or 2000000)");
  c_oracle->add_option("--emit", oracle.emit, "write the path here");

  StatsOptions stats;
  ModeOptions stats_mode;
  auto* c_stats = app.add_subcommand("stats", "reconfiguration graph statistics");
  c_stats->add_option("instance", stats.instance, "instance JSON")->required();
  add_mode(c_stats, stats_mode);
  c_stats->add_option("--budget", stats.budget, "state budget (default: MATCHFLIP_BUDGET or 2000000)");

  GenNclOptions gen_ncl;
  auto* c_gen_ncl = app.add_subcommand("gen-ncl", "reduce an NCL machine to a matching instance");
  c_gen_ncl->add_option("machine", gen_ncl.machine, "NCL JSON")->required();
  c_gen_ncl->add_option("--k", gen_ncl.k, "subdivide for k-flips (even, >= 4)");
  c_gen_ncl->add_option("--out", gen_ncl.out, "output path (default: stdout)");

  GenRandomOptions gen_random;
  auto* c_gen_random = app.add_subcommand("gen-random", "random instance of a solvable class");
  c_gen_random->add_option("--class", gen_random.cls, "strongly_orderable, outerplanar or cograph")
      ->required()
      ->check(CLI::IsMember({"strongly_orderable", "outerplanar", "cograph"}));
  c_gen_random->add_option("--n", gen_random.n, "vertex count")->required();
  c_gen_random->add_option("--seed", gen_random.seed, "RNG seed")->required();
  c_gen_random->add_option("--out", gen_random.out, "output path (default: stdout)");

  std::vector<std::string> reversed_args(args.rbegin(), args.rend());
  try {
    app.parse(reversed_args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitYes;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitYes;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitMalformed;
  }

  try {
    if (c_solve->parsed()) return cmd_solve(solve, out);
    if (c_verify->parsed()) return cmd_verify(verify, verify_mode, c_verify->count("--mode") > 0, out);
    if (c_oracle->parsed()) return cmd_oracle(oracle, oracle_mode, out);
    if (c_stats->parsed()) return cmd_stats(stats, stats_mode, out);
    if (c_gen_ncl->parsed()) return cmd_gen_ncl(gen_ncl, out);
    return cmd_gen_random(gen_random, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace matchflip
