// pursuit: command-line front end for generators, the exact solver, the cop
// strategies, the bound arithmetic and the verification suite.
//
// Exit codes: 0 ok, 1 fault or parse error, 2 usage, 3 resource limit.

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pursuit/bounds.hpp"
#include "pursuit/engine.hpp"
#include "pursuit/exact_solver.hpp"
#include "pursuit/expander.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/guard.hpp"
#include "pursuit/meyniel.hpp"
#include "pursuit/report.hpp"
#include "pursuit/verify.hpp"

using namespace pursuit;

namespace {

enum Exit { kOk = 0, kFault = 1, kUsage = 2, kResource = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Common {
  std::uint64_t seed = 0;
  std::string format = "text";
};

Graph load_graph(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  return read_edge_list_file(path);
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::unique_ptr<RobberStrategy> make_robber(const std::string& name, const std::optional<Vertex>& start) {
  if (name == "greedy") return std::make_unique<GreedyFarRobber>();
  if (name == "random") return std::make_unique<RandomRobber>();
  if (name == "stationary") return std::make_unique<StationaryRobber>(start);
  throw UsageError("unknown robber '" + name + "'");
}

void print_outcome(const Transcript& t) {
  const Outcome& o = t.outcome;
  if (o.caught)
    std::cout << "caught in round " << o.round << " (" << to_string(o.half) << " half-move)\n";
  else
    std::cout << "robber survived " << o.round << " rounds\n";
}

void check_transcript(const Graph& g, const Transcript& t) {
  if (auto err = validate_transcript(g, t)) throw StrategyFault("transcript", 0, "fails validation: " + *err);
}

// ---------------------------------------------------------------------------

struct GenArgs {
  std::string family;
  std::vector<double> args;
  std::string output = "-";
  bool dot = false;
};

int run_gen(const GenArgs& a, const Common& c) {
  auto arg = [&](std::size_t i) {
    if (i >= a.args.size()) throw UsageError("gen " + a.family + ": missing argument " + std::to_string(i + 1));
    return a.args[i];
  };
  auto count = [&](std::size_t i) {
    const double x = arg(i);
    if (x != std::floor(x)) throw UsageError("gen " + a.family + ": argument " + std::to_string(i + 1) + " must be an integer");
    return static_cast<int>(x);
  };
  Graph g;
  const std::string& f = a.family;
  if (f == "path") g = gen::path(count(0));
  else if (f == "cycle") g = gen::cycle(count(0));
  else if (f == "grid") g = gen::grid(count(0), count(1));
  else if (f == "hypercube") g = gen::hypercube(count(0));
  else if (f == "petersen") g = gen::petersen();
  else if (f == "complete") g = gen::complete(count(0));
  else if (f == "star") g = gen::star(count(0));
  else if (f == "gnp") g = gen::gnp(count(0), arg(1), c.seed);
  else if (f == "tree") g = gen::random_tree(count(0), c.seed);
  else if (f == "connected") g = gen::random_connected(count(0), arg(1), c.seed);
  else if (f == "girth") g = gen::random_high_girth(count(0), count(1), c.seed);
  else if (f == "projective") g = gen::projective_incidence(count(0));
  else throw UsageError("unknown family '" + f + "'");

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (a.output != "-") {
    file.open(a.output);
    if (!file) throw std::runtime_error("cannot write " + a.output);
    out = &file;
  }
  if (a.dot)
    write_dot(*out, g, f);
  else
    write_edge_list(*out, g);
  return kOk;
}

// ---------------------------------------------------------------------------

struct SolveArgs {
  std::string graph = "-";
  int k = 0;
  int kmax = 0;
  std::uint64_t budget = SolverOptions{}.max_states;
  bool placement = false;
};

int run_solve(const SolveArgs& a, const Common& c) {
  if ((a.k > 0) == (a.kmax > 0)) throw UsageError("solve: give exactly one of --k and --kmax");
  const Graph g = load_graph(a.graph);
  const SolverOptions opts{a.budget};
  if (a.k > 0) {
    const CopWinResult r = is_k_copwin(g, a.k, opts);
    if (c.format == "json") {
      Json j = document("solve");
      j["graph_hash"] = hex64(graph_hash(g));
      j["k"] = a.k;
      j["cops_win"] = r.cops_win;
      j["placement"] = r.placement ? Json(*r.placement) : Json(nullptr);
      j["states"] = r.states;
      emit(j);
    } else {
      std::cout << (r.cops_win ? "cops win" : "robber wins") << '\n';
      if (a.placement && r.placement) {
        for (Vertex v : *r.placement) std::cout << v << ' ';
        std::cout << '\n';
      }
    }
    return kOk;
  }
  std::optional<int> number;
  std::optional<std::vector<Vertex>> placement;
  for (int k = 1; k <= a.kmax && !number; ++k) {
    const CopWinResult r = is_k_copwin(g, k, opts);
    if (r.cops_win) {
      number = k;
      placement = r.placement;
    }
  }
  if (c.format == "json") {
    Json j = document("solve");
    j["graph_hash"] = hex64(graph_hash(g));
    j["kmax"] = a.kmax;
    j["cop_number"] = number ? Json(*number) : Json(nullptr);
    j["placement"] = placement ? Json(*placement) : Json(nullptr);
    emit(j);
  } else {
    if (number)
      std::cout << *number << '\n';
    else
      std::cout << '>' << a.kmax << '\n';
    if (a.placement && placement) {
      for (Vertex v : *placement) std::cout << v << ' ';
      std::cout << '\n';
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct PlayArgs {
  std::string graph = "-";
  std::string cops = "chase";
  int k = 1;
  std::string robber = "greedy";
  int rounds = 100;
  bool invisible = false;
  std::uint64_t budget = SolverOptions{}.max_states;
};

int run_play(const PlayArgs& a, const Common& c) {
  const Graph g = load_graph(a.graph);
  std::unique_ptr<CopStrategy> cops;
  if (a.cops == "chase")
    cops = std::make_unique<ChaseCops>();
  else if (a.cops == "solver")
    cops = std::make_unique<SolverCops>(std::make_shared<const CopWinTable>(g, a.k, SolverOptions{a.budget}));
  else
    throw UsageError("unknown cops '" + a.cops + "'");
  auto robber = make_robber(a.robber, std::nullopt);
  GameConfig cfg;
  cfg.cop_count = a.k;
  cfg.max_rounds = a.rounds;
  cfg.robber_visible = !a.invisible;
  cfg.seed = c.seed;
  const Transcript t = play(g, *cops, *robber, cfg);
  check_transcript(g, t);
  if (c.format == "json") {
    Json j = document("play");
    j["transcript"] = to_json(t);
    emit(j);
  } else {
    print_outcome(t);
  }
  return kOk;
}

// ---------------------------------------------------------------------------

struct GuardArgs {
  std::string graph = "-";
  int from = -1;
  int to = -1;
  std::string robber = "greedy";
  int rounds = 0;
  bool audit = false;
};

int run_guard(const GuardArgs& a, const Common& c) {
  const Graph g = load_graph(a.graph);
  Edge ends = diameter_pair(g);
  if ((a.from >= 0) != (a.to >= 0)) throw UsageError("strategy guard: give both --from and --to");
  if (a.from >= 0) ends = {a.from, a.to};
  const std::vector<Vertex> path = shortest_path(g, ends.first, ends.second);
  GuardCop cops(g, path);
  auto robber = make_robber(a.robber, std::nullopt);
  GameConfig cfg;
  cfg.max_rounds = a.rounds > 0 ? a.rounds : cops.settle_bound() + 2 * g.vertex_count();
  cfg.seed = c.seed;
  const Transcript t = play(g, cops, *robber, cfg);
  check_transcript(g, t);
  std::optional<GuardAudit> audit;
  if (a.audit) audit = audit_guard(g, path);
  if (c.format == "json") {
    Json j = document("strategy-guard");
    j["path"] = path;
    j["settle_bound"] = cops.settle_bound();
    if (audit) j["audit"] = to_json(*audit);
    j["transcript"] = to_json(t);
    emit(j);
  } else {
    std::cout << "path of length " << path.size() - 1 << ", settle bound " << cops.settle_bound() << '\n';
    print_outcome(t);
    if (audit)
      std::cout << "audit: " << audit->violations << " violations, " << audit->touches << " guarded touches, "
                << audit->states << " states\n";
  }
  return audit && (audit->violations > 0 || audit->late_settles > 0) ? kFault : kOk;
}

// ---------------------------------------------------------------------------

struct ExpanderArgs {
  std::string graph = "-";
  ExpanderParams params;
  int levels = 0;  // 0: default_levels
  std::string robber = "greedy";
  bool invisible = false;
  int max_repeats = 0;
  bool audit = false;
};

int run_expander(ExpanderArgs a, const Common& c) {
  const Graph g = load_graph(a.graph);
  a.params.levels = a.levels > 0 ? a.levels : default_levels(g);
  validate(a.params);
  const auto found = find_family(g, a.params, c.seed);
  if (!found) {
    if (c.format == "json") {
      Json j = document("strategy-expander");
      j["failure"] = "no family within " + std::to_string(a.params.resample_limit) + " samples";
      emit(j);
    } else {
      std::cout << "failure: no family within " << a.params.resample_limit << " samples\n";
    }
    return kFault;
  }
  Json j = document("strategy-expander");
  j["params"] = {{"lambda", a.params.lambda}, {"p", a.params.p}, {"levels", a.params.levels},
                 {"resample_limit", a.params.resample_limit}};
  j["attempts"] = found->attempts;
  j["family"] = to_json(found->family);
  auto robber = make_robber(a.robber, std::nullopt);
  Transcript t;
  if (a.invisible) {
    const int repeats = a.max_repeats > 0 ? a.max_repeats : 10 * g.vertex_count();
    const InvisibleResult r = invisible_mode(g, found->family, a.params, c.seed, repeats, *robber);
    t = r.transcript;
    j["repeats"] = r.repeats;
  } else {
    ExpanderCops cops(g, found->family, a.params, found->plans);
    GameConfig cfg;
    cfg.cop_count = found->family.cop_count();
    cfg.max_rounds = 1;
    for (const PlanResult& p : *found->plans)
      cfg.max_rounds = std::max(cfg.max_rounds, std::get<LevelDecomposition>(p).capture_round() + 1);
    cfg.seed = c.seed;
    t = play(g, cops, *robber, cfg);
    j["plan"] = to_json(std::get<LevelDecomposition>((*found->plans)[t.initial_robber]));
  }
  check_transcript(g, t);
  std::optional<ConfinementAudit> audit;
  if (a.audit) audit = audit_confinement(g, found->family, a.params, found->plans);
  if (audit) j["audit"] = to_json(*audit);
  j["transcript"] = to_json(t);
  if (c.format == "json") {
    emit(j);
  } else {
    std::cout << "family of " << found->family.cop_count() << " cops in " << found->family.sets.size()
              << " sets after " << found->attempts << " samples\n";
    if (j.contains("plan"))
      std::cout << "plan from " << t.initial_robber << ": " << j["plan"]["terminal"] << " levels, capture by round "
                << j["plan"]["capture_round"] << '\n';
    if (j.contains("repeats")) std::cout << "repeats: " << j["repeats"] << '\n';
    print_outcome(t);
    if (audit)
      std::cout << "audit: " << audit->confinement_violations << " confinement and " << audit->occupation_violations
                << " occupation violations, all caught: " << (audit->all_caught ? "yes" : "no") << '\n';
  }
  const bool audit_bad =
      audit && (!audit->all_caught || audit->confinement_violations > 0 || audit->occupation_violations > 0);
  return audit_bad ? kFault : kOk;
}

// ---------------------------------------------------------------------------

struct MeynielArgs {
  std::string graph = "-";
  MeynielParams params;
  int levels = 0;
  std::string robber = "greedy";
  int rounds = 0;
};

int run_meyniel_cmd(MeynielArgs a, const Common& c) {
  const Graph g = load_graph(a.graph);
  a.params.seed = c.seed;
  if (a.levels > 0) {
    a.params.auto_levels = false;
    a.params.expander.levels = a.levels;
  }
  const auto tree = std::make_shared<const RecursionTree>(build_recursion(g, a.params));
  MeynielResult r;
  if (a.robber == "adversary") {
    r = run_meyniel_adversary(g, tree);
  } else {
    auto robber = make_robber(a.robber, std::nullopt);
    r = run_meyniel(g, tree, *robber, a.rounds);
  }
  check_transcript(g, r.transcript);
  if (c.format == "json") {
    Json j = document("strategy-meyniel");
    j["regime"] = "desk-scale";
    j["threshold"] = a.params.diameter_threshold;
    j["tree"] = to_json(*tree);
    j["result"] = to_json(r);
    emit(j);
  } else {
    std::cout << "recursion: " << tree->nodes.size() << " nodes, team of " << tree->team_size() << " ("
              << tree->guard_slots << " guard slots, " << tree->family_slots << " family slots)\n";
    std::cout << "status: " << to_string(r.status) << ", cops used " << r.cops_used << " = " << r.guards
              << " guards + " << r.family_cops << " family cops\n";
    print_outcome(r.transcript);
    if (!r.diagnostic.empty()) std::cout << r.diagnostic << '\n';
  }
  return r.status == MeynielStatus::Failure ? kFault : kOk;
}

// ---------------------------------------------------------------------------

struct BoundArgs {
  double L = 1024;
  std::optional<double> gap;
  bool zero_path = false;
  int precision = 256;
};

std::string show(const Enclosure& e) {
  std::ostringstream os;
  os.precision(17);
  if (e.exact())
    os << e.lo;
  else
    os << '[' << e.lo << ", " << e.hi << ']';
  return os.str();
}

int run_bound(const BoundArgs& a, const Common& c) {
  if (!(a.L > 0)) throw UsageError("bound: --L must be positive");
  const BoundParams b = bound_params(a.L, a.precision);
  const RootBracket root = trivial_region_boundary(1e-6, a.precision);
  const double gap = a.zero_path ? INFINITY : a.gap.value_or(0.0);
  std::optional<ChainReport> chain;
  std::string chain_note;
  if (a.L > 20)
    chain = check_induction_chain(a.L, gap, a.precision);
  else
    chain_note = "chain not evaluated for L <= 20";
  const int sign = trivial_region_sign(a.L, a.precision);
  if (c.format == "json") {
    Json j = document("bound");
    j["regime"] = "log-space";
    j["params"] = to_json(b);
    j["trivial_region"] = {{"lo", root.lo}, {"hi", root.hi}, {"iterations", root.iterations},
                           {"sign_at_L", sign}};
    if (chain) j["chain"] = to_json(*chain);
    else j["chain"] = chain_note;
    emit(j);
    return kOk;
  }
  std::cout << "L             " << a.L << '\n'
            << "t             " << show(b.t) << '\n'
            << "p             " << show(b.p) << "  (log2 " << show(b.p_log) << ")\n"
            << "threshold     " << show(b.threshold) << "  (log2 " << show(b.threshold_log) << ")\n"
            << "lambda_log    " << show(b.sqrt_L) << '\n'
            << "f_log         " << show(b.f_log) << '\n';
  std::cout.precision(12);
  std::cout << "L*            in (" << root.lo << ", " << root.hi << ")\n"
            << "region        " << (sign > 0 ? "trivial (f(n) > n)" : sign < 0 ? "nontrivial" : "undecided") << '\n';
  if (!chain) {
    std::cout << chain_note << '\n';
    return kOk;
  }
  std::cout << "chain at gap " << chain->gap << (chain->in_regime ? "" : " (out of regime)") << '\n';
  auto row = [](const ChainStep& s) {
    std::cout << "  " << (s.holds ? "holds " : "FAILS ") << s.name << "  slack " << show(s.slack);
    if (!s.scale.empty()) std::cout << "  [" << s.scale << ']';
    std::cout << '\n';
  };
  for (const ChainStep& s : chain->steps) row(s);
  row(chain->end_to_end);
  return kOk;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string corpus;
  std::uint64_t budget = VerifyOptions{}.budget;
  std::vector<int> criteria;
};

int run_verify_cmd(const VerifyArgs& a, const Common& c) {
  VerifyOptions opt;
  opt.seed = c.seed;
  opt.budget = a.budget;
  opt.corpus = a.corpus;
  opt.criteria = a.criteria;
  for (int id : opt.criteria)
    if (id < 1 || id > 10) throw UsageError("verify: criteria are numbered 1..10");
  const VerifyReport report = run_verify(opt);
  if (c.format == "json") {
    emit(report.to_json());
  } else {
    for (const CheckResult& r : report.criteria)
      std::cout << '[' << to_string(r.status) << "] " << r.id << ' ' << r.name << ": " << r.summary << '\n';
    for (const CheckResult& r : report.corpus)
      std::cout << '[' << to_string(r.status) << "] " << r.name << ": " << r.summary << '\n';
  }
  if (report.any(CheckStatus::Fail)) return kFault;
  if (report.any(CheckStatus::Skip)) return kResource;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cops and robbers: exact solver, strategies and bound checks"};
  app.require_subcommand(1);
  app.fallthrough();  // --seed and --format are accepted after the subcommand too
  Common common;
  app.add_option("--seed", common.seed, "global seed")->capture_default_str();
  app.add_option("--format", common.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "write a generated graph as an edge list");
  gen->add_option("family", gen_args.family,
                  "path|cycle|grid|hypercube|petersen|complete|star|gnp|tree|connected|girth|projective")
      ->required();
  gen->add_option("args", gen_args.args, "family arguments");
  gen->add_option("-o,--output", gen_args.output, "output file, - for stdout");
  gen->add_flag("--dot", gen_args.dot, "write DOT instead of an edge list");

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "exact cop number by retrograde analysis");
  solve->add_option("graph", solve_args.graph, "edge-list file, - for stdin");
  solve->add_option("--k", solve_args.k, "decide whether k cops win")->check(CLI::PositiveNumber);
  solve->add_option("--kmax", solve_args.kmax, "smallest winning k up to kmax")->check(CLI::PositiveNumber);
  solve->add_option("--budget", solve_args.budget, "maximum solver states")->capture_default_str();
  solve->add_flag("--placement", solve_args.placement, "also print a winning placement");

  PlayArgs play_args;
  auto* playc = app.add_subcommand("play", "play one game with baseline strategies");
  playc->add_option("graph", play_args.graph, "edge-list file, - for stdin");
  playc->add_option("--cops", play_args.cops, "chase|solver")->capture_default_str();
  playc->add_option("--k", play_args.k, "number of cops")->check(CLI::PositiveNumber)->capture_default_str();
  playc->add_option("--robber", play_args.robber, "greedy|random|stationary")->capture_default_str();
  playc->add_option("--rounds", play_args.rounds, "round limit")->check(CLI::PositiveNumber)->capture_default_str();
  playc->add_flag("--invisible", play_args.invisible, "hide the robber from the cops");
  playc->add_option("--budget", play_args.budget, "maximum solver states")->capture_default_str();

  auto* strategy = app.add_subcommand("strategy", "run one of the cop strategies");
  strategy->require_subcommand(1);

  GuardArgs guard_args;
  auto* guard = strategy->add_subcommand("guard", "one cop guarding a geodesic");
  guard->add_option("graph", guard_args.graph, "edge-list file, - for stdin");
  guard->add_option("--from", guard_args.from, "path start (default: a diameter pair)");
  guard->add_option("--to", guard_args.to, "path end");
  guard->add_option("--robber", guard_args.robber, "greedy|random|stationary")->capture_default_str();
  guard->add_option("--rounds", guard_args.rounds, "round limit (default: settle bound + 2n)");
  guard->add_flag("--audit", guard_args.audit, "exhaustive soundness audit");

  ExpanderArgs exp_args;
  auto* expander = strategy->add_subcommand("expander", "sampled cop sets with level plans");
  expander->add_option("graph", exp_args.graph, "edge-list file, - for stdin");
  expander->add_option("--lambda", exp_args.params.lambda, "expansion factor")->capture_default_str();
  expander->add_option("--p", exp_args.params.p, "sampling density")->capture_default_str();
  expander->add_option("--levels", exp_args.levels, "doubling levels t (default: ceil log2 diameter)");
  expander->add_option("--resample-limit", exp_args.params.resample_limit, "families tried")->capture_default_str();
  expander->add_option("--robber", exp_args.robber, "greedy|random|stationary")->capture_default_str();
  expander->add_flag("--invisible", exp_args.invisible, "cops never see the robber");
  expander->add_option("--max-repeats", exp_args.max_repeats, "guess limit when invisible (default 10n)");
  expander->add_flag("--audit", exp_args.audit, "exhaustive confinement audit");

  MeynielArgs mey_args;
  auto* meyniel = strategy->add_subcommand("meyniel", "guard geodesics, recurse, finish with cop sets");
  meyniel->add_option("graph", mey_args.graph, "edge-list file, - for stdin");
  meyniel->add_option("--threshold", mey_args.params.diameter_threshold, "leaf diameter threshold")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  meyniel->add_option("--lambda", mey_args.params.expander.lambda, "expansion factor")->capture_default_str();
  meyniel->add_option("--p", mey_args.params.expander.p, "sampling density")->capture_default_str();
  meyniel->add_option("--levels", mey_args.levels, "fixed doubling levels (default: per leaf)");
  meyniel->add_option("--resample-limit", mey_args.params.expander.resample_limit, "families tried per leaf")
      ->capture_default_str();
  meyniel->add_option("--robber", mey_args.robber, "greedy|random|stationary|adversary")->capture_default_str();
  meyniel->add_option("--rounds", mey_args.rounds, "round limit (default: the recursion's bound)");

  BoundArgs bound_args;
  double gap = 0;
  auto* bound = app.add_subcommand("bound", "log-space bound arithmetic at n = 2^L");
  bound->add_option("--L", bound_args.L, "log2 n")->capture_default_str();
  auto* gap_opt = bound->add_option("--gap", gap, "log2 of threshold / D for the deleted path");
  bound->add_flag("--no-path", bound_args.zero_path, "evaluate the chain with D = 0");
  bound->add_option("--precision", bound_args.precision, "MPFR bits")
      ->check(CLI::Range(64, 4096))
      ->capture_default_str();

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "run the acceptance suite and an optional corpus");
  verify->add_option("--corpus", verify_args.corpus, "directory of edge-list files")->check(CLI::ExistingDirectory);
  verify->add_option("--budget", verify_args.budget, "work units per check; 0 skips everything")
      ->capture_default_str();
  verify->add_option("--criteria", verify_args.criteria, "criteria to run (default: all)")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return run_gen(gen_args, common);
    if (*solve) return run_solve(solve_args, common);
    if (*playc) return run_play(play_args, common);
    if (*guard) return run_guard(guard_args, common);
    if (*expander) return run_expander(exp_args, common);
    if (*meyniel) return run_meyniel_cmd(mey_args, common);
    if (*bound) {
      if (*gap_opt) bound_args.gap = gap;
      return run_bound(bound_args, common);
    }
    if (*verify) return run_verify_cmd(verify_args, common);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kFault;
  } catch (const StrategyFault& e) {
    std::cerr << "fault: " << e.what() << '\n';
    return kFault;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFault;
  }
  return kUsage;
}
