#include "pursuit/verify.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "pursuit/generators.hpp"

namespace pursuit {

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

bool VerifyReport::any(CheckStatus status) const {
  auto has = [&](const CheckResult& r) { return r.status == status; };
  return std::any_of(criteria.begin(), criteria.end(), has) || std::any_of(corpus.begin(), corpus.end(), has);
}

namespace {

Json result_json(const CheckResult& r) {
  Json j;
  if (r.id > 0) j["id"] = r.id;
  j["name"] = r.name;
  j["status"] = to_string(r.status);
  j["summary"] = r.summary;
  j["detail"] = r.detail;
  return j;
}

}  // namespace

Json VerifyReport::to_json() const {
  Json j = document("verify");
  j["seed"] = seed;
  j["budget"] = budget;
  Json cs = Json::array();
  for (const CheckResult& r : criteria) cs.push_back(result_json(r));
  j["criteria"] = std::move(cs);
  Json items = Json::array();
  for (const CheckResult& r : corpus) items.push_back(result_json(r));
  j["corpus"] = std::move(items);
  int counts[3] = {0, 0, 0};
  for (const auto* list : {&criteria, &corpus})
    for (const CheckResult& r : *list) ++counts[static_cast<int>(r.status)];
  j["totals"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"skip", counts[2]}};
  return j;
}

namespace {

// Work accounting shared by one criterion.
class Budget {
 public:
  explicit Budget(std::uint64_t limit) : limit_(limit) {}

  void charge(std::uint64_t work) {
    if (work > limit_ - used_)
      throw ResourceLimitError("work budget of " + std::to_string(limit_) + " units exhausted");
    used_ += work;
  }
  SolverOptions solver() const { return {limit_ - used_}; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// Least k <= k_max that wins, charging every table built.
std::optional<int> cop_number_charged(const Graph& g, int k_max, Budget& budget) {
  for (int k = 1; k <= k_max; ++k) {
    budget.charge(1);
    const CopWinResult r = is_k_copwin(g, k, budget.solver());
    budget.charge(r.states);
    if (r.cops_win) return k;
  }
  return std::nullopt;
}

CheckResult verdict(int id, std::string name, int failures, std::string summary, Json detail) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  r.status = failures == 0 ? CheckStatus::Pass : CheckStatus::Fail;
  r.summary = std::move(summary);
  r.detail = std::move(detail);
  return r;
}

// Slots whose cop ever leaves its starting vertex.
int moved_slots(const Transcript& t) {
  int moved = 0;
  for (std::size_t j = 0; j < t.initial_cops.size(); ++j)
    for (const RoundRecord& rec : t.rounds)
      if (rec.cops[j] != t.initial_cops[j]) {
        ++moved;
        break;
      }
  return moved;
}

// ---------------------------------------------------------------------------

CheckResult oracle_agreement(const VerifyOptions& opt, Budget& budget) {
  int graphs = 0;
  int copwin = 0;
  Json mismatches = Json::array();
  auto check = [&](const Graph& g, Json where) {
    ++graphs;
    budget.charge(1);
    const CopWinResult r = is_k_copwin(g, 1, budget.solver());
    budget.charge(r.states);
    copwin += r.cops_win ? 1 : 0;
    if (r.cops_win != is_dismantlable(g)) mismatches.push_back(std::move(where));
  };
  int exhaustive = 0;
  for (int n = 1; n <= 6; ++n) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint32_t mask = 0; mask < (1U << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if (mask >> e & 1U) edges.push_back(pairs[e]);
      const Graph g = Graph::from_edges(n, edges);
      if (!is_connected(g)) continue;
      ++exhaustive;
      check(g, {{"n", n}, {"mask", mask}});
    }
  }
  for (std::uint64_t i = 0; i < 500; ++i) {
    const std::uint64_t s = derive_seed(opt.seed, i);
    const int n = 7 + static_cast<int>(i % 2);
    const double extra = 0.05 + 0.1 * static_cast<double>(i % 8);
    check(gen::random_connected(n, extra, s), {{"n", n}, {"extra", extra}, {"seed", s}});
  }
  const int bad = static_cast<int>(mismatches.size());
  Json detail = {{"graphs", graphs}, {"exhaustive", exhaustive}, {"random", 500}, {"cop_win", copwin},
                 {"mismatches", std::move(mismatches)}};
  return verdict(1, "oracle agreement", bad,
                 std::to_string(graphs) + " graphs, " + std::to_string(bad) + " mismatches", std::move(detail));
}

CheckResult known_cop_numbers(const VerifyOptions& opt, Budget& budget) {
  Json cases = Json::array();
  int bad = 0;
  auto expect = [&](const std::string& name, const Graph& g, int expected, int k_max) {
    const auto c = cop_number_charged(g, k_max, budget);
    const bool ok = c && *c == expected;
    bad += ok ? 0 : 1;
    cases.push_back({{"graph", name}, {"n", g.vertex_count()}, {"expected", expected},
                     {"cop_number", c ? Json(*c) : Json(nullptr)}, {"ok", ok}});
  };
  for (int n = 1; n <= 10; ++n) expect("P" + std::to_string(n), gen::path(n), 1, 2);
  for (std::uint64_t i = 0; i < 20; ++i) {
    const std::uint64_t s = derive_seed(opt.seed, i);
    const int n = 2 + static_cast<int>(i % 14);
    expect("tree(" + std::to_string(n) + "," + std::to_string(s) + ")", gen::random_tree(n, s), 1, 2);
  }
  for (int n = 4; n <= 9; ++n) expect("C" + std::to_string(n), gen::cycle(n), 2, 3);
  expect("petersen", gen::petersen(), 3, 3);
  // Frozen regression value; the girth bound gives >= 3 independently.
  expect("heawood", gen::projective_incidence(2), 3, 4);
  return verdict(2, "known cop numbers", bad,
                 std::to_string(cases.size()) + " graphs, " + std::to_string(bad) + " wrong", {{"cases", cases}});
}

CheckResult girth_bound(const VerifyOptions& opt, Budget& budget) {
  Json cases = Json::array();
  int bad = 0;
  auto check = [&](const std::string& name, const Graph& g) {
    const auto gi = girth(g);
    const int delta = min_degree(g);
    // An empty result means more than delta + 1 cops are needed.
    const auto c = cop_number_charged(g, std::max(delta, 1) + 1, budget);
    const bool ok = (!gi || *gi >= 5) && (!c || *c >= delta);
    bad += ok ? 0 : 1;
    cases.push_back({{"graph", name}, {"n", g.vertex_count()}, {"girth", gi ? Json(*gi) : Json(nullptr)},
                     {"min_degree", delta}, {"cop_number", c ? Json(*c) : Json(nullptr)}, {"ok", ok}});
  };
  check("heawood", gen::projective_incidence(2));
  for (std::uint64_t i = 0; i < 20; ++i) {
    const std::uint64_t s = derive_seed(opt.seed, i);
    const int n = 8 + static_cast<int>(i % 7);
    check("girth5(" + std::to_string(n) + "," + std::to_string(s) + ")", gen::random_high_girth(n, 5, s));
  }
  return verdict(3, "girth bound", bad, std::to_string(cases.size()) + " graphs, " + std::to_string(bad) + " violations",
                 {{"cases", cases}});
}

CheckResult guard_soundness(const VerifyOptions& opt, Budget& budget) {
  Json failures = Json::array();
  std::uint64_t touches = 0;
  std::uint64_t states = 0;
  int violations = 0;
  int late = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const std::uint64_t s = derive_seed(opt.seed, i);
    const int n = 6 + static_cast<int>(i % 25);
    const Graph g = i % 4 == 0 ? gen::random_tree(n, s) : gen::random_connected(n, 0.04 * static_cast<double>(i % 5), s);
    Rng rng(derive_seed(s, "path"));
    std::vector<Vertex> path;
    if (i % 2 == 0) {
      const auto [a, b] = diameter_pair(g);
      path = shortest_path(g, a, b);
    } else {
      const auto a = static_cast<Vertex>(rng.below(n));
      const auto b = static_cast<Vertex>(rng.below(n));
      path = shortest_path(g, a, b);
    }
    budget.charge(1);
    const GuardAudit a = audit_guard(g, path);
    budget.charge(a.states);
    touches += a.touches;
    states += a.states;
    violations += a.violations;
    late += a.late_settles;
    if (a.violations > 0 || a.late_settles > 0)
      failures.push_back({{"n", n}, {"seed", s}, {"path", path}, {"audit", to_json(a)}});
  }
  const int bad = static_cast<int>(failures.size());
  return verdict(4, "guard soundness", bad,
                 "100 pairs, " + std::to_string(violations) + " violations, " + std::to_string(touches) +
                     " guarded touches",
                 {{"pairs", 100}, {"violations", violations}, {"late_settles", late}, {"touches", touches},
                  {"states", states}, {"failures", failures}});
}

Graph confinement_graph(std::uint64_t i, std::uint64_t s) {
  switch (i % 10) {
    case 0: return gen::cycle(5 + static_cast<int>(i % 36));
    case 1: return gen::grid(2 + static_cast<int>(i % 5), 3 + static_cast<int>(i % 4));
    case 2: return gen::random_tree(10 + static_cast<int>(i % 31), s);
    case 3: return gen::hypercube(3 + static_cast<int>(i % 3));
    case 4: return gen::petersen();
    default: return gen::random_connected(10 + static_cast<int>(i * 7 % 31), 0.03 * static_cast<double>(i % 6), s);
  }
}

CheckResult confinement(const VerifyOptions& opt, Budget& budget) {
  // Sparsest first, so the adversary faces as few cops as the plans allow.
  static constexpr double kDensities[] = {0.05, 0.1, 0.15, 0.2, 0.3, 0.5, 0.7, 0.9, 1.0};
  Json cases = Json::array();
  int bad = 0;
  int max_depth = 0;
  int max_survival = 0;
  std::uint64_t states = 0;
  for (std::uint64_t i = 0; i < 50; ++i) {
    const std::uint64_t s = derive_seed(opt.seed, i);
    const Graph g = confinement_graph(i, s);
    ExpanderParams params;
    params.levels = default_levels(g);
    std::optional<FamilySearch> found;
    for (double lambda : {2.0, 3.0}) {
      for (double p : kDensities) {
        params.lambda = lambda;
        params.p = p;
        found = find_family(g, params, s);
        if (found) break;
      }
      if (found) break;
    }
    Json item = {{"case", i}, {"n", g.vertex_count()}, {"seed", s}};
    if (!found) {
      ++bad;
      item["error"] = "no family within the tuning grid";
      cases.push_back(std::move(item));
      continue;
    }
    budget.charge(1);
    const ConfinementAudit a = audit_confinement(g, found->family, params, found->plans);
    budget.charge(a.states);
    max_depth = std::max(max_depth, a.depth);
    max_survival = std::max(max_survival, a.survival);
    states += a.states;
    const bool ok = a.all_caught && a.confinement_violations == 0 && a.occupation_violations == 0 && a.depth <= 64;
    bad += ok ? 0 : 1;
    item["lambda"] = params.lambda;
    item["p"] = params.p;
    item["levels"] = params.levels;
    item["attempts"] = found->attempts;
    item["cops"] = found->family.cop_count();
    item["audit"] = to_json(a);
    item["ok"] = ok;
    cases.push_back(std::move(item));
  }
  return verdict(5, "expander confinement", bad,
                 "50 graphs, " + std::to_string(bad) + " failing, deepest capture round " + std::to_string(max_depth) +
                     ", longest survival " + std::to_string(max_survival),
                 {{"max_depth", max_depth}, {"max_survival", max_survival}, {"states", states}, {"cases", cases}});
}

CheckResult claim_implication(const VerifyOptions& opt, Budget& budget) {
  int trials = 0;
  int claim_holds = 0;
  int plans_ok = 0;
  Json counterexamples = Json::array();
  Json per_p = Json::array();
  for (double p : {0.3, 0.5, 0.8}) {
    int holds_here = 0;
    for (std::uint64_t i = 0; i < 50; ++i) {
      const std::uint64_t s = derive_seed(derive_seed(opt.seed, static_cast<std::uint64_t>(p * 10)), i);
      const int n = 8 + static_cast<int>(i % 7);
      const Graph g = gen::random_connected(n, 0.03 * static_cast<double>(i % 5), s);
      ExpanderParams params;
      params.lambda = 2;
      params.p = p;
      params.levels = default_levels(g);
      const CopSetFamily family = sample_cop_sets(g, params, derive_seed(s, std::uint64_t{0}));
      budget.charge(std::uint64_t{1} << n);
      const ClaimReport claim = verify_claim(g, family, params, 14);
      ++trials;
      if (!claim.holds) continue;
      ++claim_holds;
      ++holds_here;
      const auto plans = build_all_plans(g, family, params);
      bool all = true;
      for (std::size_t v = 0; v < plans.size(); ++v) {
        if (const auto* f = std::get_if<PlanFailure>(&plans[v])) {
          all = false;
          counterexamples.push_back({{"p", p}, {"n", n}, {"seed", s}, {"start", v}, {"failure", f->reason},
                                     {"level", f->level}});
          break;
        }
      }
      plans_ok += all ? 1 : 0;
    }
    per_p.push_back({{"p", p}, {"claim_holds", holds_here}});
  }
  const int bad = static_cast<int>(counterexamples.size());
  return verdict(6, "claim implies plans", bad,
                 std::to_string(trials) + " families, claim held for " + std::to_string(claim_holds) + ", " +
                     std::to_string(bad) + " counterexamples",
                 {{"trials", trials}, {"claim_holds", claim_holds}, {"plans_ok", plans_ok}, {"per_p", per_p},
                  {"counterexamples", counterexamples}});
}

CheckResult recursion(const VerifyOptions& opt, Budget& budget) {
  struct Case {
    std::string name;
    Graph g;
    int threshold;
  };
  std::vector<Case> cases{{"P30", gen::path(30), 10}, {"C20", gen::cycle(20), 3}};
  for (std::uint64_t i = 0; i < 20; ++i) {
    const std::uint64_t s = derive_seed(opt.seed, i);
    const int n = 10 + static_cast<int>(i * 3 % 31);
    cases.push_back({"random(" + std::to_string(n) + "," + std::to_string(s) + ")",
                     gen::random_connected(n, 0.02 * static_cast<double>(i % 5), s), 2});
  }
  Json out = Json::array();
  int bad = 0;
  int exhaustive = 0;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const Case& k = cases[c];
    MeynielParams params;
    params.diameter_threshold = k.threshold;
    params.seed = derive_seed(opt.seed, "meyniel" + std::to_string(c));
    std::shared_ptr<const RecursionTree> tree;
    for (double p : {0.5, 0.7, 0.9, 1.0}) {
      params.expander.p = p;
      tree = std::make_shared<const RecursionTree>(build_recursion(k.g, params));
      if (tree->complete) break;
    }
    Json item = {{"graph", k.name}, {"n", k.g.vertex_count()}, {"threshold", k.threshold}, {"p", params.expander.p},
                 {"nodes", tree->nodes.size()}, {"team_size", tree->team_size()}, {"complete", tree->complete}};
    bool ok = tree->complete;
    Json runs = Json::array();
    auto record = [&](const std::string& robber, const MeynielResult& r) {
      const bool good = r.status == MeynielStatus::Caught && r.cops_used == r.guards + r.family_cops &&
                        moved_slots(r.transcript) <= r.cops_used && !validate_transcript(k.g, r.transcript);
      ok = ok && good;
      runs.push_back({{"robber", robber}, {"status", to_string(r.status)}, {"round", r.transcript.outcome.round},
                      {"guards", r.guards}, {"family_cops", r.family_cops}, {"cops_used", r.cops_used},
                      {"ok", good}});
    };
    if (k.g.vertex_count() <= 20 || k.name == "P30") {
      std::size_t states = 0;
      budget.charge(1);
      const MeynielResult r = run_meyniel_adversary(k.g, tree, &states);
      budget.charge(states);
      ++exhaustive;
      record("adversary", r);
    }
    GreedyFarRobber greedy;
    record("greedy-far", run_meyniel(k.g, tree, greedy));
    budget.charge(tree->round_bound);
    RandomRobber random;
    record("random", run_meyniel(k.g, tree, random));
    budget.charge(tree->round_bound);
    item["runs"] = std::move(runs);
    item["ok"] = ok;
    bad += ok ? 0 : 1;
    out.push_back(std::move(item));
  }
  return verdict(7, "recursion", bad,
                 std::to_string(cases.size()) + " graphs, " + std::to_string(exhaustive) + " under the adversary, " +
                     std::to_string(bad) + " failing",
                 {{"cases", out}});
}

CheckResult bound_arithmetic(const VerifyOptions&, Budget& budget) {
  budget.charge(1);
  int bad = 0;
  const RootBracket root = trivial_region_boundary(1e-6);
  const bool bracket_ok = root.lo > 900 && root.hi < 1024 && root.hi - root.lo <= 1e-6 &&
                          trivial_region_sign(900) > 0 && trivial_region_sign(1024) < 0;
  bad += bracket_ok ? 0 : 1;
  const BoundParams b = bound_params(1024);
  const bool exact_ok = b.t.exact() && b.t.lo == 2 && b.p.exact() && b.p.lo == std::ldexp(1.0, -12) &&
                        b.threshold.exact() && b.threshold.lo == 4;
  bad += exact_ok ? 0 : 1;
  Json sweep = Json::array();
  for (double L : {1100.0, 1600.0, 2000.0, 1e4, 1e6}) {
    const ChainReport r = check_induction_chain(L, 0.0);
    const bool ok = r.in_regime && r.end_to_end.holds && r.end_to_end.slack.lo > 0;
    bad += ok ? 0 : 1;
    sweep.push_back({{"L", L}, {"end_to_end_holds", r.end_to_end.holds}, {"slack", to_json(r.end_to_end.slack)},
                     {"all_steps_hold", r.all_hold()}, {"ok", ok}});
  }
  Json detail = {{"bracket", {{"lo", root.lo}, {"hi", root.hi}, {"iterations", root.iterations}, {"ok", bracket_ok}}},
                 {"at_1024", {{"t", to_json(b.t)}, {"p", to_json(b.p)}, {"threshold", to_json(b.threshold)},
                              {"ok", exact_ok}}},
                 {"sweep", sweep}};
  return verdict(8, "bound arithmetic", bad, bad == 0 ? "bracket, exact values and sweep hold" : "see detail",
                 std::move(detail));
}

CheckResult invisible(const VerifyOptions& opt, Budget& budget) {
  struct Case {
    std::string name;
    Graph g;
    double lambda;
  };
  std::vector<Case> cases;
  for (int m = 2; m <= 8; ++m) cases.push_back({"K" + std::to_string(m), gen::complete(m), 2});
  for (int leaves = 2; leaves <= 7; ++leaves) cases.push_back({"star" + std::to_string(leaves), gen::star(leaves), 3});
  Json out = Json::array();
  int bad = 0;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const Case& k = cases[c];
    const int n = k.g.vertex_count();
    ExpanderParams params;
    params.lambda = k.lambda;
    params.p = 0.8;
    params.levels = default_levels(k.g);
    const std::uint64_t s = derive_seed(opt.seed, "invisible" + std::to_string(c));
    const auto found = find_family(k.g, params, s);
    Json item = {{"graph", k.name}, {"n", n}, {"lambda", k.lambda}, {"p", params.p}};
    if (!found) {
      ++bad;
      item["error"] = "no family";
      out.push_back(std::move(item));
      continue;
    }
    std::vector<int> repeats;
    int uncaught = 0;
    for (std::uint64_t r = 0; r < 100; ++r) {
      RandomRobber robber;
      const InvisibleResult res = invisible_mode(k.g, found->family, params, derive_seed(s, r), 10 * n, robber);
      budget.charge(static_cast<std::uint64_t>(res.transcript.rounds.size()) + 1);
      repeats.push_back(res.repeats);
      uncaught += res.caught ? 0 : 1;
    }
    std::sort(repeats.begin(), repeats.end());
    const double median = (repeats[49] + repeats[50]) / 2.0;
    const bool ok = uncaught == 0 && median <= n;
    bad += ok ? 0 : 1;
    item["cops"] = found->family.cop_count();
    item["median_repeats"] = median;
    item["max_repeats"] = repeats.back();
    item["uncaught"] = uncaught;
    item["ok"] = ok;
    out.push_back(std::move(item));
  }
  return verdict(9, "invisible robber", bad,
                 std::to_string(cases.size()) + " graphs x 100 seeds, " + std::to_string(bad) + " failing",
                 {{"cases", out}});
}

const char* criterion_name(int id) {
  static const char* names[] = {"",
                                "oracle agreement",
                                "known cop numbers",
                                "girth bound",
                                "guard soundness",
                                "expander confinement",
                                "claim implies plans",
                                "recursion",
                                "bound arithmetic",
                                "invisible robber",
                                "determinism"};
  return id >= 1 && id <= 10 ? names[id] : "?";
}

CheckResult skipped(int id, std::string name, const std::string& why) {
  CheckResult r;
  r.id = id;
  r.name = std::move(name);
  r.status = CheckStatus::Skip;
  r.summary = "resource limit: " + why;
  r.detail = Json::object();
  return r;
}

}  // namespace

CheckResult run_criterion(int id, const VerifyOptions& options) {
  using Runner = CheckResult (*)(const VerifyOptions&, Budget&);
  static const Runner runners[] = {nullptr,          oracle_agreement, known_cop_numbers, girth_bound,
                                   guard_soundness,  confinement,      claim_implication, recursion,
                                   bound_arithmetic, invisible};
  if (id < 1 || id > 9) throw std::invalid_argument("run_criterion: id must be in 1..9");
  Budget budget(options.budget);
  try {
    return runners[id](options, budget);
  } catch (const ResourceLimitError& e) {
    return skipped(id, criterion_name(id), e.what());
  }
}

CheckResult check_determinism(const std::vector<CheckResult>& first, const VerifyOptions& options) {
  Json mismatched = Json::array();
  for (const CheckResult& r : first) {
    if (r.id < 1 || r.id > 9) continue;
    const CheckResult again = run_criterion(r.id, options);
    if (result_json(again).dump() != result_json(r).dump()) mismatched.push_back(r.id);
  }
  const int bad = static_cast<int>(mismatched.size());
  return verdict(10, criterion_name(10), bad,
                 std::to_string(first.size()) + " reports rerun, " + std::to_string(bad) + " differ",
                 {{"rerun", first.size()}, {"mismatched", mismatched}});
}

CheckResult check_corpus_file(const std::string& path, const VerifyOptions& options) {
  CheckResult r;
  r.name = std::filesystem::path(path).filename().string();
  Graph g;
  try {
    g = read_edge_list_file(path);
  } catch (const ParseError& e) {
    r.status = CheckStatus::Fail;
    r.summary = std::string("parse error: ") + e.what();
    r.detail = Json::object();
    return r;
  }
  Budget budget(options.budget);
  Json detail = {{"n", g.vertex_count()}, {"m", g.edge_count()}, {"hash", hex64(graph_hash(g))}};
  int bad = 0;
  try {
    if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
    budget.charge(1);
    const CopWinResult one = is_k_copwin(g, 1, budget.solver());
    budget.charge(one.states);
    const bool agree = one.cops_win == is_dismantlable(g);
    bad += agree ? 0 : 1;
    detail["oracle_agreement"] = agree;

    const auto [a, b] = diameter_pair(g);
    budget.charge(1);
    const GuardAudit guard = audit_guard(g, shortest_path(g, a, b));
    budget.charge(guard.states);
    bad += guard.violations > 0 || guard.late_settles > 0 ? 1 : 0;
    detail["guard"] = to_json(guard);

    ExpanderParams params;
    params.levels = default_levels(g);
    if (const auto found = find_family(g, params, options.seed)) {
      budget.charge(1);
      const ConfinementAudit conf = audit_confinement(g, found->family, params, found->plans);
      budget.charge(conf.states);
      bad += conf.all_caught && conf.confinement_violations == 0 && conf.occupation_violations == 0 ? 0 : 1;
      detail["confinement"] = to_json(conf);
    } else {
      detail["confinement"] = "no family at default parameters";
    }

    MeynielParams mp;
    mp.seed = options.seed;
    GreedyFarRobber greedy;
    const MeynielResult m = run_meyniel(g, mp, greedy);
    bad += m.status == MeynielStatus::RobberWins ? 1 : 0;
    detail["recursion"] = {{"status", to_string(m.status)}, {"cops_used", m.cops_used}};
  } catch (const ResourceLimitError& e) {
    r.status = CheckStatus::Skip;
    r.summary = std::string("resource limit: ") + e.what();
    r.detail = std::move(detail);
    return r;
  } catch (const std::invalid_argument& e) {
    r.status = CheckStatus::Fail;
    r.summary = e.what();
    r.detail = std::move(detail);
    return r;
  }
  r.status = bad == 0 ? CheckStatus::Pass : CheckStatus::Fail;
  r.summary = bad == 0 ? "all checks hold" : std::to_string(bad) + " checks failed";
  r.detail = std::move(detail);
  return r;
}

VerifyReport run_verify(const VerifyOptions& options) {
  VerifyReport report;
  report.seed = options.seed;
  report.budget = options.budget;
  std::vector<int> ids = options.criteria;
  if (ids.empty())
    for (int i = 1; i <= 10; ++i) ids.push_back(i);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  for (int id : ids) {
    if (id == 10) continue;
    report.criteria.push_back(run_criterion(id, options));
  }
  if (std::find(ids.begin(), ids.end(), 10) != ids.end())
    report.criteria.push_back(check_determinism(report.criteria, options));

  if (!options.corpus.empty()) {
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(options.corpus))
      if (entry.is_regular_file()) files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    for (const std::string& f : files) report.corpus.push_back(check_corpus_file(f, options));
  }
  return report;
}

}  // namespace pursuit
