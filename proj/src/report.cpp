#include "pursuit/report.hpp"

#include <cmath>
#include <cstdio>

namespace pursuit {

namespace {

// JSON has no infinities; they are written as strings.
Json number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

Json positions(const std::vector<Vertex>& v) { return Json(v); }

}  // namespace

Json document(const std::string& kind) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  return j;
}

std::string hex64(std::uint64_t x) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
  return buf;
}

const char* to_string(MeynielStatus status) {
  switch (status) {
    case MeynielStatus::Caught: return "caught";
    case MeynielStatus::RobberWins: return "robber-wins";
    case MeynielStatus::Failure: return "failure";
  }
  return "?";
}

const char* to_string(HalfMove half) {
  switch (half) {
    case HalfMove::Placement: return "placement";
    case HalfMove::Cops: return "cops";
    case HalfMove::Robber: return "robber";
  }
  return "?";
}

Json to_json(const GameConfig& cfg) {
  Json j;
  j["cop_count"] = cfg.cop_count;
  j["max_rounds"] = cfg.max_rounds;
  j["robber_visible"] = cfg.robber_visible;
  j["seed"] = cfg.seed;
  return j;
}

Json to_json(const Transcript& t) {
  Json j;
  j["graph_hash"] = hex64(t.graph_hash);
  j["vertex_count"] = t.vertex_count;
  j["config"] = to_json(t.config);
  j["cop_strategy"] = t.cop_strategy;
  j["robber_strategy"] = t.robber_strategy;
  j["initial_cops"] = positions(t.initial_cops);
  j["initial_robber"] = t.initial_robber;
  Json rounds = Json::array();
  for (const RoundRecord& r : t.rounds) {
    Json rec;
    rec["round"] = r.round;
    rec["cops"] = positions(r.cops);
    rec["robber"] = r.robber ? Json(*r.robber) : Json(nullptr);
    rounds.push_back(std::move(rec));
  }
  j["rounds"] = std::move(rounds);
  j["outcome"] = {{"caught", t.outcome.caught}, {"round", t.outcome.round}, {"half", to_string(t.outcome.half)}};
  return j;
}

Json to_json(const VertexSet& s) { return Json(s.members()); }

Json to_json(const CopSetFamily& family) {
  Json j;
  j["p"] = family.p;
  j["seed"] = family.seed;
  Json sizes = Json::array();
  for (const VertexSet& s : family.sets) sizes.push_back(s.size());
  j["set_sizes"] = std::move(sizes);
  j["cop_count"] = family.cop_count();
  j["oversized"] = family.oversized();
  Json sets = Json::array();
  for (const VertexSet& s : family.sets) sets.push_back(to_json(s));
  j["sets"] = std::move(sets);
  return j;
}

Json to_json(const LevelDecomposition& plan) {
  Json j;
  j["start"] = plan.start;
  j["immediate"] = plan.immediate;
  j["terminal"] = plan.terminal();
  j["capture_round"] = plan.capture_round();
  Json levels = Json::array();
  for (const Level& l : plan.levels) {
    Json lj;
    lj["index"] = l.index;
    lj["deadline"] = l.deadline();
    lj["candidate_size"] = l.candidate.size();
    lj["core_size"] = l.core.size();
    lj["shell_size"] = l.shell.size();
    lj["core"] = to_json(l.core);
    lj["shell"] = to_json(l.shell);
    lj["next_ball"] = l.next_ball;
    lj["within_growth"] = l.within_growth;
    Json as = Json::array();
    for (const Assignment& a : l.assignments) as.push_back({{"target", a.target}, {"cop", a.cop}, {"route", a.route}});
    lj["assignments"] = std::move(as);
    levels.push_back(std::move(lj));
  }
  j["levels"] = std::move(levels);
  return j;
}

Json to_json(const PlanFailure& failure) { return {{"failure", failure.reason}, {"level", failure.level}}; }

Json to_json(const GuardAudit& a) {
  Json j;
  j["settle"] = a.settle;
  j["depth"] = a.depth;
  j["touches"] = a.touches;
  j["violations"] = a.violations;
  j["late_settles"] = a.late_settles;
  j["states"] = a.states;
  j["all_caught"] = a.all_caught;
  return j;
}

Json to_json(const ConfinementAudit& a) {
  Json j;
  j["depth"] = a.depth;
  j["confinement_violations"] = a.confinement_violations;
  j["occupation_violations"] = a.occupation_violations;
  j["all_caught"] = a.all_caught;
  j["survival"] = a.survival;
  j["states"] = a.states;
  return j;
}

Json to_json(const RecursionTree& tree) {
  Json j;
  j["depot"] = tree.depot;
  j["guard_slots"] = tree.guard_slots;
  j["family_slots"] = tree.family_slots;
  j["team_size"] = tree.team_size();
  j["round_bound"] = tree.round_bound;
  j["complete"] = tree.complete;
  Json nodes = Json::array();
  for (const RecursionNode& n : tree.nodes) {
    Json nj;
    nj["depth"] = n.depth;
    nj["size"] = n.domain.size();
    nj["diameter"] = n.diameter;
    nj["leaf"] = n.leaf;
    if (n.leaf) {
      nj["family_found"] = n.plans != nullptr;
      nj["attempts"] = n.attempts;
      nj["lambda"] = n.params.lambda;
      nj["p"] = n.params.p;
      nj["levels"] = n.params.levels;
      nj["home"] = positions(n.home);
    } else {
      nj["path"] = positions(n.path);
      nj["children"] = n.children;
    }
    nodes.push_back(std::move(nj));
  }
  j["nodes"] = std::move(nodes);
  return j;
}

Json to_json(const MeynielResult& r) {
  Json j;
  j["status"] = to_string(r.status);
  j["cops_used"] = r.cops_used;
  j["guards"] = r.guards;
  j["family_cops"] = r.family_cops;
  j["team_size"] = r.team_size;
  j["recursion_nodes"] = r.recursion_nodes;
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  j["transcript"] = to_json(r.transcript);
  return j;
}

Json to_json(const Enclosure& e) { return Json::array({number(e.lo), number(e.hi)}); }

Json to_json(const BoundParams& b) {
  Json j;
  j["L"] = b.L;
  j["precision"] = b.precision;
  j["sqrt_L"] = to_json(b.sqrt_L);
  j["log2_L"] = to_json(b.log2_L);
  j["t"] = to_json(b.t);
  j["p_log"] = to_json(b.p_log);
  j["p"] = to_json(b.p);
  j["threshold_log"] = to_json(b.threshold_log);
  j["threshold"] = to_json(b.threshold);
  j["mu_log"] = to_json(b.mu_log);
  j["total_cops_log"] = to_json(b.total_cops_log);
  j["f_log"] = to_json(b.f_log);
  return j;
}

Json to_json(const ChainStep& s) {
  Json j;
  j["name"] = s.name;
  j["strict"] = s.strict;
  j["holds"] = s.holds;
  j["slack"] = to_json(s.slack);
  j["scale"] = s.scale;
  return j;
}

Json to_json(const ChainReport& r) {
  Json j;
  j["L"] = r.L;
  j["gap"] = number(r.gap);
  j["precision"] = r.precision;
  j["in_regime"] = r.in_regime;
  j["D_log"] = to_json(r.D_log);
  Json steps = Json::array();
  for (const ChainStep& s : r.steps) steps.push_back(to_json(s));
  j["steps"] = std::move(steps);
  j["end_to_end"] = to_json(r.end_to_end);
  j["all_hold"] = r.all_hold();
  return j;
}

}  // namespace pursuit
