#include "pursuit/expander.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "pursuit/matching.hpp"

namespace pursuit {

namespace {

using Distances = std::vector<std::vector<int>>;

constexpr int kMaxLevels = 24;

bool within(const std::vector<int>& dist, Vertex u, int radius) {
  return dist[u] != kUnreachable && dist[u] <= radius;
}

// cop_base is added to the member index of each matched cop.
LevelSplit split_level(const Graph& g, const VertexSet& candidate, const VertexSet& cops_available, int radius,
                       const Distances& dist_from, int cop_base) {
  const std::vector<Vertex> left = candidate.members();
  const std::vector<Vertex> right = cops_available.members();
  std::vector<std::vector<int>> adj(left.size());
  for (std::size_t i = 0; i < left.size(); ++i)
    for (std::size_t c = 0; c < right.size(); ++c)
      if (within(dist_from[left[i]], right[c], radius)) adj[i].push_back(static_cast<int>(c));

  const Matching m = max_bipartite_matching(adj, static_cast<int>(right.size()));
  const std::vector<char> deficient = hall_deficiency_closure(adj, m);
  LevelSplit out{VertexSet(g.vertex_count()), VertexSet(g.vertex_count()), {}};
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (deficient[i]) {
      out.core.insert(left[i]);
      continue;
    }
    out.shell.insert(left[i]);
    const Vertex from = right[m.left_mate[i]];
    out.assignments.push_back({left[i], cop_base + m.left_mate[i], shortest_path(g, from, left[i])});
  }
  return out;
}

class Planner {
 public:
  Planner(const Graph& g, const CopSetFamily& family, const ExpanderParams& params)
      : g_(g), family_(family), params_(params), dist_(all_pairs_distances(g)) {
    validate(params);
    if (static_cast<int>(family.sets.size()) != params.levels + 1)
      throw std::invalid_argument("build_plan: family has " + std::to_string(family.sets.size()) +
                                  " sets, parameters need " + std::to_string(params.levels + 1));
    for (const VertexSet& s : family.sets)
      if (s.universe() != g.vertex_count()) throw std::invalid_argument("build_plan: family built for another graph");
  }

  PlanResult build(Vertex v) const {
    if (!g_.contains(v)) throw std::invalid_argument("build_plan: start vertex outside the graph");
    LevelDecomposition plan;
    plan.start = v;
    const VertexSet near = ball(g_, v, 1);
    if (near.size() >= params_.lambda) {
      const auto c1 = family_.sets[0].members();
      for (std::size_t c = 0; c < c1.size(); ++c) {
        if (!within(dist_[v], c1[c], 1)) continue;
        Level lvl;
        lvl.candidate = VertexSet(g_.vertex_count(), {v});
        lvl.core = VertexSet(g_.vertex_count());
        lvl.shell = lvl.candidate;
        lvl.assignments.push_back({v, family_.first_cop(1) + static_cast<int>(c), shortest_path(g_, c1[c], v)});
        plan.immediate = true;
        plan.levels.push_back(std::move(lvl));
        return plan;
      }
    }
    VertexSet candidate = near;
    for (int i = 1; i <= params_.levels + 1; ++i) {
      Level lvl;
      lvl.index = i;
      lvl.radius = 1 << (i - 1);
      LevelSplit split =
          split_level(g_, candidate, family_.sets[i - 1], lvl.radius, dist_, family_.first_cop(i));
      lvl.candidate = std::move(candidate);
      lvl.core = std::move(split.core);
      lvl.shell = std::move(split.shell);
      lvl.assignments = std::move(split.assignments);
      const bool done = lvl.core.empty();
      if (!done) {
        candidate = ball(g_, lvl.core, lvl.radius);
        lvl.next_ball = candidate.size();
        lvl.within_growth = lvl.next_ball <= params_.lambda * lvl.core.size();
      }
      plan.levels.push_back(std::move(lvl));
      if (done) return plan;
    }
    return PlanFailure{"levels-exhausted", params_.levels + 1};
  }

 private:
  const Graph& g_;
  const CopSetFamily& family_;
  const ExpanderParams& params_;
  Distances dist_;
};

std::shared_ptr<const LevelDecomposition> plan_for(const Graph& g, Vertex v, const CopSetFamily& family,
                                                   const ExpanderParams& params,
                                                   const std::shared_ptr<const std::vector<PlanResult>>& plans,
                                                   std::string* why) {
  if (plans) {
    const PlanResult& r = plans->at(v);
    if (const auto* fail = std::get_if<PlanFailure>(&r)) {
      if (why) *why = fail->reason;
      return nullptr;
    }
    return {plans, &std::get<LevelDecomposition>(r)};
  }
  PlanResult r = build_plan(g, v, family, params);
  if (const auto* fail = std::get_if<PlanFailure>(&r)) {
    if (why) *why = fail->reason;
    return nullptr;
  }
  return std::make_shared<const LevelDecomposition>(std::get<LevelDecomposition>(std::move(r)));
}

}  // namespace

void validate(const ExpanderParams& params) {
  if (!(params.lambda > 1.0)) throw std::invalid_argument("ExpanderParams: lambda must exceed 1");
  if (!(params.p > 0.0 && params.p <= 1.0)) throw std::invalid_argument("ExpanderParams: p must lie in (0, 1]");
  if (params.levels < 1 || params.levels > kMaxLevels)
    throw std::invalid_argument("ExpanderParams: levels must lie in [1, " + std::to_string(kMaxLevels) + "]");
  if (params.resample_limit < 1) throw std::invalid_argument("ExpanderParams: resample_limit must be >= 1");
}

int default_levels(const Graph& g) {
  const auto diam = diameter(g);
  if (!diam) throw std::invalid_argument("default_levels: graph must be connected");
  int t = 0;
  while ((1 << t) < *diam) ++t;
  return std::max(1, t);
}

int CopSetFamily::cop_count() const {
  int total = 0;
  for (const VertexSet& s : sets) total += s.size();
  return total;
}

int CopSetFamily::first_cop(int level) const {
  int total = 0;
  for (int j = 0; j + 1 < level; ++j) total += sets.at(j).size();
  return total;
}

std::vector<Vertex> CopSetFamily::positions() const {
  std::vector<Vertex> out;
  for (const VertexSet& s : sets)
    for (Vertex v : s.members()) out.push_back(v);
  return out;
}

bool CopSetFamily::oversized() const {
  if (sets.empty()) return false;
  return cop_count() > 2.0 * static_cast<double>(sets.size()) * p * sets.front().universe();
}

CopSetFamily sample_cop_sets(const Graph& g, const ExpanderParams& params, std::uint64_t seed) {
  validate(params);
  CopSetFamily family;
  family.p = params.p;
  family.seed = seed;
  Rng rng(seed);
  for (int j = 0; j <= params.levels; ++j) {
    VertexSet s(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (rng.bernoulli(params.p)) s.insert(v);
    family.sets.push_back(std::move(s));
  }
  return family;
}

ClaimReport verify_claim(const Graph& g, const CopSetFamily& family, const ExpanderParams& params,
                         int max_vertices) {
  validate(params);
  const int n = g.vertex_count();
  if (n > max_vertices || n > 24)
    throw ResourceLimitError("verify_claim: " + std::to_string(n) + " vertices exceed the budget of " +
                             std::to_string(std::min(max_vertices, 24)));
  if (static_cast<int>(family.sets.size()) != params.levels + 1)
    throw std::invalid_argument("verify_claim: family size does not match levels");
  const int max_size = static_cast<int>(std::floor(n / params.lambda));
  const auto dist = all_pairs_distances(g);
  std::vector<std::uint32_t> sets;
  for (const VertexSet& s : family.sets) {
    std::uint32_t mask = 0;
    for (Vertex v : s.members()) mask |= 1U << v;
    sets.push_back(mask);
  }

  ClaimReport report;
  const std::uint32_t full = (1U << n) - 1;
  std::vector<std::uint32_t> balls(std::size_t{1} << n);
  for (int i = 0; i <= params.levels; ++i) {
    const int radius = 1 << i;
    std::vector<std::uint32_t> single(n, 0);
    for (Vertex a = 0; a < n; ++a)
      for (Vertex u = 0; u < n; ++u)
        if (within(dist[a], u, radius)) single[a] |= 1U << u;
    balls[0] = 0;
    for (std::uint32_t a = 1; a <= full; ++a) {
      const int low = std::countr_zero(a);
      balls[a] = balls[a & (a - 1)] | single[low];
      const int size = std::popcount(a);
      if (size > max_size) continue;
      if (i == 0) ++report.subsets;
      const int reach = std::popcount(balls[a]);
      if (reach < params.lambda * size) continue;
      ++report.qualifying;
      for (std::size_t j = 0; j < sets.size(); ++j) {
        if (std::popcount(balls[a] & sets[j]) >= size) continue;
        report.holds = false;
        ClaimWitness w;
        for (Vertex v = 0; v < n; ++v)
          if ((a >> v) & 1U) w.subset.push_back(v);
        w.radius_exponent = i;
        w.set = static_cast<int>(j) + 1;
        report.witness = std::move(w);
        return report;
      }
    }
  }
  return report;
}

LevelSplit decompose_level(const Graph& g, const VertexSet& candidate, const VertexSet& cops_available,
                           int radius) {
  if (candidate.empty()) throw std::invalid_argument("decompose_level: empty candidate set");
  if (candidate.universe() != g.vertex_count() || cops_available.universe() != g.vertex_count())
    throw std::invalid_argument("decompose_level: vertex sets built for another graph");
  if (radius < 0) throw std::invalid_argument("decompose_level: negative radius");
  Distances dist(g.vertex_count());
  for (Vertex u : candidate.members()) dist[u] = bfs_distances(g, u);
  return split_level(g, candidate, cops_available, radius, dist, 0);
}

PlanResult build_plan(const Graph& g, Vertex v, const CopSetFamily& family, const ExpanderParams& params) {
  return Planner(g, family, params).build(v);
}

std::vector<PlanResult> build_all_plans(const Graph& g, const CopSetFamily& family, const ExpanderParams& params) {
  const Planner planner(g, family, params);
  std::vector<PlanResult> out;
  out.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.push_back(planner.build(v));
  return out;
}

std::optional<FamilySearch> find_family(const Graph& g, const ExpanderParams& params, std::uint64_t seed) {
  validate(params);
  for (int attempt = 0; attempt < params.resample_limit; ++attempt) {
    CopSetFamily family = sample_cop_sets(g, params, derive_seed(seed, static_cast<std::uint64_t>(attempt)));
    if (family.cop_count() == 0) continue;
    auto plans = std::make_shared<std::vector<PlanResult>>(build_all_plans(g, family, params));
    const bool ok = std::all_of(plans->begin(), plans->end(),
                                [](const PlanResult& r) { return std::holds_alternative<LevelDecomposition>(r); });
    if (ok) return FamilySearch{std::move(family), std::move(plans), attempt + 1};
  }
  return std::nullopt;
}

std::vector<Vertex> plan_positions(const LevelDecomposition& plan, const std::vector<Vertex>& home, int tau) {
  std::vector<Vertex> pos = home;
  for (const Level& lvl : plan.levels)
    for (const Assignment& a : lvl.assignments)
      pos.at(a.cop) = a.route[std::min<std::size_t>(tau, a.route.size() - 1)];
  return pos;
}

// ---------------------------------------------------------------------------

ExpanderCops::ExpanderCops(const Graph& g, CopSetFamily family, ExpanderParams params,
                           std::shared_ptr<const std::vector<PlanResult>> plans)
    : g_(&g), family_(std::move(family)), params_(params), plans_(std::move(plans)), home_(family_.positions()) {
  validate(params_);
  if (home_.empty()) throw std::invalid_argument("ExpanderCops: the family has no cops");
  if (plans_ && static_cast<int>(plans_->size()) != g.vertex_count())
    throw std::invalid_argument("ExpanderCops: need one plan per vertex");
}

std::vector<Vertex> ExpanderCops::place(const Graph&, int cop_count, std::uint64_t) {
  if (cop_count != static_cast<int>(home_.size()))
    throw std::invalid_argument("ExpanderCops: family has " + std::to_string(home_.size()) + " cops, game has " +
                                std::to_string(cop_count));
  tau_ = 0;
  plan_ = fixed_;
  return home_;
}

std::vector<Vertex> ExpanderCops::move(const CopView& view) {
  if (tau_ == 0) {
    if (!view.robber) throw StrategyFault("cops", view.round, "expander cops need the robber's start vertex");
    if (fixed_) {
      if (fixed_->start != *view.robber)
        throw std::invalid_argument("execute_plan: robber started at " + std::to_string(*view.robber) +
                                    ", plan expects " + std::to_string(fixed_->start));
    } else {
      std::string why;
      plan_ = plan_for(*g_, *view.robber, family_, params_, plans_, &why);
      if (!plan_)
        throw StrategyFault("cops", view.round, "no plan from vertex " + std::to_string(*view.robber) + ": " + why);
    }
  }
  ++tau_;
  return plan_positions(*plan_, home_, tau_);
}

std::uint64_t ExpanderCops::fingerprint() const {
  if (tau_ == 0) return 0;
  return splitmix64((static_cast<std::uint64_t>(plan_->start) + 1) << 32 | static_cast<std::uint64_t>(tau_));
}

std::unique_ptr<CopStrategy> execute_plan(const Graph& g, const LevelDecomposition& plan, const CopSetFamily& family) {
  const std::vector<Vertex> home = family.positions();
  for (const Level& lvl : plan.levels) {
    for (const Assignment& a : lvl.assignments) {
      if (a.cop < 0 || a.cop >= static_cast<int>(home.size()) || a.route.empty() || a.route.front() != home[a.cop] ||
          a.route.back() != a.target || !is_geodesic(g, a.route) ||
          static_cast<int>(a.route.size()) - 1 > lvl.radius)
        throw std::invalid_argument("execute_plan: plan does not match the family");
    }
  }
  ExpanderParams params;
  params.levels = std::max(1, static_cast<int>(family.sets.size()) - 1);
  auto cops = std::make_unique<ExpanderCops>(g, family, params);
  cops->fixed_ = std::make_shared<const LevelDecomposition>(plan);
  cops->plan_ = cops->fixed_;
  return cops;
}

ConfinementAudit audit_confinement(const Graph& g, const CopSetFamily& family, const ExpanderParams& params,
                                   std::shared_ptr<const std::vector<PlanResult>> plans) {
  if (!plans) throw std::invalid_argument("audit_confinement: plans required");
  ConfinementAudit audit;
  for (const PlanResult& r : *plans) {
    const auto* plan = std::get_if<LevelDecomposition>(&r);
    if (!plan) throw std::invalid_argument("audit_confinement: a start vertex has no plan");
    audit.depth = std::max(audit.depth, plan->capture_round());
  }
  const ExpanderCops cops(g, family, params, plans);
  GameConfig cfg;
  cfg.cop_count = family.cop_count();
  cfg.max_rounds = audit.depth;

  auto caught = [](std::span<const Vertex> cops, Vertex robber) {
    return std::find(cops.begin(), cops.end(), robber) != cops.end();
  };
  SearchVisitor visitor;
  visitor.on_robber_move = [&](int round, std::span<const Vertex> pos, Vertex robber, const CopStrategy& team) {
    const LevelDecomposition* plan = static_cast<const ExpanderCops&>(team).plan();
    if (round == 0 || !plan || caught(pos, robber)) return;
    for (const Level& lvl : plan->levels)
      if (lvl.deadline() == round && !lvl.core.contains(robber)) ++audit.confinement_violations;
  };
  visitor.on_cop_move = [&](int round, std::span<const Vertex>, std::span<const Vertex> after, Vertex robber,
                            const CopStrategy& team) {
    const LevelDecomposition* plan = static_cast<const ExpanderCops&>(team).plan();
    if (!plan || caught(after, robber)) return;
    for (const Level& lvl : plan->levels) {
      if (lvl.deadline() != round) continue;
      for (const Assignment& a : lvl.assignments)
        if (after[a.cop] != a.target) ++audit.occupation_violations;
    }
  };
  const AdversaryResult res = adversarial_robber_search(g, cops, cfg, audit.depth, &visitor);
  audit.all_caught = res.all_caught;
  audit.survival = res.survival;
  audit.states = res.states;
  return audit;
}

// ---------------------------------------------------------------------------

InvisibleExpanderCops::InvisibleExpanderCops(const Graph& g, CopSetFamily family, ExpanderParams params,
                                             int max_repeats, std::shared_ptr<const std::vector<PlanResult>> plans)
    : g_(&g),
      family_(std::move(family)),
      params_(params),
      max_repeats_(max_repeats),
      plans_(std::move(plans)),
      home_(family_.positions()) {
  validate(params_);
  if (home_.empty()) throw std::invalid_argument("InvisibleExpanderCops: the family has no cops");
  if (max_repeats < 1) throw std::invalid_argument("InvisibleExpanderCops: max_repeats must be >= 1");
  for (Vertex h : home_) to_home_.push_back(bfs_distances(g, h));
}

std::vector<Vertex> InvisibleExpanderCops::place(const Graph&, int cop_count, std::uint64_t seed) {
  if (cop_count != static_cast<int>(home_.size()))
    throw std::invalid_argument("InvisibleExpanderCops: family has " + std::to_string(home_.size()) +
                                " cops, game has " + std::to_string(cop_count));
  rng_ = Rng(seed);
  phase_ = Phase::Homing;
  plan_.reset();
  attempts_ = 0;
  tau_ = 0;
  return home_;
}

std::vector<Vertex> InvisibleExpanderCops::move(const CopView& view) {
  std::vector<Vertex> pos(view.cops.begin(), view.cops.end());
  for (;;) {
    switch (phase_) {
      case Phase::Exhausted:
        return pos;
      case Phase::Executing: {
        ++tau_;
        if (tau_ >= plan_->capture_round()) phase_ = Phase::Homing;
        return plan_positions(*plan_, home_, tau_);
      }
      case Phase::Homing: {
        if (pos != home_) {
          for (std::size_t c = 0; c < pos.size(); ++c) {
            const auto& dist = to_home_[c];
            for (Vertex u : g_->neighbors(pos[c])) {
              if (dist[u] == dist[pos[c]] - 1) {
                pos[c] = u;
                break;
              }
            }
          }
          return pos;
        }
        if (attempts_ >= max_repeats_) {
          phase_ = Phase::Exhausted;
          break;
        }
        ++attempts_;
        const auto guess = static_cast<Vertex>(rng_.below(static_cast<std::uint64_t>(g_->vertex_count())));
        plan_ = plan_for(*g_, guess, family_, params_, plans_, nullptr);
        if (plan_) {
          tau_ = 0;
          phase_ = Phase::Executing;
        }
        break;
      }
    }
  }
}

std::uint64_t InvisibleExpanderCops::fingerprint() const {
  const std::uint64_t start = plan_ ? static_cast<std::uint64_t>(plan_->start) + 1 : 0;
  return splitmix64(static_cast<std::uint64_t>(phase_) ^ (static_cast<std::uint64_t>(attempts_) << 8) ^
                    (static_cast<std::uint64_t>(tau_) << 24) ^ (start << 40));
}

InvisibleResult invisible_mode(const Graph& g, const CopSetFamily& family, const ExpanderParams& params,
                               std::uint64_t seed, int max_repeats, RobberStrategy& robber) {
  InvisibleExpanderCops cops(g, family, params, max_repeats);
  const auto diam = diameter(g);
  if (!diam) throw std::invalid_argument("invisible_mode: graph must be connected");
  GameConfig cfg;
  cfg.cop_count = family.cop_count();
  cfg.robber_visible = false;
  cfg.seed = seed;
  cfg.max_rounds = max_repeats * (*diam + (1 << params.levels)) + 1;
  InvisibleResult out;
  out.transcript = play(g, cops, robber, cfg);
  out.repeats = cops.repeats();
  out.caught = out.transcript.outcome.caught;
  return out;
}

}  // namespace pursuit
