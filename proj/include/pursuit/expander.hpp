#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pursuit/engine.hpp"
#include "pursuit/graph.hpp"

namespace pursuit {

/// lambda is the expansion factor, p the per-set sampling density and
/// `levels` the number t of doubling levels (t + 1 cop sets are sampled).
struct ExpanderParams {
  double lambda = 2.0;
  double p = 0.5;
  int levels = 1;
  int resample_limit = 16;
};

void validate(const ExpanderParams& params);

/// max(1, ceil(log2 diameter)): the last level's matching radius 2^t then
/// reaches across the whole graph.
int default_levels(const Graph& g);

/// Cop sets C_1..C_{t+1}. One cop per (set, member) pair; cop ids run
/// level-major, members ascending within a level.
struct CopSetFamily {
  std::vector<VertexSet> sets;
  double p = 0;
  std::uint64_t seed = 0;

  int cop_count() const;
  int first_cop(int level) const;  // level is 1-based
  std::vector<Vertex> positions() const;
  /// Sizing guard: total above 2 (t + 1) p n. Reported, never rejected.
  bool oversized() const;
};

CopSetFamily sample_cop_sets(const Graph& g, const ExpanderParams& params, std::uint64_t seed);

struct ClaimWitness {
  std::vector<Vertex> subset;
  int radius_exponent = 0;  // i, so the ball radius is 2^i
  int set = 0;              // j, 1-based
};

struct ClaimReport {
  bool holds = true;
  std::uint64_t subsets = 0;      // subsets A examined
  std::uint64_t qualifying = 0;   // (A, i) pairs with |B(A, 2^i)| >= lambda |A|
  std::optional<ClaimWitness> witness;
};

/// Exhaustive check over every nonempty A with |A| <= n / lambda, every
/// i in [0, t] with |B(A, 2^i)| >= lambda |A| and every j that
/// |B(A, 2^i) ∩ C_j| >= |A|. Throws ResourceLimitError if n > max_vertices.
ClaimReport verify_claim(const Graph& g, const CopSetFamily& family, const ExpanderParams& params,
                         int max_vertices = 20);

struct Assignment {
  Vertex target;               // shell vertex
  int cop;                     // family cop id
  std::vector<Vertex> route;   // cop's start vertex .. target
};

/// A/D split of a candidate set. `cop` in each assignment indexes the
/// cops_available members in ascending order.
struct LevelSplit {
  VertexSet core;
  VertexSet shell;
  std::vector<Assignment> assignments;
};

/// Maximum matching between candidate vertices and available cops within
/// `radius`; the core is the Hall-deficiency closure and the shell the rest.
LevelSplit decompose_level(const Graph& g, const VertexSet& candidate, const VertexSet& cops_available,
                           int radius);

struct Level {
  int index = 1;   // i, 1-based
  int radius = 1;  // matching radius and occupation deadline, 2^{i-1}
  VertexSet candidate;
  VertexSet core;
  VertexSet shell;
  std::vector<Assignment> assignments;
  int next_ball = 0;          // |B(A_i, 2^{i-1})|, the next candidate's size
  bool within_growth = true;  // next_ball <= lambda |A_i|

  int deadline() const { return radius; }
};

struct LevelDecomposition {
  Vertex start = 0;
  bool immediate = false;  // a cop next to the start catches in round 1
  std::vector<Level> levels;

  int terminal() const { return static_cast<int>(levels.size()); }
  int capture_round() const { return levels.back().deadline(); }
};

struct PlanFailure {
  std::string reason;
  int level = 0;
};

using PlanResult = std::variant<LevelDecomposition, PlanFailure>;

PlanResult build_plan(const Graph& g, Vertex v, const CopSetFamily& family, const ExpanderParams& params);

/// Plans for every start vertex, sharing one distance table.
std::vector<PlanResult> build_all_plans(const Graph& g, const CopSetFamily& family, const ExpanderParams& params);

/// A family whose plans succeed from every start vertex, found by resampling
/// with seeds derive_seed(seed, attempt) for attempt < resample_limit.
struct FamilySearch {
  CopSetFamily family;
  std::shared_ptr<const std::vector<PlanResult>> plans;
  int attempts = 0;
};

std::optional<FamilySearch> find_family(const Graph& g, const ExpanderParams& params, std::uint64_t seed);

/// Visible-robber cops: wait for the robber's placement, take the plan for
/// it, walk the matched routes and hold everything else.
class ExpanderCops : public CopStrategy {
 public:
  ExpanderCops(const Graph& g, CopSetFamily family, ExpanderParams params,
               std::shared_ptr<const std::vector<PlanResult>> plans = nullptr);

  std::string name() const override { return "expander"; }
  std::vector<Vertex> place(const Graph& g, int cop_count, std::uint64_t seed) override;
  std::vector<Vertex> move(const CopView& view) override;
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<ExpanderCops>(*this); }
  std::uint64_t fingerprint() const override;

  const CopSetFamily& family() const { return family_; }
  const LevelDecomposition* plan() const { return plan_.get(); }
  int plan_round() const { return tau_; }

 private:
  friend std::unique_ptr<CopStrategy> execute_plan(const Graph&, const LevelDecomposition&, const CopSetFamily&);

  const Graph* g_;
  CopSetFamily family_;
  ExpanderParams params_;
  std::shared_ptr<const std::vector<PlanResult>> plans_;
  std::shared_ptr<const LevelDecomposition> plan_;
  std::shared_ptr<const LevelDecomposition> fixed_;
  std::vector<Vertex> home_;
  int tau_ = 0;
};

/// Cops bound to one precomputed plan. Throws invalid_argument if the plan's
/// routes do not start at the family's cop positions; the engine faults if
/// the robber is not placed at the plan's start.
std::unique_ptr<CopStrategy> execute_plan(const Graph& g, const LevelDecomposition& plan, const CopSetFamily& family);

/// Cop positions after plan round tau (0 = home).
std::vector<Vertex> plan_positions(const LevelDecomposition& plan, const std::vector<Vertex>& home, int tau);

struct ConfinementAudit {
  int depth = 0;
  int confinement_violations = 0;  // robber outside A_i at deadline i
  int occupation_violations = 0;   // D_i not occupied at deadline i
  bool all_caught = false;
  int survival = 0;
  std::size_t states = 0;
};

/// Exhaustive adversary against ExpanderCops with per-level checks at every
/// deadline. `plans` must hold a successful plan for every start vertex.
ConfinementAudit audit_confinement(const Graph& g, const CopSetFamily& family, const ExpanderParams& params,
                                   std::shared_ptr<const std::vector<PlanResult>> plans);

/// Cops that never see the robber: go home, guess a start vertex, run its
/// plan to the capture round, repeat. A guess with no plan still counts.
class InvisibleExpanderCops : public CopStrategy {
 public:
  InvisibleExpanderCops(const Graph& g, CopSetFamily family, ExpanderParams params, int max_repeats,
                        std::shared_ptr<const std::vector<PlanResult>> plans = nullptr);

  std::string name() const override { return "expander-invisible"; }
  std::vector<Vertex> place(const Graph& g, int cop_count, std::uint64_t seed) override;
  std::vector<Vertex> move(const CopView& view) override;
  std::unique_ptr<CopStrategy> clone() const override {
    return std::make_unique<InvisibleExpanderCops>(*this);
  }
  std::uint64_t fingerprint() const override;

  int repeats() const { return attempts_; }
  bool exhausted() const { return phase_ == Phase::Exhausted; }

 private:
  enum class Phase { Homing, Executing, Exhausted };

  const Graph* g_;
  CopSetFamily family_;
  ExpanderParams params_;
  int max_repeats_;
  std::shared_ptr<const std::vector<PlanResult>> plans_;
  std::vector<Vertex> home_;
  std::vector<std::vector<int>> to_home_;  // per cop, distances to its home
  Rng rng_{0};
  Phase phase_ = Phase::Homing;
  std::shared_ptr<const LevelDecomposition> plan_;
  int attempts_ = 0;
  int tau_ = 0;
};

struct InvisibleResult {
  Transcript transcript;
  int repeats = 0;
  bool caught = false;
};

/// Plays the invisible strategy against `robber` until capture or until
/// max_repeats guesses have been spent.
InvisibleResult invisible_mode(const Graph& g, const CopSetFamily& family, const ExpanderParams& params,
                               std::uint64_t seed, int max_repeats, RobberStrategy& robber);

}  // namespace pursuit
