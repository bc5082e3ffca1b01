#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pursuit/engine.hpp"
#include "pursuit/expander.hpp"
#include "pursuit/graph.hpp"
#include "pursuit/guard.hpp"

namespace pursuit {

/// Desk-scale knobs of the recursion. `expander.levels` is ignored when
/// auto_levels is set; each leaf then uses default_levels of its component.
struct MeynielParams {
  int diameter_threshold = 2;
  ExpanderParams expander;
  bool auto_levels = true;
  std::uint64_t seed = 0;
  int exact_pair_limit = 500;  // exact diameter pair up to this many vertices, double sweep above
};

void validate(const MeynielParams& params);

/// One step of the recursion. Internal nodes carry the geodesic that gets
/// guarded and deleted; leaves carry a cop-set family for their component.
/// Vertex ids are ambient ids except inside `sub`, `family` and `plans`.
struct RecursionNode {
  VertexSet domain;
  int depth = 0;  // guards activated before this node
  int diameter = 0;
  bool leaf = false;

  std::vector<Vertex> path;
  std::vector<int> children;

  std::optional<InducedSubgraph> sub;
  CopSetFamily family;
  ExpanderParams params;
  std::shared_ptr<const std::vector<PlanResult>> plans;  // null when no family was found
  int attempts = 0;
  std::vector<Vertex> home;  // family positions, ambient ids
};

struct RecursionTree {
  std::vector<RecursionNode> nodes;  // nodes[0] is the root
  Vertex depot = 0;
  int guard_slots = 0;
  int family_slots = 0;
  int round_bound = 0;  // every robber line ends by this round
  bool complete = true;  // every leaf has a family

  int team_size() const { return guard_slots + family_slots; }
};

RecursionTree build_recursion(const Graph& g, const MeynielParams& params);

/// The recursive strategy as one cop team. Guards occupy the first slots in
/// activation order, family cops the rest. A new guard is activated once the
/// previous one guards; the robber's component then selects the child.
class MeynielCops : public CopStrategy {
 public:
  MeynielCops(const Graph& g, std::shared_ptr<const RecursionTree> tree);

  std::string name() const override { return "meyniel"; }
  std::vector<Vertex> place(const Graph& g, int cop_count, std::uint64_t seed) override;
  std::vector<Vertex> move(const CopView& view) override;
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<MeynielCops>(*this); }
  std::uint64_t fingerprint() const override;

  const RecursionTree& tree() const { return *tree_; }
  int node() const { return node_; }
  int guards_activated() const { return static_cast<int>(guards_.size()); }
  const std::vector<PathGuard>& guards() const { return guards_; }
  bool leaf_reached() const { return stage_ == Stage::Travel || stage_ == Stage::Execute || stage_ == Stage::Failed; }
  bool failed() const { return stage_ == Stage::Failed; }
  /// Guards activated plus the reached leaf's family size.
  int cops_used() const;

 private:
  enum class Stage { Settling, Travel, Execute, Failed };

  void descend(Vertex robber);
  std::vector<Vertex> leaf_move(const std::vector<Vertex>& pos, Vertex robber);

  const Graph* g_;
  std::shared_ptr<const RecursionTree> tree_;
  int node_ = 0;
  Stage stage_ = Stage::Settling;
  std::vector<PathGuard> guards_;
  std::shared_ptr<const LevelDecomposition> plan_;
  int tau_ = 0;
};

enum class MeynielStatus { Caught, RobberWins, Failure };

struct MeynielResult {
  Transcript transcript;
  MeynielStatus status = MeynielStatus::RobberWins;
  int cops_used = 0;
  int guards = 0;
  int family_cops = 0;
  int team_size = 0;
  int recursion_nodes = 0;
  std::string diagnostic;
};

/// Plays the recursion against `robber`; max_rounds = 0 uses the tree's bound.
MeynielResult run_meyniel(const Graph& g, const MeynielParams& params, RobberStrategy& robber, int max_rounds = 0);
MeynielResult run_meyniel(const Graph& g, std::shared_ptr<const RecursionTree> tree, RobberStrategy& robber,
                          int max_rounds = 0);

/// Exhaustive adversary over the tree's round bound; the worst line is replayed
/// to account cops. `states` receives the number of search nodes.
MeynielResult run_meyniel_adversary(const Graph& g, std::shared_ptr<const RecursionTree> tree,
                                    std::size_t* states = nullptr);

}  // namespace pursuit
