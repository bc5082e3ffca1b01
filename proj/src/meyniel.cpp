#include "pursuit/meyniel.hpp"

#include <algorithm>
#include <stdexcept>

namespace pursuit {

void validate(const MeynielParams& params) {
  if (params.diameter_threshold < 1) throw std::invalid_argument("MeynielParams: diameter threshold must be >= 1");
  if (params.exact_pair_limit < 1) throw std::invalid_argument("MeynielParams: exact_pair_limit must be >= 1");
  ExpanderParams e = params.expander;
  if (params.auto_levels) e.levels = 1;
  validate(e);
}

namespace {

int distance(const std::vector<int>& dist, Vertex v) {
  if (dist[v] == kUnreachable) throw std::logic_error("meyniel: ambient graph is disconnected");
  return dist[v];
}

}  // namespace

RecursionTree build_recursion(const Graph& g, const MeynielParams& params) {
  validate(params);
  if (!is_connected(g)) throw std::invalid_argument("build_recursion: graph must be connected");
  RecursionTree tree;
  RecursionNode root;
  root.domain = VertexSet::all(g.vertex_count());
  tree.nodes.push_back(std::move(root));

  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    InducedSubgraph h = induced_subgraph(g, tree.nodes[i].domain);
    const int diam = *diameter(h.graph);
    tree.nodes[i].diameter = diam;
    if (diam <= params.diameter_threshold) {
      RecursionNode& leaf = tree.nodes[i];
      leaf.leaf = true;
      leaf.params = params.expander;
      if (params.auto_levels) leaf.params.levels = default_levels(h.graph);
      if (auto found = find_family(h.graph, leaf.params, derive_seed(params.seed, static_cast<std::uint64_t>(i)))) {
        leaf.family = std::move(found->family);
        leaf.plans = std::move(found->plans);
        leaf.attempts = found->attempts;
        for (Vertex v : leaf.family.positions()) leaf.home.push_back(h.to_old[v]);
      } else {
        leaf.attempts = leaf.params.resample_limit;
        tree.complete = false;
      }
      leaf.sub = std::move(h);
      continue;
    }

    const Edge ends = h.graph.vertex_count() <= params.exact_pair_limit ? diameter_pair(h.graph)
                                                                          : double_sweep_pair(h.graph);
    const std::vector<Vertex> local = shortest_path(h.graph, ends.first, ends.second);
    std::vector<Vertex> path;
    for (Vertex v : local) path.push_back(h.to_old[v]);
    std::vector<int> children;
    if (static_cast<int>(local.size()) < h.graph.vertex_count()) {
      const InducedSubgraph rest = delete_vertices(h.graph, VertexSet(h.graph.vertex_count(), local));
      for (const VertexSet& comp : components(rest.graph)) {
        RecursionNode child;
        child.domain = VertexSet(g.vertex_count());
        for (Vertex v : comp.members()) child.domain.insert(h.to_old[rest.to_old[v]]);
        child.depth = tree.nodes[i].depth + 1;
        children.push_back(static_cast<int>(tree.nodes.size()));
        tree.nodes.push_back(std::move(child));
      }
    }
    tree.nodes[i].path = std::move(path);
    tree.nodes[i].children = std::move(children);
  }

  const RecursionNode& top = tree.nodes.front();
  tree.depot = top.leaf ? 0 : top.path.front();
  for (const RecursionNode& node : tree.nodes) {
    tree.guard_slots = std::max(tree.guard_slots, node.leaf ? node.depth : node.depth + 1);
    if (node.leaf) tree.family_slots = std::max(tree.family_slots, node.family.cop_count());
  }
  if (tree.team_size() == 0) tree.family_slots = 1;

  // Children come after their parent, so a reverse sweep sees them first.
  const auto from_depot = bfs_distances(g, tree.depot);
  std::vector<int> bound(tree.nodes.size(), 0);
  for (std::size_t i = tree.nodes.size(); i-- > 0;) {
    const RecursionNode& node = tree.nodes[i];
    if (node.leaf) {
      int travel = 0;
      if (!top.leaf)
        for (Vertex h : node.home) travel = std::max(travel, distance(from_depot, h));
      int capture = 1;
      if (node.plans)
        for (const PlanResult& r : *node.plans) capture = std::max(capture, std::get<LevelDecomposition>(r).capture_round());
      bound[i] = travel + capture + 1;
    } else {
      const int settle = std::max(1, distance(from_depot, node.path.front()) + static_cast<int>(node.path.size()) - 1);
      int below = 1;
      for (int c : node.children) below = std::max(below, bound[c]);
      bound[i] = settle + below + 1;
    }
  }
  tree.round_bound = bound[0] + 2;
  return tree;
}

// ---------------------------------------------------------------------------

MeynielCops::MeynielCops(const Graph& g, std::shared_ptr<const RecursionTree> tree)
    : g_(&g), tree_(std::move(tree)) {
  if (!tree_ || tree_->nodes.empty()) throw std::invalid_argument("MeynielCops: empty recursion tree");
  if (tree_->nodes.front().domain.universe() != g.vertex_count())
    throw std::invalid_argument("MeynielCops: tree built for another graph");
}

std::vector<Vertex> MeynielCops::place(const Graph&, int cop_count, std::uint64_t) {
  const RecursionTree& t = *tree_;
  if (cop_count != t.team_size())
    throw std::invalid_argument("MeynielCops: team needs " + std::to_string(t.team_size()) + " cops, game has " +
                                std::to_string(cop_count));
  node_ = 0;
  guards_.clear();
  plan_.reset();
  tau_ = 0;
  std::vector<Vertex> pos(cop_count, t.depot);
  const RecursionNode& root = t.nodes.front();
  if (root.leaf) {
    stage_ = root.plans ? Stage::Travel : Stage::Failed;
    std::copy(root.home.begin(), root.home.end(), pos.begin() + t.guard_slots);
  } else {
    stage_ = Stage::Settling;
    guards_.emplace_back(*g_, root.path, root.domain);
  }
  return pos;
}

void MeynielCops::descend(Vertex robber) {
  const RecursionTree& t = *tree_;
  for (int c : t.nodes[node_].children) {
    if (!t.nodes[c].domain.contains(robber)) continue;
    node_ = c;
    const RecursionNode& child = t.nodes[c];
    if (!child.leaf)
      guards_.emplace_back(*g_, child.path, child.domain);
    else
      stage_ = child.plans ? Stage::Travel : Stage::Failed;
    return;
  }
  // The robber stands on the guarded path and is being captured.
}

std::vector<Vertex> MeynielCops::leaf_move(const std::vector<Vertex>& pos, Vertex robber) {
  const RecursionTree& t = *tree_;
  const RecursionNode& leaf = t.nodes[node_];
  const auto base = static_cast<std::size_t>(t.guard_slots);
  std::vector<Vertex> next = pos;
  if (stage_ == Stage::Travel) {
    bool home = true;
    for (std::size_t j = 0; j < leaf.home.size(); ++j) {
      const Vertex at = pos[base + j];
      if (at == leaf.home[j]) continue;
      home = false;
      next[base + j] = shortest_path(*g_, at, leaf.home[j])[1];
    }
    if (!home) return next;
    stage_ = Stage::Execute;
    tau_ = 0;
  }
  if (tau_ == 0) {
    const Vertex local = leaf.sub->to_new[robber];
    if (local == kUnreachable) return next;  // on a guarded path; its guard is capturing
    plan_ = {leaf.plans, &std::get<LevelDecomposition>((*leaf.plans)[local])};
  }
  ++tau_;
  const std::vector<Vertex> local_pos = plan_positions(*plan_, leaf.family.positions(), tau_);
  for (std::size_t j = 0; j < local_pos.size(); ++j) next[base + j] = leaf.sub->to_old[local_pos[j]];
  return next;
}

std::vector<Vertex> MeynielCops::move(const CopView& view) {
  if (!view.robber) throw StrategyFault("cops", view.round, "the recursion needs to see the robber");
  const Vertex r = *view.robber;
  const std::vector<Vertex> pos(view.cops.begin(), view.cops.end());
  std::vector<Vertex> next = pos;
  for (std::size_t i = 0; i < guards_.size(); ++i) next[i] = guards_[i].step(pos[i], r);

  if (stage_ == Stage::Settling && guards_.back().phase() == GuardPhase::Guarding) {
    const std::size_t before = guards_.size();
    descend(r);
    if (guards_.size() > before) next[before] = guards_.back().step(pos[before], r);
  }
  if (stage_ == Stage::Travel || stage_ == Stage::Execute) {
    const std::vector<Vertex> leaf = leaf_move(pos, r);
    for (std::size_t j = tree_->guard_slots; j < next.size(); ++j) next[j] = leaf[j];
  }
  return next;
}

std::uint64_t MeynielCops::fingerprint() const {
  std::uint64_t h = splitmix64(static_cast<std::uint64_t>(node_) << 8 | static_cast<std::uint64_t>(stage_));
  for (const PathGuard& guard : guards_) h = splitmix64(h ^ guard.fingerprint());
  h = splitmix64(h ^ static_cast<std::uint64_t>(tau_));
  if (plan_) h = splitmix64(h ^ (static_cast<std::uint64_t>(plan_->start) + 1));
  return h;
}

int MeynielCops::cops_used() const {
  int used = guards_activated();
  if (leaf_reached()) used += tree_->nodes[node_].family.cop_count();
  return used;
}

// ---------------------------------------------------------------------------

MeynielResult run_meyniel(const Graph& g, std::shared_ptr<const RecursionTree> tree, RobberStrategy& robber,
                          int max_rounds) {
  MeynielCops cops(g, tree);
  GameConfig cfg;
  cfg.cop_count = tree->team_size();
  cfg.max_rounds = max_rounds > 0 ? max_rounds : tree->round_bound;
  MeynielResult out;
  out.transcript = play(g, cops, robber, cfg);
  out.team_size = tree->team_size();
  out.recursion_nodes = static_cast<int>(tree->nodes.size());
  out.guards = cops.guards_activated();
  out.family_cops = cops.leaf_reached() ? tree->nodes[cops.node()].family.cop_count() : 0;
  out.cops_used = cops.cops_used();
  if (out.transcript.outcome.caught) {
    out.status = MeynielStatus::Caught;
  } else if (cops.failed()) {
    out.status = MeynielStatus::Failure;
    out.diagnostic = "no cop-set family within " + std::to_string(tree->nodes[cops.node()].attempts) +
                     " samples for the robber's component";
  } else {
    out.status = MeynielStatus::RobberWins;
    out.diagnostic = "robber survived " + std::to_string(cfg.max_rounds) + " rounds";
  }
  return out;
}

MeynielResult run_meyniel(const Graph& g, const MeynielParams& params, RobberStrategy& robber, int max_rounds) {
  auto tree = std::make_shared<const RecursionTree>(build_recursion(g, params));
  return run_meyniel(g, std::move(tree), robber, max_rounds);
}

MeynielResult run_meyniel_adversary(const Graph& g, std::shared_ptr<const RecursionTree> tree, std::size_t* states) {
  const MeynielCops cops(g, tree);
  GameConfig cfg;
  cfg.cop_count = tree->team_size();
  cfg.max_rounds = tree->round_bound;
  const AdversaryResult res = adversarial_robber_search(g, cops, cfg, cfg.max_rounds);
  if (states) *states = res.states;
  std::vector<Vertex> script{res.worst.initial_robber};
  for (const RoundRecord& rec : res.worst.rounds)
    if (rec.robber) script.push_back(*rec.robber);
  ScriptedRobber adversary(script, "adversary");
  return run_meyniel(g, std::move(tree), adversary, cfg.max_rounds);
}

}  // namespace pursuit
