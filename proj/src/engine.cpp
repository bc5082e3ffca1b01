#include "pursuit/engine.hpp"

#include <algorithm>
#include <unordered_map>

namespace pursuit {

namespace {

bool occupied(std::span<const Vertex> cops, Vertex v) {
  return std::find(cops.begin(), cops.end(), v) != cops.end();
}

bool legal_step(const Graph& g, Vertex from, Vertex to) {
  return g.contains(to) && (from == to || g.adjacent(from, to));
}

void check_cop_move(const Graph& g, std::span<const Vertex> before, std::span<const Vertex> after,
                    int round) {
  if (after.size() != before.size())
    throw StrategyFault("cops", round,
                        "returned " + std::to_string(after.size()) + " positions for " +
                            std::to_string(before.size()) + " cops");
  for (std::size_t i = 0; i < after.size(); ++i)
    if (!legal_step(g, before[i], after[i]))
      throw StrategyFault("cops", round,
                          "cop " + std::to_string(i) + " cannot move from " + std::to_string(before[i]) +
                              " to " + std::to_string(after[i]));
}

std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
  std::vector<Vertex> out(g.neighbors(v).begin(), g.neighbors(v).end());
  out.insert(std::lower_bound(out.begin(), out.end(), v), v);
  return out;
}

}  // namespace

void validate(const GameConfig& cfg) {
  if (cfg.cop_count < 1) throw std::invalid_argument("GameConfig: cop_count must be >= 1");
  if (cfg.max_rounds < 1) throw std::invalid_argument("GameConfig: max_rounds must be >= 1");
}

std::optional<Vertex> Transcript::robber_at(int round) const {
  if (round == 0) return initial_robber;
  if (round < 1 || round > static_cast<int>(rounds.size())) return std::nullopt;
  return rounds[round - 1].robber;
}

Transcript play(const Graph& g, CopStrategy& cops, RobberStrategy& robber, const GameConfig& cfg) {
  validate(cfg);
  if (!is_connected(g)) throw std::invalid_argument("play: graph must be connected");

  Transcript t;
  t.graph_hash = graph_hash(g);
  t.vertex_count = g.vertex_count();
  t.config = cfg;
  t.cop_strategy = cops.name();
  t.robber_strategy = robber.name();

  std::vector<Vertex> cop_pos = cops.place(g, cfg.cop_count, derive_seed(cfg.seed, "cops"));
  if (static_cast<int>(cop_pos.size()) != cfg.cop_count)
    throw StrategyFault("cops", 0, "placed " + std::to_string(cop_pos.size()) + " cops");
  for (Vertex c : cop_pos)
    if (!g.contains(c)) throw StrategyFault("cops", 0, "placement outside the graph");
  t.initial_cops = cop_pos;

  Vertex rob = robber.place(g, cop_pos, derive_seed(cfg.seed, "robber"));
  if (!g.contains(rob)) throw StrategyFault("robber", 0, "placement outside the graph");
  t.initial_robber = rob;
  if (occupied(cop_pos, rob)) {
    t.outcome = {true, 0, HalfMove::Placement};
    return t;
  }

  for (int round = 1; round <= cfg.max_rounds; ++round) {
    const CopView view{g, round, cop_pos,
                       cfg.robber_visible ? std::optional<Vertex>(rob) : std::nullopt};
    std::vector<Vertex> next = cops.move(view);
    check_cop_move(g, cop_pos, next, round);
    cop_pos = std::move(next);
    if (occupied(cop_pos, rob)) {
      t.rounds.push_back({round, cop_pos, std::nullopt});
      t.outcome = {true, round, HalfMove::Cops};
      return t;
    }
    const Vertex step = robber.move(RobberView{g, round, cop_pos, rob});
    if (!legal_step(g, rob, step))
      throw StrategyFault("robber", round,
                          "cannot move from " + std::to_string(rob) + " to " + std::to_string(step));
    rob = step;
    t.rounds.push_back({round, cop_pos, rob});
    if (occupied(cop_pos, rob)) {
      t.outcome = {true, round, HalfMove::Robber};
      return t;
    }
  }
  t.outcome = {false, cfg.max_rounds, HalfMove::Robber};
  return t;
}

std::optional<std::string> validate_transcript(const Graph& g, const Transcript& t) {
  auto fail = [](int round, const std::string& what) {
    return std::optional<std::string>("round " + std::to_string(round) + ": " + what);
  };
  if (t.vertex_count != g.vertex_count()) return fail(0, "vertex count differs from graph");
  if (t.graph_hash != graph_hash(g)) return fail(0, "graph hash differs");
  if (static_cast<int>(t.initial_cops.size()) != t.config.cop_count) return fail(0, "wrong cop count");
  for (Vertex c : t.initial_cops)
    if (c < 0 || c >= g.vertex_count()) return fail(0, "cop placed outside the graph");
  if (t.initial_robber < 0 || t.initial_robber >= g.vertex_count())
    return fail(0, "robber placed outside the graph");

  std::vector<Vertex> cops = t.initial_cops;
  Vertex rob = t.initial_robber;
  const bool caught_at_placement = occupied(cops, rob);
  if (caught_at_placement) {
    if (!t.rounds.empty()) return fail(0, "moves recorded after capture at placement");
    if (!(t.outcome.caught && t.outcome.round == 0 && t.outcome.half == HalfMove::Placement))
      return fail(0, "capture at placement not reported");
    return std::nullopt;
  }
  for (std::size_t i = 0; i < t.rounds.size(); ++i) {
    const RoundRecord& rec = t.rounds[i];
    const int round = static_cast<int>(i) + 1;
    if (rec.round != round) return fail(round, "round numbers out of sequence");
    if (rec.cops.size() != cops.size()) return fail(round, "cop count changed");
    for (std::size_t c = 0; c < cops.size(); ++c) {
      const Vertex to = rec.cops[c];
      if (to < 0 || to >= g.vertex_count() || (to != cops[c] && !g.adjacent(cops[c], to)))
        return fail(round, "illegal move by cop " + std::to_string(c));
    }
    cops = rec.cops;
    const bool last = i + 1 == t.rounds.size();
    if (occupied(cops, rob)) {
      if (!last || rec.robber.has_value()) return fail(round, "capture by cops not ending the game");
      if (!(t.outcome.caught && t.outcome.round == round && t.outcome.half == HalfMove::Cops))
        return fail(round, "capture by cops misreported");
      return std::nullopt;
    }
    if (!rec.robber) return fail(round, "robber position missing without capture");
    const Vertex to = *rec.robber;
    if (to < 0 || to >= g.vertex_count() || (to != rob && !g.adjacent(rob, to)))
      return fail(round, "illegal robber move");
    rob = to;
    if (occupied(cops, rob)) {
      if (!last) return fail(round, "robber caught but game continued");
      if (!(t.outcome.caught && t.outcome.round == round && t.outcome.half == HalfMove::Robber))
        return fail(round, "robber capture misreported");
      return std::nullopt;
    }
  }
  if (t.outcome.caught) return fail(t.outcome.round, "capture reported but never happened");
  if (static_cast<int>(t.rounds.size()) != t.config.max_rounds || t.outcome.round != t.config.max_rounds)
    return fail(t.outcome.round, "robber win reported before the cutoff");
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Robbers

Vertex robber_greedy_far(const Graph& g, std::span<const Vertex> cops, Vertex robber) {
  const auto dist = bfs_distances(g, VertexSet(g.vertex_count(), cops));
  Vertex best = -1;
  for (Vertex option : closed_neighborhood(g, robber))
    if (best < 0 || dist[option] > dist[best]) best = option;
  return best;
}

Vertex robber_random(const Graph& g, Vertex robber, Rng& rng) {
  const auto options = closed_neighborhood(g, robber);
  return options[rng.below(options.size())];
}

Vertex GreedyFarRobber::place(const Graph& g, std::span<const Vertex> cops, std::uint64_t) {
  const auto dist = bfs_distances(g, VertexSet(g.vertex_count(), cops));
  return static_cast<Vertex>(std::max_element(dist.begin(), dist.end()) - dist.begin());
}

Vertex GreedyFarRobber::move(const RobberView& view) {
  return robber_greedy_far(view.graph, view.cops, view.robber);
}

Vertex RandomRobber::place(const Graph& g, std::span<const Vertex> cops, std::uint64_t seed) {
  rng_ = Rng(seed);
  std::vector<Vertex> free;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!occupied(cops, v)) free.push_back(v);
  if (free.empty()) return static_cast<Vertex>(rng_.below(g.vertex_count()));
  return free[rng_.below(free.size())];
}

Vertex RandomRobber::move(const RobberView& view) { return robber_random(view.graph, view.robber, rng_); }

Vertex StationaryRobber::place(const Graph& g, std::span<const Vertex> cops, std::uint64_t) {
  if (start_) return *start_;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!occupied(cops, v)) return v;
  return 0;
}

Vertex ScriptedRobber::place(const Graph&, std::span<const Vertex>, std::uint64_t) {
  if (script_.empty()) throw std::invalid_argument("ScriptedRobber: empty script");
  next_ = 1;
  return script_.front();
}

Vertex ScriptedRobber::move(const RobberView& view) {
  if (next_ < script_.size()) return script_[next_++];
  return view.robber;
}

// ---------------------------------------------------------------------------
// Cops

std::vector<Vertex> ChaseCops::place(const Graph& g, int cop_count, std::uint64_t) {
  if (!g.contains(home_)) throw std::invalid_argument("ChaseCops: home outside the graph");
  return std::vector<Vertex>(cop_count, home_);
}

std::vector<Vertex> ChaseCops::move(const CopView& view) {
  std::vector<Vertex> next(view.cops.begin(), view.cops.end());
  if (!view.robber) return next;
  const auto dist = bfs_distances(view.graph, *view.robber);
  for (Vertex& c : next) {
    for (Vertex u : view.graph.neighbors(c)) {
      if (dist[u] == dist[c] - 1) {
        c = u;
        break;
      }
    }
  }
  return next;
}

// ---------------------------------------------------------------------------
// Adversary

namespace {

struct NodeKey {
  std::uint64_t fingerprint;
  int round;
  Vertex robber;
  std::vector<Vertex> cops;
  friend bool operator==(const NodeKey&, const NodeKey&) = default;
};

struct NodeKeyHash {
  std::size_t operator()(const NodeKey& k) const {
    std::uint64_t h = splitmix64(k.fingerprint ^ (static_cast<std::uint64_t>(k.round) << 32) ^
                                 static_cast<std::uint64_t>(k.robber));
    for (Vertex c : k.cops) h = splitmix64(h ^ static_cast<std::uint64_t>(c));
    return static_cast<std::size_t>(h);
  }
};

struct NodeValue {
  int value;
  Vertex best;  // robber reply; -1 when the cops' half-move captures
};

class Adversary {
 public:
  Adversary(const Graph& g, const GameConfig& cfg, int depth, const SearchVisitor* visitor)
      : g_(g), cfg_(cfg), depth_(depth), visitor_(visitor) {}

  // Value of the position at the start of `round`: capture round, or depth + 1.
  int survive(const CopStrategy& team, const std::vector<Vertex>& cops, Vertex robber, int round) {
    NodeKey key{team.fingerprint(), round, robber, cops};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.value;
    if (visitor_ && visitor_->on_robber_move) visitor_->on_robber_move(round - 1, cops, robber, team);
    if (round > depth_) {
      memo_.emplace(std::move(key), NodeValue{depth_ + 1, -1});
      return depth_ + 1;
    }
    auto [after, next] = cop_move(team, cops, robber, round);
    if (occupied(next, robber)) {
      memo_.emplace(std::move(key), NodeValue{round, -1});
      return round;
    }
    int best_value = -1;
    Vertex best = -1;
    for (Vertex option : closed_neighborhood(g_, robber)) {
      const int value = occupied(next, option) ? round : survive(*after, next, option, round + 1);
      if (value > best_value) {
        best_value = value;
        best = option;
      }
    }
    memo_.emplace(std::move(key), NodeValue{best_value, best});
    return best_value;
  }

  std::pair<std::unique_ptr<CopStrategy>, std::vector<Vertex>> cop_move(const CopStrategy& team,
                                                                         const std::vector<Vertex>& cops,
                                                                         Vertex robber, int round) {
    auto first = team.clone();
    auto second = team.clone();
    const CopView view{g_, round, cops, cfg_.robber_visible ? std::optional<Vertex>(robber) : std::nullopt};
    std::vector<Vertex> next = first->move(view);
    if (next != second->move(view) || first->fingerprint() != second->fingerprint())
      throw StrategyFault("cops", round, "nondeterministic strategy: same input, different output");
    check_cop_move(g_, cops, next, round);
    if (visitor_ && visitor_->on_cop_move) visitor_->on_cop_move(round, cops, next, robber, *first);
    return {std::move(first), std::move(next)};
  }

  const NodeValue& lookup(const CopStrategy& team, const std::vector<Vertex>& cops, Vertex robber, int round) {
    return memo_.at(NodeKey{team.fingerprint(), round, robber, cops});
  }

  std::size_t size() const { return memo_.size(); }
  void silence() { visitor_ = nullptr; }

 private:
  const Graph& g_;
  const GameConfig& cfg_;
  int depth_;
  const SearchVisitor* visitor_;
  std::unordered_map<NodeKey, NodeValue, NodeKeyHash> memo_;
};

}  // namespace

AdversaryResult adversarial_robber_search(const Graph& g, const CopStrategy& cops, const GameConfig& cfg,
                                          int depth, const SearchVisitor* visitor) {
  validate(cfg);
  if (depth < 1 || depth > cfg.max_rounds)
    throw std::invalid_argument("adversarial_robber_search: depth must lie in [1, max_rounds]");
  if (!is_connected(g)) throw std::invalid_argument("adversarial_robber_search: graph must be connected");

  auto root = cops.clone();
  const std::vector<Vertex> placement = root->place(g, cfg.cop_count, derive_seed(cfg.seed, "cops"));
  if (placement != cops.clone()->place(g, cfg.cop_count, derive_seed(cfg.seed, "cops")))
    throw StrategyFault("cops", 0, "nondeterministic placement");
  if (static_cast<int>(placement.size()) != cfg.cop_count)
    throw StrategyFault("cops", 0, "placed " + std::to_string(placement.size()) + " cops");
  for (Vertex c : placement)
    if (!g.contains(c)) throw StrategyFault("cops", 0, "placement outside the graph");

  Adversary search(g, cfg, depth, visitor);
  int best_value = -1;
  Vertex best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int value = occupied(placement, v) ? 0 : search.survive(*root, placement, v, 1);
    if (value > best_value) {
      best_value = value;
      best = v;
    }
  }

  // Walk the memo along the chosen line to recover the robber's script.
  search.silence();
  std::vector<Vertex> script{best};
  if (!occupied(placement, best)) {
    std::unique_ptr<CopStrategy> team = root->clone();
    std::vector<Vertex> cop_pos = placement;
    Vertex rob = best;
    for (int round = 1; round <= depth; ++round) {
      const NodeValue& node = search.lookup(*team, cop_pos, rob, round);
      if (node.best < 0) break;
      auto [after, next] = search.cop_move(*team, cop_pos, rob, round);
      script.push_back(node.best);
      if (occupied(next, node.best)) break;
      team = std::move(after);
      cop_pos = std::move(next);
      rob = node.best;
    }
  }

  GameConfig replay_cfg = cfg;
  replay_cfg.max_rounds = depth;
  auto replay_team = cops.clone();
  ScriptedRobber adversary(script, "adversary");
  AdversaryResult result;
  result.worst = play(g, *replay_team, adversary, replay_cfg);
  result.survival = best_value;
  result.all_caught = best_value <= depth;
  result.states = search.size();
  const int replayed = result.worst.outcome.caught ? result.worst.outcome.round : depth + 1;
  if (replayed != best_value)
    throw std::logic_error("adversarial_robber_search: replay disagrees with search value");
  return result;
}

}  // namespace pursuit
