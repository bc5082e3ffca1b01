#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "pursuit/graph.hpp"
#include "pursuit/rng.hpp"

namespace pursuit {

/// A strategy made an illegal or inconsistent move.
class StrategyFault : public std::runtime_error {
 public:
  StrategyFault(std::string agent, int round, const std::string& what)
      : std::runtime_error(agent + " at round " + std::to_string(round) + ": " + what),
        agent_(std::move(agent)),
        round_(round) {}
  const std::string& agent() const { return agent_; }
  int round() const { return round_; }

 private:
  std::string agent_;
  int round_;
};

struct GameConfig {
  int cop_count = 1;
  int max_rounds = 100;
  bool robber_visible = true;
  std::uint64_t seed = 0;
};

void validate(const GameConfig& cfg);

/// What the cops see before their half-move of `round` (1-based).
/// `robber` is empty when the robber is invisible.
struct CopView {
  const Graph& graph;
  int round;
  std::span<const Vertex> cops;
  std::optional<Vertex> robber;
};

struct RobberView {
  const Graph& graph;
  int round;
  std::span<const Vertex> cops;  // positions after the cops' half-move
  Vertex robber;
};

/// A cop team. Implementations may keep internal state, but every move must
/// be a function of what the team has observed so far plus randomness derived
/// from the seed handed to place(); clone() must copy that state exactly.
class CopStrategy {
 public:
  virtual ~CopStrategy() = default;
  virtual std::string name() const = 0;
  virtual std::vector<Vertex> place(const Graph& g, int cop_count, std::uint64_t seed) = 0;
  virtual std::vector<Vertex> move(const CopView& view) = 0;
  virtual std::unique_ptr<CopStrategy> clone() const = 0;
  /// Hash of the internal state; equal states must give equal fingerprints.
  virtual std::uint64_t fingerprint() const = 0;
};

class RobberStrategy {
 public:
  virtual ~RobberStrategy() = default;
  virtual std::string name() const = 0;
  virtual Vertex place(const Graph& g, std::span<const Vertex> cops, std::uint64_t seed) = 0;
  virtual Vertex move(const RobberView& view) = 0;
};

enum class HalfMove { Placement, Cops, Robber };

struct Outcome {
  bool caught = false;
  int round = 0;  // capture round, or the cutoff when the robber survives
  HalfMove half = HalfMove::Placement;
  friend bool operator==(const Outcome&, const Outcome&) = default;
};

struct RoundRecord {
  int round = 0;
  std::vector<Vertex> cops;
  std::optional<Vertex> robber;  // empty when caught by the cops' half-move
  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

struct Transcript {
  std::uint64_t graph_hash = 0;
  int vertex_count = 0;
  GameConfig config;
  std::string cop_strategy;
  std::string robber_strategy;
  std::vector<Vertex> initial_cops;
  Vertex initial_robber = 0;
  std::vector<RoundRecord> rounds;
  Outcome outcome;

  /// Robber position at the end of `round` (0 = placement); empty if caught earlier.
  std::optional<Vertex> robber_at(int round) const;
};

Transcript play(const Graph& g, CopStrategy& cops, RobberStrategy& robber, const GameConfig& cfg);

/// Independent legality check; returns a description of the first violation.
std::optional<std::string> validate_transcript(const Graph& g, const Transcript& t);

// ---------------------------------------------------------------------------
// Baseline robbers

/// Move maximizing the distance to the nearest cop; ties to the lowest id.
Vertex robber_greedy_far(const Graph& g, std::span<const Vertex> cops, Vertex robber);
/// Uniform choice among staying and the neighbours.
Vertex robber_random(const Graph& g, Vertex robber, Rng& rng);

class GreedyFarRobber : public RobberStrategy {
 public:
  std::string name() const override { return "greedy-far"; }
  Vertex place(const Graph& g, std::span<const Vertex> cops, std::uint64_t seed) override;
  Vertex move(const RobberView& view) override;
};

class RandomRobber : public RobberStrategy {
 public:
  std::string name() const override { return "random"; }
  Vertex place(const Graph& g, std::span<const Vertex> cops, std::uint64_t seed) override;
  Vertex move(const RobberView& view) override;

 private:
  Rng rng_{0};
};

class StationaryRobber : public RobberStrategy {
 public:
  explicit StationaryRobber(std::optional<Vertex> start = std::nullopt) : start_(start) {}
  std::string name() const override { return "stationary"; }
  Vertex place(const Graph& g, std::span<const Vertex> cops, std::uint64_t seed) override;
  Vertex move(const RobberView& view) override { return view.robber; }

 private:
  std::optional<Vertex> start_;
};

/// Replays a fixed placement and move list; stays put once the script runs out.
class ScriptedRobber : public RobberStrategy {
 public:
  explicit ScriptedRobber(std::vector<Vertex> script, std::string label = "scripted")
      : script_(std::move(script)), label_(std::move(label)) {}
  std::string name() const override { return label_; }
  Vertex place(const Graph& g, std::span<const Vertex> cops, std::uint64_t seed) override;
  Vertex move(const RobberView& view) override;

 private:
  std::vector<Vertex> script_;
  std::string label_;
  std::size_t next_ = 0;
};

// ---------------------------------------------------------------------------
// Baseline cops

/// Every cop steps along a lowest-id geodesic towards the robber; all start at `home`.
class ChaseCops : public CopStrategy {
 public:
  explicit ChaseCops(Vertex home = 0) : home_(home) {}
  std::string name() const override { return "chase"; }
  std::vector<Vertex> place(const Graph& g, int cop_count, std::uint64_t seed) override;
  std::vector<Vertex> move(const CopView& view) override;
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<ChaseCops>(*this); }
  std::uint64_t fingerprint() const override { return 0; }

 private:
  Vertex home_;
};

// ---------------------------------------------------------------------------
// Exhaustive robber adversary

/// Hooks called once per distinct search node. `strategy` is the cop team's
/// state after the half-move being reported.
struct SearchVisitor {
  std::function<void(int round, std::span<const Vertex> cops_before, std::span<const Vertex> cops_after,
                     Vertex robber, const CopStrategy& strategy)>
      on_cop_move;
  std::function<void(int round, std::span<const Vertex> cops, Vertex robber, const CopStrategy& strategy)>
      on_robber_move;
};

struct AdversaryResult {
  Transcript worst;        // longest-surviving robber line (ties: lowest-id moves)
  bool all_caught = false; // every robber line is caught within the depth
  int survival = 0;        // capture round of the worst line, or depth + 1
  std::size_t states = 0;  // distinct search nodes expanded
};

/// Depth-first search over every robber placement and move against a
/// deterministic cop team, memoized on (team fingerprint, positions, round).
/// Throws StrategyFault if the team answers the same input differently.
AdversaryResult adversarial_robber_search(const Graph& g, const CopStrategy& cops, const GameConfig& cfg,
                                          int depth, const SearchVisitor* visitor = nullptr);

}  // namespace pursuit
