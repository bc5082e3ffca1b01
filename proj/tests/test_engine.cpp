#include <numeric>

#include "doctest.h"
#include "pursuit/engine.hpp"
#include "pursuit/generators.hpp"

using namespace pursuit;

namespace {

/// Moves every cop to a fixed list of targets, one step per round.
class FixedCops : public CopStrategy {
 public:
  FixedCops(std::vector<Vertex> start, std::vector<std::vector<Vertex>> moves)
      : start_(std::move(start)), moves_(std::move(moves)) {}
  std::string name() const override { return "fixed"; }
  std::vector<Vertex> place(const Graph&, int, std::uint64_t) override { return start_; }
  std::vector<Vertex> move(const CopView& view) override {
    if (step_ < moves_.size()) return moves_[step_++];
    return {view.cops.begin(), view.cops.end()};
  }
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<FixedCops>(*this); }
  std::uint64_t fingerprint() const override { return step_; }

 private:
  std::vector<Vertex> start_;
  std::vector<std::vector<Vertex>> moves_;
  std::size_t step_ = 0;
};

/// Answers differently on every call while reporting the same fingerprint.
class FlakyCops : public CopStrategy {
 public:
  std::string name() const override { return "flaky"; }
  std::vector<Vertex> place(const Graph&, int, std::uint64_t) override { return {0}; }
  std::vector<Vertex> move(const CopView& view) override {
    static int calls = 0;
    ++calls;
    return {calls % 2 == 0 ? view.cops[0] : view.graph.neighbors(view.cops[0])[0]};
  }
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<FlakyCops>(*this); }
  std::uint64_t fingerprint() const override { return 0; }
};

class TeleportCops : public ChaseCops {
 public:
  std::vector<Vertex> move(const CopView& view) override {
    return std::vector<Vertex>(view.cops.size(), view.graph.vertex_count() - 1);
  }
};

}  // namespace

TEST_CASE("P2: cop steps onto the forced robber") {
  const Graph p2 = gen::path(2);
  FixedCops cops({0}, {{1}});
  StationaryRobber robber;
  GameConfig cfg;
  const Transcript t = play(p2, cops, robber, cfg);
  CHECK(t.initial_robber == 1);
  CHECK(t.outcome == Outcome{true, 1, HalfMove::Cops});
  CHECK_FALSE(validate_transcript(p2, t).has_value());
}

TEST_CASE("C4: one chasing cop never catches a distance-maximizing robber") {
  const Graph c4 = gen::cycle(4);
  ChaseCops cops;
  GreedyFarRobber robber;
  GameConfig cfg;
  cfg.max_rounds = 50;
  const Transcript t = play(c4, cops, robber, cfg);
  CHECK_FALSE(t.outcome.caught);
  CHECK(t.rounds.size() == 50);
  CHECK_FALSE(validate_transcript(c4, t).has_value());
}

TEST_CASE("cops on every vertex capture at placement") {
  const Graph pet = gen::petersen();
  std::vector<Vertex> all(10);
  std::iota(all.begin(), all.end(), 0);
  FixedCops cops(all, {});
  GreedyFarRobber robber;
  GameConfig cfg;
  cfg.cop_count = 10;
  const Transcript t = play(pet, cops, robber, cfg);
  CHECK(t.outcome == Outcome{true, 0, HalfMove::Placement});
  CHECK_FALSE(validate_transcript(pet, t).has_value());
}

TEST_CASE("illegal moves and disconnected graphs") {
  TeleportCops cops;
  GreedyFarRobber robber;
  GameConfig cfg;
  try {
    play(gen::path(5), cops, robber, cfg);
    FAIL("expected a fault");
  } catch (const StrategyFault& e) {
    CHECK(e.agent() == "cops");
    CHECK(e.round() == 1);
  }
  ChaseCops chase;
  CHECK_THROWS_AS(play(Graph::from_edges(3, std::vector<Edge>{{0, 1}}), chase, robber, cfg),
                  std::invalid_argument);
  cfg.cop_count = 0;
  CHECK_THROWS_AS(play(gen::path(3), chase, robber, cfg), std::invalid_argument);
}

TEST_CASE("baseline robbers") {
  const Graph p5 = gen::path(5);
  const std::vector<Vertex> cop{0};
  CHECK(robber_greedy_far(p5, cop, 2) == 3);
  const std::vector<Vertex> flank{0, 4};
  CHECK(robber_greedy_far(p5, flank, 2) == 2);
  // K3, cop at 0, robber at 2: vertices 1 and 2 tie at distance 1, lowest id wins
  CHECK(robber_greedy_far(gen::complete(3), cop, 2) == 1);
  const Graph c6 = gen::cycle(6);

  Rng a(11), b(11);
  for (int i = 0; i < 20; ++i) CHECK(robber_random(c6, i % 6, a) == robber_random(c6, i % 6, b));
}

TEST_CASE("replay is byte-identical and legal") {
  const Graph g = gen::random_connected(15, 0.15, 3);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    GameConfig cfg;
    cfg.cop_count = 2;
    cfg.max_rounds = 40;
    cfg.seed = seed;
    ChaseCops c1, c2;
    RandomRobber r1, r2;
    const Transcript t1 = play(g, c1, r1, cfg);
    const Transcript t2 = play(g, c2, r2, cfg);
    CHECK(t1.rounds == t2.rounds);
    CHECK(t1.outcome == t2.outcome);
    CHECK_FALSE(validate_transcript(g, t1).has_value());
  }
}

TEST_CASE("validator catches tampering") {
  const Graph c4 = gen::cycle(4);
  ChaseCops cops;
  GreedyFarRobber robber;
  GameConfig cfg;
  cfg.max_rounds = 5;
  Transcript t = play(c4, cops, robber, cfg);
  Transcript jump = t;
  jump.rounds[2].robber = (*jump.rounds[1].robber + 2) % 4;
  CHECK(validate_transcript(c4, jump).has_value());
  Transcript fake = t;
  fake.outcome = {true, 5, HalfMove::Robber};
  CHECK(validate_transcript(c4, fake).has_value());
  Transcript short_game = t;
  short_game.rounds.pop_back();
  CHECK(validate_transcript(c4, short_game).has_value());
}

TEST_CASE("adversarial search") {
  SUBCASE("P3 with a central cop: every line caught in round 1") {
    ChaseCops cops(1);
    GameConfig cfg;
    cfg.max_rounds = 10;
    const auto res = adversarial_robber_search(gen::path(3), cops, cfg, 10);
    CHECK(res.all_caught);
    CHECK(res.survival == 1);
  }
  SUBCASE("C4 with one chasing cop: robber survives") {
    ChaseCops cops;
    GameConfig cfg;
    cfg.max_rounds = 30;
    const auto res = adversarial_robber_search(gen::cycle(4), cops, cfg, 30);
    CHECK_FALSE(res.all_caught);
    CHECK(res.survival == 31);
    CHECK_FALSE(res.worst.outcome.caught);
    CHECK_FALSE(validate_transcript(gen::cycle(4), res.worst).has_value());
  }
  SUBCASE("adversary dominates fixed robbers") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
      const Graph g = gen::random_connected(9, 0.2, seed);
      ChaseCops cops;
      GameConfig cfg;
      cfg.max_rounds = 25;
      cfg.seed = seed;
      const auto res = adversarial_robber_search(g, cops, cfg, 25);
      ChaseCops c1, c2;
      GreedyFarRobber greedy;
      RandomRobber random;
      for (const Transcript& t : {play(g, c1, greedy, cfg), play(g, c2, random, cfg)}) {
        const int survived = t.outcome.caught ? t.outcome.round : 26;
        CHECK(res.survival >= survived);
      }
    }
  }
  SUBCASE("nondeterminism is a fault") {
    FlakyCops cops;
    GameConfig cfg;
    cfg.max_rounds = 5;
    CHECK_THROWS_AS(adversarial_robber_search(gen::path(4), cops, cfg, 5), StrategyFault);
  }
  SUBCASE("visitor sees each node once") {
    ChaseCops cops;
    GameConfig cfg;
    cfg.max_rounds = 6;
    int cop_events = 0;
    int robber_events = 0;
    SearchVisitor visitor;
    visitor.on_cop_move = [&](int, auto, auto, Vertex, const CopStrategy&) { ++cop_events; };
    visitor.on_robber_move = [&](int, auto, Vertex, const CopStrategy&) { ++robber_events; };
    const auto res = adversarial_robber_search(gen::cycle(5), cops, cfg, 6, &visitor);
    CHECK(robber_events == static_cast<int>(res.states));
    CHECK(cop_events <= robber_events);
  }
}
