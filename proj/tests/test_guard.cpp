#include <cstdlib>

#include "doctest.h"
#include "oracles.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/guard.hpp"

using namespace pursuit;

TEST_CASE("shadow") {
  const Graph c6 = gen::cycle(6);
  const std::vector<Vertex> arc{0, 1, 2, 3};
  CHECK(shadow(c6, arc, 5) == 1);
  CHECK(shadow(c6, arc, 4) == 2);
  for (int j = 0; j <= 3; ++j) CHECK(shadow(c6, arc, arc[j]) == j);
  const std::vector<Vertex> short_arc{0, 1};
  CHECK(shadow(c6, short_arc, 3) == 1);  // clamped
  const std::vector<Vertex> detour{0, 1, 2, 3, 4};
  CHECK_THROWS_AS(shadow(c6, detour, 0), std::invalid_argument);
  const std::vector<Vertex> broken{0, 2};
  CHECK_THROWS_AS(shadow(c6, broken, 0), std::invalid_argument);
}

TEST_CASE("shadow matches Floyd-Warshall and is 1-Lipschitz") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen::random_connected(14, 0.15, seed);
    const auto fw = oracle::floyd_warshall(g);
    const auto [a, b] = diameter_pair(g);
    const auto path = shortest_path(g, a, b);
    const int L = static_cast<int>(path.size()) - 1;
    for (Vertex r = 0; r < g.vertex_count(); ++r) {
      CHECK(shadow(g, path, r) == std::min(fw[a][r], L));
      for (Vertex u : g.neighbors(r)) CHECK(std::abs(shadow(g, path, r) - shadow(g, path, u)) <= 1);
    }
  }
}

TEST_CASE("settle bound") {
  const Graph c6 = gen::cycle(6);
  CHECK(settle_bound(c6, std::vector<Vertex>{2}) == 3);
  CHECK(settle_bound(c6, std::vector<Vertex>{0, 1, 2, 3}) == 6);
  CHECK(settle_bound(gen::complete(5), std::vector<Vertex>{1, 3}) == 2);
}

TEST_CASE("stationary robber: the guard settles and stays settled") {
  const Graph g = gen::grid(4, 3);
  const std::vector<Vertex> path{0, 1, 2, 3};
  for (Vertex r = 4; r < 12; ++r) {
    GuardCop cop(g, path, 11);
    StationaryRobber robber(r);
    GameConfig cfg;
    cfg.max_rounds = cop.settle_bound() + 3;
    const Transcript t = play(g, cop, robber, cfg);
    if (!t.outcome.caught) CHECK(cop.guard().phase() == GuardPhase::Guarding);
  }
}

TEST_CASE("guard captures a robber stepping onto the path") {
  const Graph c6 = gen::cycle(6);
  GuardCop cop(c6, {0, 1, 2, 3});
  // robber starts at 4, waits, then steps onto 3
  ScriptedRobber robber({4, 4, 4, 4, 3});
  GameConfig cfg;
  cfg.max_rounds = 10;
  const Transcript t = play(c6, cop, robber, cfg);
  CHECK(t.outcome.caught);
  CHECK(t.outcome.round <= 5);
  CHECK_FALSE(validate_transcript(c6, t).has_value());
}

TEST_CASE("C6: after settling the robber is confined to {4, 5}") {
  const Graph c6 = gen::cycle(6);
  const GuardCop cop(c6, {0, 1, 2, 3});
  const int settle = cop.settle_bound();
  GameConfig cfg;
  cfg.max_rounds = settle + 6;
  int outside = 0;
  SearchVisitor visitor;
  // positions that survive a cop half-move after settling
  visitor.on_cop_move = [&](int round, auto, auto after, Vertex robber, const CopStrategy&) {
    const bool caught = after[0] == robber;
    if (round > settle && !caught && robber != 4 && robber != 5) ++outside;
  };
  adversarial_robber_search(c6, cop, cfg, cfg.max_rounds, &visitor);
  CHECK(outside == 0);
}

TEST_CASE("guard soundness against the exhaustive adversary") {
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Graph g = gen::random_connected(10 + static_cast<int>(seed), 0.12, seed);
    const auto [a, b] = diameter_pair(g);
    for (const auto& path : {shortest_path(g, a, b), shortest_path(g, b, a)}) {
      const GuardAudit audit = audit_guard(g, path);
      CHECK(audit.violations == 0);
      CHECK(audit.late_settles == 0);
      ++checked;
    }
  }
  CHECK(checked == 24);
  const GuardAudit pet = audit_guard(gen::petersen(), {0, 1, 2});
  CHECK(pet.violations == 0);
}

TEST_CASE("restricted domain and visibility") {
  // Path 0-1-2-3-4 with a shortcut 0-4: within H = {0,1,2,3}, 0..3 is a geodesic.
  const Graph g = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK_THROWS_AS(PathGuard(g, {0, 1, 2, 3}), std::invalid_argument);
  PathGuard guard(g, {0, 1, 2, 3}, VertexSet(5, {0, 1, 2, 3}));
  CHECK(guard.shadow(4) == std::nullopt);
  CHECK(guard.shadow(3) == 3);
  CHECK_THROWS_AS(guard.step(0, std::nullopt), std::invalid_argument);
}
