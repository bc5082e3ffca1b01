#include <memory>

#include "doctest.h"
#include "oracles.hpp"
#include "pursuit/exact_solver.hpp"
#include "pursuit/generators.hpp"

using namespace pursuit;

TEST_CASE("one cop wins on trees") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph t = gen::random_tree(3 + static_cast<int>(seed), seed);
    CHECK(is_k_copwin(t, 1).cops_win);
    CHECK(is_dismantlable(t));
  }
  CHECK(cop_number(gen::path(7), 3) == 1);
}

TEST_CASE("cycles and the Petersen graph") {
  CHECK_FALSE(is_k_copwin(gen::cycle(4), 1).cops_win);
  CHECK(is_k_copwin(gen::cycle(4), 2).cops_win);
  CHECK_FALSE(oracle::copwin_bruteforce(gen::cycle(4), 1));
  CHECK(oracle::copwin_bruteforce(gen::cycle(4), 2));
  CHECK(cop_number(gen::cycle(5), 3) == 2);

  const Graph pet = gen::petersen();
  CHECK_FALSE(is_k_copwin(pet, 2).cops_win);
  CHECK(is_k_copwin(pet, 3).cops_win);
  CHECK_FALSE(oracle::copwin_bruteforce(pet, 2));
  CHECK(oracle::copwin_bruteforce(pet, 3));
  CHECK(cop_number(pet, 2) == std::nullopt);
}

TEST_CASE("solver agrees with the unreduced brute force on random graphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = gen::random_connected(5 + static_cast<int>(seed % 4), 0.3, seed);
    for (int k = 1; k <= 2; ++k) CHECK(is_k_copwin(g, k).cops_win == oracle::copwin_bruteforce(g, k));
  }
}

TEST_CASE("monotonicity and universal vertices") {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = gen::random_connected(7, 0.2, seed);
    bool prev = false;
    for (int k = 1; k <= 3; ++k) {
      const bool win = is_k_copwin(g, k).cops_win;
      if (prev) CHECK(win);
      prev = win;
    }
    // add a universal vertex
    std::vector<Edge> edges = g.edges();
    for (Vertex v = 0; v < 7; ++v) edges.emplace_back(v, 7);
    CHECK(cop_number(Graph::from_edges(8, edges), 3) == 1);
  }
  CHECK(cop_number(gen::complete(6), 2) == 1);
}

TEST_CASE("dismantling") {
  CHECK(is_dismantlable(gen::path(6)));
  CHECK_FALSE(is_dismantlable(gen::cycle(4)));
  // grids contain induced 4-cycles and need two cops
  CHECK_FALSE(is_dismantlable(gen::grid(3, 3)));
  CHECK(cop_number(gen::grid(3, 3), 2) == 2);
  // a fan: path 1..5 plus a hub 0
  std::vector<Edge> fan{{1, 2}, {2, 3}, {3, 4}, {4, 5}};
  for (Vertex v = 1; v <= 5; ++v) fan.emplace_back(0, v);
  const Dismantling d = dismantle(Graph::from_edges(6, fan));
  CHECK(d.dismantlable);
  CHECK(d.order.size() == 6);
  CHECK(is_dismantlable(Graph::from_edges(1, std::vector<Edge>{})));
}

TEST_CASE("budget is an explicit error") {
  SolverOptions tiny;
  tiny.max_states = 100;
  CHECK_THROWS_AS(is_k_copwin(gen::petersen(), 3, tiny), ResourceLimitError);
  CHECK_THROWS_AS(cop_number(gen::petersen(), 3, tiny), ResourceLimitError);
  CHECK_THROWS_AS(is_k_copwin(Graph::from_edges(2, std::vector<Edge>{}), 1), std::invalid_argument);
}

TEST_CASE("extracted strategy captures against every robber line") {
  struct Case {
    Graph g;
    int k;
  };
  const std::vector<Case> cases{{gen::cycle(4), 2}, {gen::cycle(7), 2}, {gen::petersen(), 3},
                                {gen::grid(3, 3), 2}, {gen::random_tree(9, 4), 1}};
  for (const auto& c : cases) {
    auto table = std::make_shared<CopWinTable>(c.g, c.k);
    REQUIRE(table->cops_win());
    const SolverCops cops(table);
    GameConfig cfg;
    cfg.cop_count = c.k;
    std::uint64_t multisets = 1;
    for (int i = 0; i < c.k; ++i) multisets = multisets * (c.g.vertex_count() + i) / (i + 1);
    cfg.max_rounds = static_cast<int>(c.g.vertex_count() * multisets);
    const int depth = std::min<int>(cfg.max_rounds, static_cast<int>(table->capture_bound()) + 2);
    const auto result = adversarial_robber_search(c.g, cops, cfg, depth);
    CHECK(result.all_caught);
    CHECK(result.survival == static_cast<int>(table->capture_bound()));
    CHECK_FALSE(validate_transcript(c.g, result.worst).has_value());
  }
}
