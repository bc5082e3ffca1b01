#include <algorithm>
#include <set>

#include "doctest.h"
#include "pursuit/generators.hpp"
#include "pursuit/meyniel.hpp"

using namespace pursuit;

namespace {

std::shared_ptr<const RecursionTree> tree_of(const Graph& g, MeynielParams params = {}) {
  return std::make_shared<const RecursionTree>(build_recursion(g, params));
}

// Slots whose cop ever leaves its starting vertex.
int moved_slots(const Transcript& t) {
  int moved = 0;
  for (std::size_t j = 0; j < t.initial_cops.size(); ++j)
    for (const RoundRecord& rec : t.rounds)
      if (rec.cops[j] != t.initial_cops[j]) {
        ++moved;
        break;
      }
  return moved;
}

void check_tree_shape(const Graph& g, const RecursionTree& tree, int threshold) {
  REQUIRE_FALSE(tree.nodes.empty());
  CHECK(tree.nodes[0].domain.size() == g.vertex_count());
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const RecursionNode& node = tree.nodes[i];
    if (node.leaf) {
      CHECK(node.diameter <= threshold);
      CHECK(node.children.empty());
      continue;
    }
    CHECK(node.diameter > threshold);
    CHECK(static_cast<int>(node.path.size()) == node.diameter + 1);
    const InducedSubgraph h = induced_subgraph(g, node.domain);
    std::vector<Vertex> local;
    for (Vertex v : node.path) local.push_back(h.to_new[v]);
    CHECK(is_geodesic(h.graph, local));
    for (Vertex v : node.path) CHECK(node.domain.contains(v));
    int covered = static_cast<int>(node.path.size());
    std::set<Vertex> seen(node.path.begin(), node.path.end());
    for (int c : node.children) {
      const RecursionNode& child = tree.nodes[c];
      CHECK(c > static_cast<int>(i));
      CHECK(child.depth == node.depth + 1);
      CHECK(child.domain.size() < node.domain.size());
      for (Vertex v : child.domain.members()) {
        CHECK(node.domain.contains(v));
        CHECK(seen.insert(v).second);  // disjoint from the path and from siblings
      }
      CHECK(is_connected(induced_subgraph(g, child.domain).graph));
      covered += child.domain.size();
    }
    CHECK(covered == node.domain.size());
  }
}

}  // namespace

TEST_CASE("small diameter root is a single leaf") {
  const Graph k5 = gen::complete(5);
  const auto tree = tree_of(k5);
  REQUIRE(tree->nodes.size() == 1);
  CHECK(tree->nodes[0].leaf);
  CHECK(tree->guard_slots == 0);
  CHECK(tree->team_size() == tree->nodes[0].family.cop_count());
  GreedyFarRobber robber;
  const MeynielResult res = run_meyniel(k5, tree, robber);
  CHECK(res.status == MeynielStatus::Caught);
  CHECK(res.guards == 0);
  CHECK(res.cops_used == res.family_cops);
}

TEST_CASE("path is deleted by one guard") {
  const Graph p30 = gen::path(30);
  const auto tree = tree_of(p30);
  REQUIRE(tree->nodes.size() == 1);
  CHECK_FALSE(tree->nodes[0].leaf);
  CHECK(tree->nodes[0].path.size() == 30);
  CHECK(tree->guard_slots == 1);
  std::size_t states = 0;
  const MeynielResult res = run_meyniel_adversary(p30, tree, &states);
  CHECK(res.status == MeynielStatus::Caught);
  CHECK(res.guards == 1);
  CHECK(res.cops_used == 1);
  CHECK(states > 0);
  CHECK_FALSE(validate_transcript(p30, res.transcript));
}

TEST_CASE("cycle recursion") {
  const Graph c20 = gen::cycle(20);
  const auto tree = tree_of(c20);
  check_tree_shape(c20, *tree, 2);
  CHECK(tree->nodes[0].path.size() == 11);
  REQUIRE(tree->nodes[0].children.size() == 1);
  CHECK(tree->nodes[tree->nodes[0].children[0]].domain.size() == 9);
  const MeynielResult res = run_meyniel_adversary(c20, tree);
  CHECK(res.status == MeynielStatus::Caught);
  CHECK(res.cops_used == res.guards + res.family_cops);
  CHECK(res.cops_used <= res.team_size);
  CHECK(moved_slots(res.transcript) <= res.cops_used);
  CHECK(res.transcript.outcome.round <= tree->round_bound);
}

TEST_CASE("threshold controls the depth") {
  const Graph c20 = gen::cycle(20);
  MeynielParams wide;
  wide.diameter_threshold = 10;
  const auto tree = tree_of(c20, wide);
  CHECK(tree->nodes.size() == 1);
  CHECK(tree->nodes[0].leaf);
  MeynielParams bad;
  bad.diameter_threshold = 0;
  CHECK_THROWS_AS(build_recursion(c20, bad), std::invalid_argument);
  CHECK_THROWS_AS(build_recursion(Graph::from_edges(3, std::vector<Edge>{{0, 1}}), {}), std::invalid_argument);
}

TEST_CASE("random graphs against the exhaustive adversary") {
  int complete = 0;
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const int n = 8 + static_cast<int>(seed % 8);
    const Graph g = seed % 3 == 0 ? gen::random_tree(n, seed) : gen::random_connected(n, 0.08, seed);
    MeynielParams params;
    params.seed = seed;
    const auto tree = tree_of(g, params);
    check_tree_shape(g, *tree, params.diameter_threshold);
    if (!tree->complete) continue;
    ++complete;
    const MeynielResult res = run_meyniel_adversary(g, tree);
    CAPTURE(seed);
    CHECK(res.status == MeynielStatus::Caught);
    CHECK(res.cops_used == res.guards + res.family_cops);
    CHECK(res.cops_used <= res.team_size);
    CHECK(moved_slots(res.transcript) <= res.cops_used);
    CHECK_FALSE(validate_transcript(g, res.transcript));
  }
  CHECK(complete >= 8);
}

TEST_CASE("baseline robbers on larger graphs") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Graph g = gen::random_connected(36, 0.05, seed);
    MeynielParams params;
    params.seed = seed;
    const auto tree = tree_of(g, params);
    if (!tree->complete) continue;
    GreedyFarRobber greedy;
    const MeynielResult a = run_meyniel(g, tree, greedy);
    CHECK(a.status == MeynielStatus::Caught);
    RandomRobber random;
    const MeynielResult b = run_meyniel(g, tree, random);
    CHECK(b.status == MeynielStatus::Caught);
    CHECK(b.cops_used == b.guards + b.family_cops);
  }
}

TEST_CASE("deterministic") {
  const Graph g = gen::random_connected(18, 0.06, 3);
  const auto a = run_meyniel_adversary(g, tree_of(g));
  const auto b = run_meyniel_adversary(g, tree_of(g));
  CHECK(a.transcript.rounds == b.transcript.rounds);
  CHECK(a.transcript.initial_robber == b.transcript.initial_robber);
}
