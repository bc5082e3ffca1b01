#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/graph.hpp"

using namespace pursuit;

namespace {

Graph two_disjoint_edges() {
  const std::vector<Edge> edges{{0, 1}, {2, 3}};
  return Graph::from_edges(4, edges);
}

}  // namespace

TEST_CASE("construction rejects malformed input") {
  const std::vector<Edge> loop{{1, 1}};
  CHECK_THROWS_AS(Graph::from_edges(3, loop), std::invalid_argument);
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph::from_edges(3, dup), std::invalid_argument);
  const std::vector<Edge> range{{0, 3}};
  CHECK_THROWS_AS(Graph::from_edges(3, range), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_adjacency({{1}, {}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph::from_adjacency({}), std::invalid_argument);
}

TEST_CASE("vertex set algebra") {
  VertexSet a(70, {0, 3, 65});
  VertexSet b(70, {3, 69});
  CHECK(a.size() == 3);
  CHECK((a | b).size() == 4);
  CHECK((a & b) == VertexSet(70, {3}));
  CHECK((a - b).members() == std::vector<Vertex>{0, 65});
  CHECK(VertexSet(70, {3}).is_subset_of(a));
  CHECK_FALSE(b.is_subset_of(a));
  a.erase(65);
  CHECK_FALSE(a.contains(65));
  CHECK(a.size() == 2);
  CHECK_THROWS(a.insert(70));
}

TEST_CASE("bfs distances") {
  const Graph p5 = gen::path(5);
  CHECK(bfs_distances(p5, 0) == std::vector<int>{0, 1, 2, 3, 4});
  const Graph pet = gen::petersen();
  CHECK(bfs_distances(pet, VertexSet::all(10)) == std::vector<int>(10, 0));
  CHECK(bfs_distances(two_disjoint_edges(), 0) ==
        std::vector<int>{0, 1, kUnreachable, kUnreachable});
  CHECK_THROWS_AS(bfs_distances(p5, VertexSet(5)), std::invalid_argument);
}

TEST_CASE("balls") {
  CHECK(ball(gen::path(5), 0, 2) == VertexSet(5, {0, 1, 2}));
  CHECK(ball(gen::cycle(5), 2, 1) == VertexSet(5, {1, 2, 3}));
  const Graph pet = gen::petersen();
  const auto masks = oracle::ball_masks(pet, 2);
  for (Vertex v = 0; v < 10; ++v) {
    CHECK(ball(pet, v, 2).size() == 10);
    CHECK(masks[v] == (std::uint64_t{1} << 10) - 1);
  }
  const VertexSet a(5, {1, 3});
  CHECK(ball(gen::path(5), a, 0) == a);
  CHECK_THROWS_AS(ball(gen::path(5), VertexSet(5), 1), std::invalid_argument);
}

TEST_CASE("shortest paths use lowest-id tie-breaking") {
  CHECK(shortest_path(gen::path(5), 0, 4) == std::vector<Vertex>{0, 1, 2, 3, 4});
  // Both arcs of C6 between 0 and 3 have length 3; 1 < 5 picks the upper arc.
  CHECK(shortest_path(gen::cycle(6), 0, 3) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(shortest_path(gen::cycle(6), 4, 4) == std::vector<Vertex>{4});
  CHECK_THROWS_AS(shortest_path(two_disjoint_edges(), 0, 3), NoPathError);
}

TEST_CASE("diameter, girth, min degree against oracles") {
  CHECK(diameter(gen::cycle(6)) == 3);
  CHECK(diameter(gen::petersen()) == 2);
  CHECK_FALSE(diameter(two_disjoint_edges()).has_value());

  const Graph pet = gen::petersen();
  CHECK(girth(pet) == 5);
  CHECK(oracle::girth_by_edge_removal(pet) == 5);
  CHECK(min_degree(pet) == 3);
  CHECK_FALSE(girth(gen::random_tree(12, 5)).has_value());
  CHECK(girth(gen::complete(4)) == 3);
  CHECK(min_degree(gen::complete(4)) == 3);

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Graph g = gen::random_connected(4 + static_cast<int>(seed % 9), 0.25, seed);
    const auto fw = oracle::floyd_warshall(g);
    int diam = 0;
    for (const auto& row : fw)
      for (int d : row) diam = std::max(diam, d);
    CHECK(diameter(g) == diam);
    CHECK(girth(g) == oracle::girth_by_edge_removal(g));
  }
}

TEST_CASE("vertex deletion and components") {
  const auto split = delete_vertices(gen::path(5), VertexSet(5, {2}));
  CHECK(split.graph.vertex_count() == 4);
  CHECK(components(split.graph).size() == 2);
  CHECK(split.to_old == std::vector<Vertex>{0, 1, 3, 4});
  CHECK(split.to_new[2] == kUnreachable);

  const auto same = delete_vertices(gen::petersen(), VertexSet(10));
  CHECK(same.graph == gen::petersen());
  CHECK(same.to_old == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9});

  const auto rest = delete_vertices(gen::cycle(6), VertexSet(6, {0, 1, 2, 3}));
  CHECK(rest.graph == gen::path(2));
  CHECK(rest.to_old == std::vector<Vertex>{4, 5});

  CHECK_THROWS_AS(delete_vertices(gen::path(3), VertexSet::all(3)), std::invalid_argument);

  CHECK(component_of(gen::petersen(), 4) == VertexSet::all(10));
  const Graph p5_minus = delete_vertices(gen::path(5), VertexSet(5, {2})).graph;
  // old vertex 3 is new vertex 2
  CHECK(component_of(p5_minus, 2) == VertexSet(4, {2, 3}));
  const Graph isolated = Graph::from_edges(3, std::vector<Edge>{{0, 1}});
  CHECK(component_of(isolated, 2) == VertexSet(3, {2}));
}

TEST_CASE("metric invariants on random graphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = gen::gnp(12, 0.2, seed);
    const int n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v) {
      const VertexSet comp = component_of(g, v);
      int ecc = 0;
      for (int d : bfs_distances(g, v)) ecc = std::max(ecc, d);
      CHECK(ball(g, v, ecc).size() == comp.size());
      for (int r = 0; r < 4; ++r) {
        CHECK(ball(g, v, r).is_subset_of(ball(g, v, r + 1)));
        if (r >= 1) CHECK(ball(g, v, r) == ball(g, ball(g, v, 1), r - 1));
      }
      const auto dist = bfs_distances(g, v);
      for (Vertex u = 0; u < n; ++u) {
        if (dist[u] == kUnreachable) {
          CHECK_THROWS_AS(shortest_path(g, v, u), NoPathError);
          continue;
        }
        const auto p = shortest_path(g, v, u);
        CHECK(static_cast<int>(p.size()) - 1 == dist[u]);
        CHECK(is_geodesic(g, p));
        const std::vector<Vertex> prefix(p.begin(), p.begin() + (p.size() + 1) / 2);
        CHECK(is_geodesic(g, prefix));
      }
    }
    // deletion + components partition the survivors
    const auto sub = delete_vertices(g, VertexSet(n, {0, 5}));
    int covered = 0;
    VertexSet seen(sub.graph.vertex_count());
    for (const auto& c : components(sub.graph)) {
      CHECK((seen & c).empty());
      seen |= c;
      covered += c.size();
    }
    CHECK(covered == n - 2);
  }
}

TEST_CASE("edge-list format") {
  std::istringstream ok("# comment\n3 2\n0 1\n# inner\n1 2\n");
  const Graph g = read_edge_list(ok);
  CHECK(g == gen::path(3));

  std::ostringstream out;
  write_edge_list(out, gen::petersen());
  std::istringstream back(out.str());
  CHECK(read_edge_list(back) == gen::petersen());

  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_edge_list(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("3 2\n0 1\n2 1\n") == 3);    // u >= v
  CHECK(line_of("3 2\n0 1\n") == 2);         // missing edge
  CHECK(line_of("3 x\n") == 1);              // bad header
  CHECK(line_of("3 1\n0 1 7\n") == 2);       // trailing token
  CHECK(line_of("3 2\n0 1\n0 1\n") == 3);    // duplicate
  CHECK(line_of("3 1\n0 1\n1 2\n") == 3);    // extra line

  std::ostringstream dot;
  write_dot(dot, gen::path(2));
  CHECK(dot.str() == "graph G {\n  0;\n  1;\n  0 -- 1;\n}\n");
  CHECK(graph_hash(gen::path(4)) != graph_hash(gen::cycle(4)));
}
