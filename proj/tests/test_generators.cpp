#include "doctest.h"
#include "pursuit/generators.hpp"

using namespace pursuit;

namespace {

bool bipartite(const Graph& g) {
  std::vector<int> color(g.vertex_count(), -1);
  for (Vertex s = 0; s < g.vertex_count(); ++s) {
    if (color[s] >= 0) continue;
    const auto dist = bfs_distances(g, s);
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      if (dist[v] != kUnreachable) color[v] = dist[v] % 2;
  }
  for (auto [u, v] : g.edges())
    if (color[u] == color[v]) return false;
  return true;
}

bool regular(const Graph& g, int d) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

}  // namespace

TEST_CASE("standard families") {
  const Graph c4 = gen::cycle(4);
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(diameter(c4) == 2);

  const Graph pet = gen::petersen();
  CHECK(pet.vertex_count() == 10);
  CHECK(pet.edge_count() == 15);
  CHECK(regular(pet, 3));

  CHECK(diameter(gen::grid(3, 3)) == 4);
  CHECK(gen::grid(3, 2).adjacent(1, 4));
  const Graph q3 = gen::hypercube(3);
  CHECK(regular(q3, 3));
  CHECK(diameter(q3) == 3);
  CHECK(gen::star(5).degree(0) == 5);

  CHECK_THROWS_AS(gen::path(0), std::invalid_argument);
  CHECK_THROWS_AS(gen::cycle(2), std::invalid_argument);
  CHECK_THROWS_AS(gen::grid(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(gen::hypercube(0), std::invalid_argument);
}

TEST_CASE("gnp") {
  CHECK(gen::gnp(9, 0.0, 1).edge_count() == 0);
  CHECK(gen::gnp(9, 1.0, 1) == gen::complete(9));
  CHECK(gen::gnp(20, 0.3, 7) == gen::gnp(20, 0.3, 7));
  CHECK_FALSE(gen::gnp(20, 0.3, 7) == gen::gnp(20, 0.3, 8));
  CHECK_THROWS_AS(gen::gnp(5, 1.5, 0), std::invalid_argument);
}

TEST_CASE("random trees and connected graphs") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const int n = 1 + static_cast<int>(seed);
    const Graph t = gen::random_tree(n, seed);
    CHECK(t.vertex_count() == n);
    CHECK(static_cast<int>(t.edge_count()) == n - 1);
    CHECK(is_connected(t));
    CHECK(is_connected(gen::random_connected(n, 0.2, seed)));
    const Graph hg = gen::random_high_girth(n, 5, seed);
    CHECK(is_connected(hg));
    const auto gi = girth(hg);
    CHECK((!gi || *gi >= 5));
  }
}

TEST_CASE("projective plane incidence graphs") {
  const Graph heawood = gen::projective_incidence(2);
  CHECK(heawood.vertex_count() == 14);
  CHECK(heawood.edge_count() == 21);
  CHECK(regular(heawood, 3));
  CHECK(girth(heawood) == 6);
  CHECK(min_degree(heawood) == 3);
  CHECK(bipartite(heawood));

  // PG(2,3): 13 points and 13 lines, each incident to 4.
  const Graph pg3 = gen::projective_incidence(3);
  CHECK(pg3.vertex_count() == 26);
  CHECK(regular(pg3, 4));
  CHECK(girth(pg3) == 6);
  CHECK(bipartite(pg3));

  const Graph pg5 = gen::projective_incidence(5);
  CHECK(pg5.vertex_count() == 62);
  CHECK(regular(pg5, 6));
  CHECK(girth(pg5) == 6);

  CHECK_THROWS_AS(gen::projective_incidence(4), std::invalid_argument);
  CHECK_THROWS_AS(gen::projective_incidence(1), std::invalid_argument);
  CHECK(gen::is_prime(7));
  CHECK_FALSE(gen::is_prime(9));
}
