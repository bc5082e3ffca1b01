#include "pursuit/generators.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include "pursuit/rng.hpp"

namespace pursuit::gen {

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path: n must be >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, n - 1);
  return Graph::from_edges(n, edges);
}

Graph grid(int width, int height) {
  if (width < 1 || height < 1) throw std::invalid_argument("grid: sides must be >= 1");
  std::vector<Edge> edges;
  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      const Vertex v = y * width + x;
      if (x + 1 < width) edges.emplace_back(v, v + 1);
      if (y + 1 < height) edges.emplace_back(v, v + width);
    }
  }
  return Graph::from_edges(width * height, edges);
}

Graph hypercube(int dimension) {
  if (dimension < 1 || dimension > 20) throw std::invalid_argument("hypercube: dimension in [1, 20]");
  const int n = 1 << dimension;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (int b = 0; b < dimension; ++b)
      if ((v & (1 << b)) == 0) edges.emplace_back(v, v | (1 << b));
  return Graph::from_edges(n, edges);
}

Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    edges.emplace_back(i, i + 5);
  }
  return Graph::from_edges(10, edges);
}

Graph complete(int n) {
  if (n < 1) throw std::invalid_argument("complete: n must be >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph star(int leaves) {
  if (leaves < 1) throw std::invalid_argument("star: needs at least one leaf");
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph gnp(int n, double edge_prob, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("gnp: n must be >= 1");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw std::invalid_argument("gnp: edge probability outside [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.bernoulli(edge_prob)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("random_tree: n must be >= 1");
  if (n <= 2) return path(n);
  Rng rng(seed);
  std::vector<Vertex> code(n - 2);
  for (auto& c : code) c = static_cast<Vertex>(rng.below(n));
  std::vector<int> degree(n, 1);
  for (Vertex c : code) ++degree[c];
  std::vector<Edge> edges;
  for (Vertex c : code) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
    --degree[leaf];
    --degree[c];
  }
  Vertex u = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        edges.emplace_back(u, v);
        break;
      }
    }
  }
  return Graph::from_edges(n, edges);
}

Graph random_connected(int n, double extra_prob, std::uint64_t seed) {
  const Graph tree = random_tree(n, derive_seed(seed, "tree"));
  Rng rng(derive_seed(seed, "extra"));
  std::vector<Edge> edges = tree.edges();
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!tree.adjacent(u, v) && rng.bernoulli(extra_prob)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph random_high_girth(int n, int min_girth, std::uint64_t seed) {
  if (min_girth < 3) throw std::invalid_argument("random_high_girth: min_girth must be >= 3");
  Graph g = random_tree(n, derive_seed(seed, "tree"));
  Rng rng(derive_seed(seed, "order"));
  std::vector<Edge> candidates;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) candidates.emplace_back(u, v);
  for (std::size_t i = candidates.size(); i > 1; --i)
    std::swap(candidates[i - 1], candidates[rng.below(i)]);
  std::vector<Edge> edges = g.edges();
  for (auto [u, v] : candidates) {
    if (bfs_distances(g, u)[v] >= min_girth - 1) {
      edges.emplace_back(u, v);
      g = Graph::from_edges(n, edges);
    }
  }
  return g;
}

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

Graph projective_incidence(int q) {
  if (!is_prime(q)) throw std::invalid_argument("projective_incidence: q must be prime");
  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) triples.push_back({1, a, b});
  for (int b = 0; b < q; ++b) triples.push_back({0, 1, b});
  triples.push_back({0, 0, 1});
  const int count = static_cast<int>(triples.size());
  std::vector<Edge> edges;
  for (int p = 0; p < count; ++p) {
    for (int l = 0; l < count; ++l) {
      const auto& x = triples[p];
      const auto& y = triples[l];
      if ((x[0] * y[0] + x[1] * y[1] + x[2] * y[2]) % q == 0) edges.emplace_back(p, count + l);
    }
  }
  return Graph::from_edges(2 * count, edges);
}

}  // namespace pursuit::gen
