#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pursuit {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Marks a vertex that no source can reach.
inline constexpr int kUnreachable = -1;

class NoPathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// A computation would exceed its configured budget. Never a wrong answer.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Subset of [0, universe) backed by a packed membership vector.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::span<const Vertex> members);
  VertexSet(int universe, std::initializer_list<Vertex> members);

  static VertexSet all(int universe);

  int universe() const { return universe_; }
  int size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(Vertex v) const {
    return v >= 0 && v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);

  std::vector<Vertex> members() const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  void check_universe(const VertexSet& other) const;
  void recount();

  int universe_ = 0;
  int count_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Construction validates its input and throws std::invalid_argument on
/// self-loops, duplicate edges, out-of-range ids or asymmetric adjacency.
/// Connectivity is not required.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(int n, std::span<const Edge> edges);
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adjacency);

  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < vertex_count(); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adjacency_ == b.adjacency_; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_new;  // kUnreachable for deleted vertices
  std::vector<Vertex> to_old;
};

// Metric primitives. Ties in BFS parents and geodesics go to the lowest id.

std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources);
std::vector<int> bfs_distances(const Graph& g, Vertex source);
std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

VertexSet ball(const Graph& g, const VertexSet& centers, int radius);
VertexSet ball(const Graph& g, Vertex center, int radius);

std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to);

/// Largest finite distance; nullopt when the graph is disconnected.
std::optional<int> diameter(const Graph& g);
/// Endpoints (u, v), u < v lexicographically first, realizing the diameter of a connected graph.
Edge diameter_pair(const Graph& g);
/// Two-sweep BFS approximation of a diameter pair for large connected graphs.
Edge double_sweep_pair(const Graph& g);

/// Shortest cycle length; nullopt for forests.
std::optional<int> girth(const Graph& g);
int min_degree(const Graph& g);

bool is_connected(const Graph& g);
VertexSet component_of(const Graph& g, Vertex v);
std::vector<VertexSet> components(const Graph& g);

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed);
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& kept);

bool is_geodesic(const Graph& g, std::span<const Vertex> path);

// Edge-list text format: "n m" header, m lines "u v" with u < v, '#' comments.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);
void write_dot(std::ostream& out, const Graph& g, const std::string& name = "G");

/// FNV-1a 64 over the canonical edge-list text.
std::uint64_t graph_hash(const Graph& g);

}  // namespace pursuit
