#include "pursuit/graph.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>

namespace pursuit {

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {
  if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::all(int universe) {
  VertexSet s(universe);
  for (Vertex v = 0; v < universe; ++v) s.insert(v);
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v < 0 || v >= universe_) throw std::out_of_range("VertexSet: vertex out of range");
  std::uint64_t& w = words_[v >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if ((w & bit) == 0) {
    w |= bit;
    ++count_;
  }
}

void VertexSet::erase(Vertex v) {
  if (v < 0 || v >= universe_) throw std::out_of_range("VertexSet: vertex out of range");
  std::uint64_t& w = words_[v >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  if ((w & bit) != 0) {
    w &= ~bit;
    --count_;
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  recount();
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  recount();
  return *this;
}

void VertexSet::check_universe(const VertexSet& other) const {
  if (other.universe_ != universe_) throw std::invalid_argument("VertexSet: universe mismatch");
}

void VertexSet::recount() {
  count_ = 0;
  for (std::uint64_t w : words_) count_ += std::popcount(w);
}

// ---------------------------------------------------------------------------
// Graph

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
  if (n < 1) throw std::invalid_argument("graph must have at least one vertex");
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return from_adjacency(std::move(adj));
}

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adjacency) {
  const int n = static_cast<int>(adjacency.size());
  if (n < 1) throw std::invalid_argument("graph must have at least one vertex");
  std::size_t degree_sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto& list = adjacency[v];
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end())
      throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
    for (Vertex u : list) {
      if (u < 0 || u >= n) throw std::invalid_argument("neighbor id out of range");
      if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(v));
    }
    degree_sum += list.size();
  }
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : adjacency[v])
      if (!std::binary_search(adjacency[u].begin(), adjacency[u].end(), v))
        throw std::invalid_argument("asymmetric adjacency between " + std::to_string(v) +
                                    " and " + std::to_string(u));
  Graph g;
  g.adjacency_ = std::move(adjacency);
  g.edge_count_ = degree_sum / 2;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

// ---------------------------------------------------------------------------
// Metrics

std::vector<int> bfs_distances(const Graph& g, const VertexSet& sources) {
  if (sources.empty()) throw std::invalid_argument("bfs_distances: empty source set");
  if (sources.universe() != g.vertex_count())
    throw std::invalid_argument("bfs_distances: source set universe mismatch");
  std::vector<int> dist(g.vertex_count(), kUnreachable);
  std::queue<Vertex> frontier;
  for (Vertex s : sources.members()) {
    dist[s] = 0;
    frontier.push(s);
  }
  while (!frontier.empty()) {
    const Vertex x = frontier.front();
    frontier.pop();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        frontier.push(y);
      }
    }
  }
  return dist;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  return bfs_distances(g, VertexSet(g.vertex_count(), {source}));
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.push_back(bfs_distances(g, v));
  return out;
}

VertexSet ball(const Graph& g, const VertexSet& centers, int radius) {
  if (centers.empty()) throw std::invalid_argument("ball: empty center set");
  if (radius < 0) throw std::invalid_argument("ball: negative radius");
  const auto dist = bfs_distances(g, centers);
  VertexSet out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (dist[v] != kUnreachable && dist[v] <= radius) out.insert(v);
  return out;
}

VertexSet ball(const Graph& g, Vertex center, int radius) {
  return ball(g, VertexSet(g.vertex_count(), {center}), radius);
}

std::vector<Vertex> shortest_path(const Graph& g, Vertex from, Vertex to) {
  if (!g.contains(from) || !g.contains(to)) throw std::out_of_range("shortest_path: bad vertex");
  const auto dist = bfs_distances(g, to);
  if (dist[from] == kUnreachable)
    throw NoPathError("no path between " + std::to_string(from) + " and " + std::to_string(to));
  std::vector<Vertex> path{from};
  Vertex cur = from;
  while (cur != to) {
    for (Vertex next : g.neighbors(cur)) {
      if (dist[next] == dist[cur] - 1) {
        cur = next;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

std::optional<int> diameter(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    for (int d : bfs_distances(g, v)) {
      if (d == kUnreachable) return std::nullopt;
      best = std::max(best, d);
    }
  }
  return best;
}

Edge diameter_pair(const Graph& g) {
  Edge best{0, 0};
  int best_d = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    const auto dist = bfs_distances(g, u);
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (dist[v] == kUnreachable) throw NoPathError("diameter_pair: graph is disconnected");
      if (dist[v] > best_d) {
        best_d = dist[v];
        best = {u, v};
      }
    }
  }
  return best;
}

namespace {

Vertex farthest_from(const Graph& g, Vertex v) {
  const auto dist = bfs_distances(g, v);
  Vertex best = v;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (dist[u] == kUnreachable) throw NoPathError("double sweep: graph is disconnected");
    if (dist[u] > dist[best]) best = u;
  }
  return best;
}

}  // namespace

Edge double_sweep_pair(const Graph& g) {
  const Vertex a = farthest_from(g, 0);
  const Vertex b = farthest_from(g, a);
  return {a, b};
}

std::optional<int> girth(const Graph& g) {
  const int n = g.vertex_count();
  int best = -1;
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<Vertex> frontier;
    dist[root] = 0;
    frontier.push(root);
    while (!frontier.empty()) {
      const Vertex x = frontier.front();
      frontier.pop();
      // No shorter cycle through this root can appear past this depth.
      if (best != -1 && 2 * dist[x] >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] == kUnreachable) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          frontier.push(y);
        } else if (parent[x] != y) {
          const int cycle = dist[x] + dist[y] + 1;
          if (best == -1 || cycle < best) best = cycle;
        }
      }
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

int min_degree(const Graph& g) {
  int best = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

bool is_connected(const Graph& g) { return component_of(g, 0).size() == g.vertex_count(); }

VertexSet component_of(const Graph& g, Vertex v) {
  if (!g.contains(v)) throw std::out_of_range("component_of: bad vertex");
  const auto dist = bfs_distances(g, v);
  VertexSet out(g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    if (dist[u] != kUnreachable) out.insert(u);
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (seen.contains(v)) continue;
    out.push_back(component_of(g, v));
    seen |= out.back();
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& kept) {
  if (kept.universe() != g.vertex_count())
    throw std::invalid_argument("induced_subgraph: universe mismatch");
  if (kept.empty()) throw std::invalid_argument("induced_subgraph: no surviving vertices");
  InducedSubgraph out;
  out.to_new.assign(g.vertex_count(), kUnreachable);
  out.to_old = kept.members();
  for (std::size_t i = 0; i < out.to_old.size(); ++i)
    out.to_new[out.to_old[i]] = static_cast<Vertex>(i);
  std::vector<std::vector<Vertex>> adj(out.to_old.size());
  for (std::size_t i = 0; i < out.to_old.size(); ++i)
    for (Vertex u : g.neighbors(out.to_old[i]))
      if (out.to_new[u] != kUnreachable) adj[i].push_back(out.to_new[u]);
  out.graph = Graph::from_adjacency(std::move(adj));
  return out;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed) {
  if (removed.universe() != g.vertex_count())
    throw std::invalid_argument("delete_vertices: universe mismatch");
  if (removed.size() == g.vertex_count())
    throw std::invalid_argument("delete_vertices: cannot delete every vertex");
  return induced_subgraph(g, VertexSet::all(g.vertex_count()) - removed);
}

bool is_geodesic(const Graph& g, std::span<const Vertex> path) {
  if (path.empty()) return false;
  for (Vertex v : path)
    if (!g.contains(v)) return false;
  for (std::size_t i = 1; i < path.size(); ++i)
    if (!g.adjacent(path[i - 1], path[i])) return false;
  const auto dist = bfs_distances(g, path.front());
  return dist[path.back()] == static_cast<int>(path.size()) - 1;
}

// ---------------------------------------------------------------------------
// IO

namespace {

bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    return true;
  }
  return false;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no)) throw ParseError(line_no, "missing 'n m' header");
  long long n = 0, m = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> m) || (header >> extra))
      throw ParseError(line_no, "expected header 'n m'");
  }
  if (n < 1) throw ParseError(line_no, "vertex count must be at least 1");
  if (m < 0 || m > n * (n - 1) / 2) throw ParseError(line_no, "edge count out of range");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line(in, line, line_no))
      throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                    std::to_string(i));
    std::istringstream row(line);
    long long u = 0, v = 0;
    std::string extra;
    if (!(row >> u >> v) || (row >> extra)) throw ParseError(line_no, "expected edge 'u v'");
    if (u < 0 || v >= n || u >= v) throw ParseError(line_no, "edge must satisfy 0 <= u < v < n");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_content_line(in, line, line_no)) throw ParseError(line_no, "unexpected trailing content");
  try {
    return Graph::from_edges(static_cast<int>(n), edges);
  } catch (const std::invalid_argument& e) {
    throw ParseError(line_no, e.what());
  }
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_dot(std::ostream& out, const Graph& g, const std::string& name) {
  out << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
}

std::uint64_t graph_hash(const Graph& g) {
  std::ostringstream text;
  write_edge_list(text, g);
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text.str()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace pursuit
