#include "pursuit/matching.hpp"

#include <limits>
#include <queue>

namespace pursuit {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

struct HopcroftKarp {
  const std::vector<std::vector<int>>& adj;
  Matching& m;
  std::vector<int> layer;
  std::vector<std::size_t> cursor;

  bool bfs() {
    std::queue<int> q;
    bool found = false;
    for (std::size_t u = 0; u < adj.size(); ++u) {
      if (m.left_mate[u] < 0) {
        layer[u] = 0;
        q.push(static_cast<int>(u));
      } else {
        layer[u] = kInf;
      }
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int w : adj[u]) {
        const int next = m.right_mate[w];
        if (next < 0) {
          found = true;
        } else if (layer[next] == kInf) {
          layer[next] = layer[u] + 1;
          q.push(next);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (std::size_t& i = cursor[u]; i < adj[u].size(); ++i) {
      const int w = adj[u][i];
      const int next = m.right_mate[w];
      if (next < 0 || (layer[next] == layer[u] + 1 && dfs(next))) {
        m.left_mate[u] = w;
        m.right_mate[w] = u;
        return true;
      }
    }
    layer[u] = kInf;
    return false;
  }
};

}  // namespace

Matching max_bipartite_matching(const std::vector<std::vector<int>>& adj, int right_count) {
  Matching m;
  m.left_mate.assign(adj.size(), -1);
  m.right_mate.assign(right_count, -1);
  HopcroftKarp hk{adj, m, std::vector<int>(adj.size()), std::vector<std::size_t>(adj.size())};
  while (hk.bfs()) {
    std::fill(hk.cursor.begin(), hk.cursor.end(), 0);
    for (std::size_t u = 0; u < adj.size(); ++u)
      if (m.left_mate[u] < 0 && hk.dfs(static_cast<int>(u))) ++m.size;
  }
  return m;
}

std::vector<char> hall_deficiency_closure(const std::vector<std::vector<int>>& adj, const Matching& m) {
  std::vector<char> reached(adj.size(), 0);
  std::queue<int> q;
  for (std::size_t u = 0; u < adj.size(); ++u) {
    if (m.left_mate[u] < 0) {
      reached[u] = 1;
      q.push(static_cast<int>(u));
    }
  }
  while (!q.empty()) {
    const int u = q.front();
    q.pop();
    for (int w : adj[u]) {
      const int next = m.right_mate[w];
      // w is matched (the matching is maximum), and never to u along a non-matching edge
      if (next >= 0 && !reached[next]) {
        reached[next] = 1;
        q.push(next);
      }
    }
  }
  return reached;
}

}  // namespace pursuit
