#pragma once

#include <vector>

namespace pursuit {

/// Maximum matching in a bipartite graph given as left -> right adjacency.
struct Matching {
  std::vector<int> left_mate;   // -1 when unmatched
  std::vector<int> right_mate;  // -1 when unmatched
  int size = 0;
};

/// Hopcroft-Karp. Adjacency lists are scanned in order, so the result is
/// deterministic for a given input.
Matching max_bipartite_matching(const std::vector<std::vector<int>>& adj, int right_count);

/// Left vertices reachable from unmatched left vertices by alternating paths
/// (non-matching edge left->right, matching edge right->left). The set is empty
/// iff the matching saturates the left side; otherwise its neighbourhood is
/// strictly smaller than the set (a Hall violator).
std::vector<char> hall_deficiency_closure(const std::vector<std::vector<int>>& adj, const Matching& m);

}  // namespace pursuit
