#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pursuit/engine.hpp"
#include "pursuit/graph.hpp"

namespace pursuit {

struct SolverOptions {
  std::uint64_t max_states = 50'000'000;
};

/// Solved game table for k cops on a fixed graph.
///
/// States are (sorted cop multiset, robber vertex) with the cops to move; the
/// robber-to-move layer is folded into the value recurrence. value() is the
/// number of rounds the cops need to force capture, or kNoWin. The table is
/// filled by Jacobi sweeps from the capture states until nothing changes.
class CopWinTable {
 public:
  static constexpr std::uint32_t kNoWin = 0xffffffffU;

  CopWinTable(const Graph& g, int k, const SolverOptions& options = {});

  const Graph& graph() const { return graph_; }
  int cop_count() const { return k_; }
  std::uint64_t multiset_count() const { return tuples_.size() / k_; }
  /// Both sides-to-move layers, as budgeted.
  std::uint64_t state_count() const { return 2 * multiset_count() * graph_.vertex_count(); }
  int sweeps() const { return sweeps_; }

  bool cops_win() const { return placement_.has_value(); }
  /// Lexicographically first winning placement.
  const std::optional<std::vector<Vertex>>& placement() const { return placement_; }
  /// Rounds needed from the winning placement against the worst robber placement.
  std::uint32_t capture_bound() const { return capture_bound_; }

  std::uint32_t value(std::span<const Vertex> cops, Vertex robber) const;
  /// Optimal cop move as per-cop targets aligned with `cops` (any order); empty when not winning.
  std::vector<Vertex> best_move(std::span<const Vertex> cops, Vertex robber) const;

 private:
  std::uint64_t index_of(std::vector<Vertex> sorted) const;
  std::vector<Vertex> decode_move(std::uint64_t multiset, std::uint32_t move) const;

  Graph graph_;
  int k_;
  std::vector<std::vector<Vertex>> closed_;
  std::vector<Vertex> tuples_;  // multisets in lexicographic order, k entries each
  std::vector<std::vector<std::uint64_t>> binom_;
  std::vector<std::uint32_t> colex_to_lex_;
  std::vector<std::uint32_t> value_;
  std::vector<std::uint32_t> move_;
  int sweeps_ = 0;
  std::optional<std::vector<Vertex>> placement_;
  std::uint32_t capture_bound_ = kNoWin;
};

struct CopWinResult {
  bool cops_win = false;
  std::optional<std::vector<Vertex>> placement;
  std::uint64_t states = 0;
};

CopWinResult is_k_copwin(const Graph& g, int k, const SolverOptions& options = {});

/// Least k <= k_max with k cops winning; nullopt when it exceeds k_max.
std::optional<int> cop_number(const Graph& g, int k_max, const SolverOptions& options = {});

struct Dismantling {
  bool dismantlable = false;
  std::vector<Vertex> order;  // removal order (complete when dismantlable)
};

/// Repeatedly deletes the lowest-id corner: a vertex whose closed
/// neighbourhood lies inside another vertex's.
Dismantling dismantle(const Graph& g);
bool is_dismantlable(const Graph& g);

/// Plays the table's optimal moves from its winning placement.
class SolverCops : public CopStrategy {
 public:
  explicit SolverCops(std::shared_ptr<const CopWinTable> table);
  std::string name() const override { return "solver"; }
  std::vector<Vertex> place(const Graph& g, int cop_count, std::uint64_t seed) override;
  std::vector<Vertex> move(const CopView& view) override;
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<SolverCops>(*this); }
  std::uint64_t fingerprint() const override { return 0; }

 private:
  std::shared_ptr<const CopWinTable> table_;
};

}  // namespace pursuit
