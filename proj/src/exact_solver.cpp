#include "pursuit/exact_solver.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace pursuit {

namespace {

bool holds(std::span<const Vertex> tuple, Vertex v) {
  return std::find(tuple.begin(), tuple.end(), v) != tuple.end();
}

// C(n + k - 1, k) with saturation at 2^63.
std::uint64_t multiset_count_saturating(std::uint64_t n, std::uint64_t k) {
  constexpr std::uint64_t cap = std::uint64_t{1} << 63;
  long double acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc = acc * static_cast<long double>(n + i - 1) / static_cast<long double>(i);
    if (acc >= static_cast<long double>(cap)) return cap;
  }
  return static_cast<std::uint64_t>(acc + 0.5L);
}

}  // namespace

CopWinTable::CopWinTable(const Graph& g, int k, const SolverOptions& options) : graph_(g), k_(k) {
  if (k < 1) throw std::invalid_argument("CopWinTable: k must be >= 1");
  if (!is_connected(g)) throw std::invalid_argument("CopWinTable: graph must be connected");
  const int n = g.vertex_count();
  const std::uint64_t multisets = multiset_count_saturating(n, k);
  const long double states = 2.0L * static_cast<long double>(multisets) * n;
  if (multisets >= (std::uint64_t{1} << 32) || states > static_cast<long double>(options.max_states))
    throw ResourceLimitError("state space of " + std::to_string(static_cast<double>(states)) +
                             " states exceeds budget of " + std::to_string(options.max_states));

  closed_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    closed_[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    closed_[v].insert(std::lower_bound(closed_[v].begin(), closed_[v].end(), v), v);
  }

  binom_.assign(n + k + 1, std::vector<std::uint64_t>(k + 2, 0));
  for (int a = 0; a <= n + k; ++a) {
    binom_[a][0] = 1;
    for (int b = 1; b <= std::min(a, k + 1); ++b)
      binom_[a][b] = binom_[a - 1][b - 1] + (b <= a - 1 ? binom_[a - 1][b] : 0);
  }

  tuples_.reserve(multisets * k);
  colex_to_lex_.assign(multisets, 0);
  std::vector<Vertex> t(k, 0);
  for (std::uint32_t lex = 0;; ++lex) {
    std::uint64_t colex = 0;
    for (int i = 0; i < k; ++i) colex += binom_[t[i] + i][i + 1];
    colex_to_lex_[colex] = lex;
    tuples_.insert(tuples_.end(), t.begin(), t.end());
    int i = k - 1;
    while (i >= 0 && t[i] == n - 1) --i;
    if (i < 0) break;
    ++t[i];
    for (int j = i + 1; j < k; ++j) t[j] = t[i];
  }

  const std::uint64_t m = multiset_count();
  value_.assign(m * n, kNoWin);
  move_.assign(m * n, 0);
  for (std::uint64_t c = 0; c < m; ++c)
    for (int i = 0; i < k; ++i) value_[c * n + tuples_[c * k + i]] = 0;

  std::vector<int> digit(k);
  std::vector<Vertex> targets(k), sorted(k);
  std::vector<std::uint32_t> best(n), best_move(n);

  // One pass over every multiset; returns whether any value improved.
  auto sweep = [&](bool final_pass) {
    const std::vector<std::uint32_t> old = value_;
    bool changed = false;
    for (std::uint64_t c = 0; c < m; ++c) {
      const Vertex* tuple = &tuples_[c * k];
      std::fill(best.begin(), best.end(), kNoWin);
      std::fill(digit.begin(), digit.end(), 0);
      for (std::uint32_t move = 0;; ++move) {
        for (int i = 0; i < k; ++i) targets[i] = closed_[tuple[i]][digit[i]];
        sorted = targets;
        std::sort(sorted.begin(), sorted.end());
        const std::uint64_t next = index_of(sorted);
        for (Vertex r = 0; r < n; ++r) {
          if (old[c * n + r] == 0) continue;
          std::uint32_t worst = 1;
          if (!holds(targets, r)) {
            for (Vertex reply : closed_[r]) {
              if (holds(targets, reply)) continue;
              const std::uint32_t later = old[next * n + reply];
              if (later == kNoWin) {
                worst = kNoWin;
                break;
              }
              worst = std::max(worst, later + 1);
            }
          }
          if (worst < best[r]) {
            best[r] = worst;
            best_move[r] = move;
          }
        }
        int i = k - 1;
        while (i >= 0 && digit[i] + 1 == static_cast<int>(closed_[tuple[i]].size())) digit[i--] = 0;
        if (i < 0) break;
        ++digit[i];
      }
      for (Vertex r = 0; r < n; ++r) {
        const std::uint64_t s = c * n + r;
        if (old[s] == 0) continue;
        if (best[r] < old[s]) {
          value_[s] = best[r];
          move_[s] = best_move[r];
          changed = true;
        } else if (final_pass && best[r] == old[s] && old[s] != kNoWin) {
          move_[s] = best_move[r];
        }
      }
    }
    return changed;
  };

  while (sweep(false)) ++sweeps_;
  ++sweeps_;
  // Re-derive every stored move against the converged values so ties resolve
  // to the lexicographically first optimal move.
  sweep(true);

  for (std::uint64_t c = 0; c < m; ++c) {
    std::uint32_t worst = 0;
    for (Vertex r = 0; r < n && worst != kNoWin; ++r) worst = std::max(worst, value_[c * n + r]);
    if (worst != kNoWin) {
      placement_ = std::vector<Vertex>(tuples_.begin() + c * k, tuples_.begin() + (c + 1) * k);
      capture_bound_ = worst;
      break;
    }
  }
}

std::uint64_t CopWinTable::index_of(std::vector<Vertex> sorted) const {
  std::uint64_t colex = 0;
  for (int i = 0; i < k_; ++i) colex += binom_[sorted[i] + i][i + 1];
  return colex_to_lex_[colex];
}

std::vector<Vertex> CopWinTable::decode_move(std::uint64_t multiset, std::uint32_t move) const {
  std::vector<Vertex> targets(k_);
  for (int i = k_ - 1; i >= 0; --i) {
    const auto& options = closed_[tuples_[multiset * k_ + i]];
    targets[i] = options[move % options.size()];
    move /= static_cast<std::uint32_t>(options.size());
  }
  return targets;
}

std::uint32_t CopWinTable::value(std::span<const Vertex> cops, Vertex robber) const {
  if (static_cast<int>(cops.size()) != k_) throw std::invalid_argument("CopWinTable: wrong cop count");
  std::vector<Vertex> sorted(cops.begin(), cops.end());
  std::sort(sorted.begin(), sorted.end());
  return value_[index_of(sorted) * graph_.vertex_count() + robber];
}

std::vector<Vertex> CopWinTable::best_move(std::span<const Vertex> cops, Vertex robber) const {
  if (static_cast<int>(cops.size()) != k_) throw std::invalid_argument("CopWinTable: wrong cop count");
  std::vector<int> order(k_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return cops[a] < cops[b]; });
  std::vector<Vertex> sorted(k_);
  for (int i = 0; i < k_; ++i) sorted[i] = cops[order[i]];
  const std::uint64_t c = index_of(sorted);
  const std::uint64_t s = c * graph_.vertex_count() + robber;
  if (value_[s] == kNoWin || value_[s] == 0) return {};
  const std::vector<Vertex> targets = decode_move(c, move_[s]);
  std::vector<Vertex> out(k_);
  for (int i = 0; i < k_; ++i) out[order[i]] = targets[i];
  return out;
}

CopWinResult is_k_copwin(const Graph& g, int k, const SolverOptions& options) {
  if (k < 1) throw std::invalid_argument("is_k_copwin: k must be >= 1");
  if (!is_connected(g)) throw std::invalid_argument("is_k_copwin: graph must be connected");
  const int n = g.vertex_count();
  if (k >= n) {
    std::vector<Vertex> placement(k, 0);
    std::iota(placement.begin(), placement.begin() + n, 0);
    std::sort(placement.begin(), placement.end());
    return {true, placement, 0};
  }
  const CopWinTable table(g, k, options);
  return {table.cops_win(), table.placement(), table.state_count()};
}

std::optional<int> cop_number(const Graph& g, int k_max, const SolverOptions& options) {
  for (int k = 1; k <= k_max; ++k)
    if (is_k_copwin(g, k, options).cops_win) return k;
  return std::nullopt;
}

Dismantling dismantle(const Graph& g) {
  const int n = g.vertex_count();
  VertexSet alive = VertexSet::all(n);
  std::vector<VertexSet> closed;
  for (Vertex v = 0; v < n; ++v) {
    VertexSet s(n, g.neighbors(v));
    s.insert(v);
    closed.push_back(std::move(s));
  }
  Dismantling out;
  while (alive.size() > 1) {
    Vertex corner = -1;
    for (Vertex u : alive.members()) {
      const VertexSet nu = closed[u] & alive;
      for (Vertex w : alive.members()) {
        if (w != u && nu.is_subset_of(closed[w])) {
          corner = u;
          break;
        }
      }
      if (corner >= 0) break;
    }
    if (corner < 0) return out;
    out.order.push_back(corner);
    alive.erase(corner);
  }
  out.order.push_back(alive.members().front());
  out.dismantlable = true;
  return out;
}

bool is_dismantlable(const Graph& g) { return dismantle(g).dismantlable; }

SolverCops::SolverCops(std::shared_ptr<const CopWinTable> table) : table_(std::move(table)) {
  if (!table_ || !table_->cops_win()) throw std::invalid_argument("SolverCops: table has no winning placement");
}

std::vector<Vertex> SolverCops::place(const Graph& g, int cop_count, std::uint64_t) {
  if (cop_count != table_->cop_count() || !(g == table_->graph()))
    throw std::invalid_argument("SolverCops: table was solved for a different game");
  return *table_->placement();
}

std::vector<Vertex> SolverCops::move(const CopView& view) {
  if (!view.robber) throw StrategyFault("cops", view.round, "solver strategy needs a visible robber");
  std::vector<Vertex> next = table_->best_move(view.cops, *view.robber);
  if (next.empty()) throw StrategyFault("cops", view.round, "position is not winning for the cops");
  return next;
}

}  // namespace pursuit
