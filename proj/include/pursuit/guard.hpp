#pragma once

#include <optional>
#include <span>
#include <vector>

#include "pursuit/engine.hpp"
#include "pursuit/graph.hpp"

namespace pursuit {

/// Index of the robber's projection onto a geodesic: min(d(p_0, r), L).
/// Throws invalid_argument if `path` is not a geodesic or r is unreachable.
int shadow(const Graph& g, std::span<const Vertex> path, Vertex r);

/// Rounds after which a guard starting anywhere in g is guarding `path`.
int settle_bound(const Graph& g, std::span<const Vertex> path);

enum class GuardPhase { Approaching, Guarding };

/// One cop guarding a geodesic of a domain H, an induced subgraph of the
/// ambient graph G given as a vertex set. The shadow is measured in H and the
/// cop walks in G; all vertex ids are G ids.
///
/// Approach: walk to p_0, then climb the path one index per round. Since the
/// climb starts below the shadow and the shadow drops by at most one per
/// robber move, the cop never overtakes it, so the gap closes within L rounds.
/// Whenever the shadow is within one step, the cop jumps onto it and guards
/// from then on. An adjacent robber is captured outright.
class PathGuard {
 public:
  PathGuard(const Graph& g, std::vector<Vertex> path, std::optional<VertexSet> domain = std::nullopt);

  const std::vector<Vertex>& path() const { return path_; }
  int length() const { return static_cast<int>(path_.size()) - 1; }
  const VertexSet& domain() const { return domain_; }
  GuardPhase phase() const { return phase_; }
  bool climbing() const { return climbing_; }

  /// Shadow index in H, or nullopt when r lies outside the domain.
  std::optional<int> shadow(Vertex r) const;
  /// Index of v on the path, or nullopt.
  std::optional<int> index_of(Vertex v) const;
  bool on_path(Vertex v) const { return index_of(v).has_value(); }

  /// Rounds until guarding when the cop starts at `from`: max(1, d_G(from, p_0) + L).
  int settle_bound_from(Vertex from) const;

  /// Next cop vertex given the cop's position and the robber's.
  Vertex step(Vertex cop, std::optional<Vertex> robber);

  std::uint64_t fingerprint() const { return (phase_ == GuardPhase::Guarding ? 2U : 0U) | (climbing_ ? 1U : 0U); }

 private:
  const Graph* g_;
  std::vector<Vertex> path_;
  VertexSet domain_;
  std::vector<int> from_start_;   // d_H(p_0, .) for G ids, kUnreachable outside H
  std::vector<int> to_start_g_;   // d_G(., p_0)
  std::vector<int> path_index_;   // -1 off the path
  GuardPhase phase_ = GuardPhase::Approaching;
  bool climbing_ = false;
};

/// A single cop running PathGuard on the whole graph, placed at p_0 unless a
/// start vertex is given.
class GuardCop : public CopStrategy {
 public:
  GuardCop(const Graph& g, std::vector<Vertex> path, std::optional<Vertex> start = std::nullopt);
  std::string name() const override { return "guard"; }
  std::vector<Vertex> place(const Graph& g, int cop_count, std::uint64_t seed) override;
  std::vector<Vertex> move(const CopView& view) override;
  std::unique_ptr<CopStrategy> clone() const override { return std::make_unique<GuardCop>(*this); }
  std::uint64_t fingerprint() const override { return guard_.fingerprint(); }

  const PathGuard& guard() const { return guard_; }
  Vertex start() const { return start_; }
  int settle_bound() const { return guard_.settle_bound_from(start_); }

 private:
  PathGuard guard_;
  Vertex start_;
};

struct GuardAudit {
  int settle = 0;
  int depth = 0;
  int touches = 0;      // robber on the path at the end of a round >= settle
  int violations = 0;   // ... and the following cop half-move did not capture
  int late_settles = 0; // nodes past the settle round still approaching
  std::size_t states = 0;
  bool all_caught = false;
};

/// Exhaustive check of guard soundness against every robber line, with
/// `extra_rounds` rounds searched beyond the settle bound.
GuardAudit audit_guard(const Graph& g, const std::vector<Vertex>& path, int extra_rounds = 4);

}  // namespace pursuit
