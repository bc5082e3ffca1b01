#include "pursuit/guard.hpp"

#include <cstdlib>
#include <stdexcept>

namespace pursuit {

namespace {

void require_geodesic(const Graph& g, std::span<const Vertex> path, const char* who) {
  if (path.empty()) throw std::invalid_argument(std::string(who) + ": empty path");
  for (Vertex v : path)
    if (!g.contains(v)) throw std::invalid_argument(std::string(who) + ": path vertex outside the graph");
  if (!is_geodesic(g, path)) throw std::invalid_argument(std::string(who) + ": path is not a geodesic");
}

}  // namespace

int shadow(const Graph& g, std::span<const Vertex> path, Vertex r) {
  require_geodesic(g, path, "shadow");
  if (!g.contains(r)) throw std::invalid_argument("shadow: robber vertex outside the graph");
  const int d = bfs_distances(g, path.front())[r];
  if (d == kUnreachable) throw std::invalid_argument("shadow: robber not in the path's component");
  return std::min(d, static_cast<int>(path.size()) - 1);
}

int settle_bound(const Graph& g, std::span<const Vertex> path) {
  require_geodesic(g, path, "settle_bound");
  const auto diam = diameter(g);
  if (!diam) throw std::invalid_argument("settle_bound: graph must be connected");
  return std::max(1, *diam + static_cast<int>(path.size()) - 1);
}

PathGuard::PathGuard(const Graph& g, std::vector<Vertex> path, std::optional<VertexSet> domain)
    : g_(&g), path_(std::move(path)), domain_(domain ? *domain : VertexSet::all(g.vertex_count())) {
  if (domain_.universe() != g.vertex_count()) throw std::invalid_argument("PathGuard: domain universe mismatch");
  for (Vertex v : path_)
    if (!g.contains(v) || !domain_.contains(v)) throw std::invalid_argument("PathGuard: path leaves the domain");
  const InducedSubgraph h = induced_subgraph(g, domain_);
  std::vector<Vertex> local(path_.size());
  for (std::size_t i = 0; i < path_.size(); ++i) local[i] = h.to_new[path_[i]];
  require_geodesic(h.graph, local, "PathGuard");

  const auto dist_h = bfs_distances(h.graph, local.front());
  from_start_.assign(g.vertex_count(), kUnreachable);
  for (Vertex v = 0; v < h.graph.vertex_count(); ++v) from_start_[h.to_old[v]] = dist_h[v];
  to_start_g_ = bfs_distances(g, path_.front());
  path_index_.assign(g.vertex_count(), -1);
  for (std::size_t i = 0; i < path_.size(); ++i) path_index_[path_[i]] = static_cast<int>(i);
}

std::optional<int> PathGuard::shadow(Vertex r) const {
  if (!g_->contains(r) || from_start_[r] == kUnreachable) return std::nullopt;
  return std::min(from_start_[r], length());
}

std::optional<int> PathGuard::index_of(Vertex v) const {
  if (!g_->contains(v) || path_index_[v] < 0) return std::nullopt;
  return path_index_[v];
}

int PathGuard::settle_bound_from(Vertex from) const {
  if (!g_->contains(from) || to_start_g_[from] == kUnreachable)
    throw std::invalid_argument("PathGuard: start vertex cannot reach the path");
  return std::max(1, to_start_g_[from] + length());
}

Vertex PathGuard::step(Vertex cop, std::optional<Vertex> robber) {
  if (!robber) throw std::invalid_argument("PathGuard: the guard needs to see the robber");
  const Vertex r = *robber;
  if (r == cop || g_->adjacent(cop, r)) return r;
  const std::optional<int> j = shadow(r);

  if (phase_ == GuardPhase::Guarding) {
    if (!j) return cop;  // robber stepped onto another guard's path
    const Vertex target = path_[*j];
    if (target != cop && !g_->adjacent(cop, target))
      throw std::logic_error("PathGuard: shadow moved by more than one step");
    return target;
  }

  const std::optional<int> c = index_of(cop);
  if (j && c && std::abs(*c - *j) <= 1) {
    phase_ = GuardPhase::Guarding;
    return path_[*j];
  }
  if (cop == path_.front()) climbing_ = true;
  if (climbing_) {
    if (!j) return cop;
    if (!c || *c >= *j) throw std::logic_error("PathGuard: climbing cop overtook the shadow");
    return path_[*c + 1];
  }
  Vertex next = cop;
  for (Vertex u : g_->neighbors(cop)) {
    if (to_start_g_[u] == to_start_g_[cop] - 1) {
      next = u;
      break;
    }
  }
  if (next == path_.front()) climbing_ = true;
  if (j && next == path_[*j]) phase_ = GuardPhase::Guarding;
  return next;
}

GuardCop::GuardCop(const Graph& g, std::vector<Vertex> path, std::optional<Vertex> start)
    : guard_(g, std::move(path)), start_(start ? *start : guard_.path().front()) {
  guard_.settle_bound_from(start_);
}

std::vector<Vertex> GuardCop::place(const Graph&, int cop_count, std::uint64_t) {
  if (cop_count != 1) throw std::invalid_argument("GuardCop: exactly one cop");
  return {start_};
}

std::vector<Vertex> GuardCop::move(const CopView& view) {
  if (view.cops.size() != 1) throw StrategyFault("cops", view.round, "guard expects one cop");
  return {guard_.step(view.cops[0], view.robber)};
}

GuardAudit audit_guard(const Graph& g, const std::vector<Vertex>& path, int extra_rounds) {
  const GuardCop cop(g, path);
  GuardAudit audit;
  audit.settle = cop.settle_bound();
  audit.depth = audit.settle + extra_rounds;
  GameConfig cfg;
  cfg.max_rounds = audit.depth;
  SearchVisitor visitor;
  visitor.on_cop_move = [&](int round, std::span<const Vertex>, std::span<const Vertex> after, Vertex robber,
                            const CopStrategy& team) {
    const auto& guard = static_cast<const GuardCop&>(team).guard();
    if (round - 1 >= audit.settle && guard.on_path(robber)) {
      ++audit.touches;
      if (after[0] != robber) ++audit.violations;
    }
    if (round >= audit.settle && after[0] != robber && guard.phase() != GuardPhase::Guarding) ++audit.late_settles;
  };
  const AdversaryResult res = adversarial_robber_search(g, cop, cfg, audit.depth, &visitor);
  audit.states = res.states;
  audit.all_caught = res.all_caught;
  return audit;
}

}  // namespace pursuit
