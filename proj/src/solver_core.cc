#include "stableflow/solver_core.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "stableflow/error.h"

namespace stableflow {

SolverState::SolverState(const Network& net)
    : flow(net),
      active(net.num_vertices(), kNoEdge),
      critical(net.num_vertices(), kNoEdge),
      closed(net.num_edges(), 0),
      in_excess_queue(net.num_vertices(), 0),
      in_new_queue(net.num_vertices(), 0) {}

std::string_view UpdatePhaseName(UpdatePhase phase) {
  switch (phase) {
    case UpdatePhase::kInit: return "init";
    case UpdatePhase::kPush: return "push";
    case UpdatePhase::kBalance: return "balance";
    case UpdatePhase::kWalk: return "walk";
    case UpdatePhase::kCycle: return "cycle";
    case UpdatePhase::kDrain: return "drain";
  }
  return "unknown";
}

SolverCore::SolverCore(const Network& net) : SolverCore(net, [&net] {
  SolverState s(net);
  for (VertexId v = 0; v < net.num_vertices(); ++v) {
    if (!net.is_internal(v) || net.out_edges(v).empty()) continue;
    for (EdgeId e : net.out_edges(v)) {
      if (net.capacity(e) > 0) {
        s.active[v] = e;
        break;
      }
    }
  }
  return s;
}()) {}

SolverCore::SolverCore(const Network& net, SolverState state)
    : net_(&net), state_(std::move(state)) {
  const int m = net.num_edges();
  stats_.saturations.assign(m, 0);
  stats_.freeings.assign(m, 0);
  stats_.gamma_additions.assign(m, 0);
  roles_.assign(m, GammaRole::kNone);
  for (EdgeId e = 0; e < m; ++e) {
    roles_[e] = ComputeRole(e);
    if (roles_[e] != GammaRole::kNone) ++stats_.gamma_additions[e];
  }
  // Every elementary update moves at least one unit and each edge value
  // rises once and then falls once, so 2 * sum(c) updates always suffice.
  update_guard_ = 4 * net.total_capacity();
}

GammaRole SolverCore::ComputeRole(EdgeId e) const {
  const Amount f = state_.flow[e];
  const Amount c = net_->capacity(e);
  const VertexId u = net_->tail(e);
  if (net_->is_internal(u) && state_.active[u] == e && f < c) {
    return GammaRole::kPlus;
  }
  if (f > 0 && f < c) return GammaRole::kMinus;
  return GammaRole::kNone;
}

void SolverCore::RefreshRole(EdgeId e) {
  const GammaRole r = ComputeRole(e);
  if (r == roles_[e]) return;
  if (roles_[e] == GammaRole::kNone) ++stats_.gamma_additions[e];
  ++stats_.m_events;
  roles_[e] = r;
}

void SolverCore::RecordUpdate(EdgeId e, Amount delta) {
  ++stats_.updates_total;
  if (in_big_iteration_) {
    ++big_iteration_updates_;
  } else {
    ++stats_.init_updates;
  }
  if (trace_ != nullptr) trace_->push_back({e, delta, phase_});
  CheckGuard();
}

void SolverCore::CheckGuard() const {
  if (stats_.updates_total > update_guard_) {
    throw Error(ErrorCode::kIterationGuardExceeded,
                "more than " + std::to_string(update_guard_) +
                    " elementary updates");
  }
}

void SolverCore::Increase(EdgeId e, Amount delta) {
  if (delta <= 0 || state_.closed[e] ||
      state_.flow[e] + delta > net_->capacity(e)) {
    throw std::logic_error("illegal increase on edge " + std::to_string(e));
  }
  FlowAssignment& f = state_.flow;
  f.Add(e, delta);
  if (f.saturated(e)) {
    ++stats_.s_events;
    ++stats_.saturations[e];
    const VertexId u = net_->tail(e);
    if (net_->is_internal(u) && state_.active[u] == e) NormalizeActive(u);
  }
  RefreshRole(e);
  RecordUpdate(e, delta);
  const VertexId w = net_->head(e);
  if (net_->is_internal(w)) OnExcessGain(w);
}

void SolverCore::Decrease(EdgeId e, Amount delta) {
  if (delta <= 0 || state_.flow[e] < delta) {
    throw std::logic_error("illegal decrease on edge " + std::to_string(e));
  }
  FlowAssignment& f = state_.flow;
  f.Add(e, -delta);
  if (f.free(e)) {
    ++stats_.f_events;
    ++stats_.freeings[e];
  }
  RefreshRole(e);
  RecordUpdate(e, -delta);
  const VertexId u = net_->tail(e);
  if (net_->is_internal(u)) OnExcessGain(u);
}

void SolverCore::Close(EdgeId e) {
  if (state_.closed[e]) return;
  state_.closed[e] = 1;
  const VertexId u = net_->tail(e);
  if (net_->is_internal(u) && state_.active[u] == e) NormalizeActive(u);
  RefreshRole(e);
}

void SolverCore::NormalizeActive(VertexId u) {
  const EdgeId old = state_.active[u];
  if (old == kNoEdge) return;
  const auto out = net_->out_edges(u);
  std::size_t r = net_->out_rank(old);
  while (r < out.size() &&
         (state_.closed[out[r]] || state_.flow.saturated(out[r]))) {
    ++r;
  }
  const EdgeId now = r < out.size() ? out[r] : kNoEdge;
  if (now == old) return;
  state_.active[u] = now;
  RefreshRole(old);
  if (now != kNoEdge) RefreshRole(now);
}

void SolverCore::SaturateSources() {
  set_phase(UpdatePhase::kInit);
  for (VertexId s : net_->sources()) {
    for (EdgeId e : net_->out_edges(s)) {
      const Amount room = state_.flow.residual(e);
      if (room > 0) Increase(e, room);
    }
  }
}

void SolverCore::PushAt(VertexId u) {
  NormalizeActive(u);
  FlowAssignment& f = state_.flow;
  while (f.excess(u) > 0 && state_.active[u] != kNoEdge) {
    const EdgeId e = state_.active[u];
    Increase(e, std::min(f.residual(e), f.excess(u)));
  }
}

void SolverCore::BalanceAt(VertexId v) {
  FlowAssignment& f = state_.flow;
  if (!net_->is_internal(v) || f.excess(v) <= 0 ||
      state_.active[v] != kNoEdge) {
    throw std::logic_error("balancing requires an internal excess vertex "
                           "without an active edge; got vertex " +
                           std::to_string(v));
  }
  const auto in = net_->in_edges(v);
  int pos = state_.critical[v] != kNoEdge ? net_->in_rank(state_.critical[v])
                                          : static_cast<int>(in.size()) - 1;
  int leftmost = -1;
  while (f.excess(v) > 0) {
    while (pos >= 0 && f.free(in[pos])) --pos;
    if (pos < 0) {
      throw Error(ErrorCode::kNoPositiveInEdge,
                  "vertex " + std::to_string(v) + " has excess " +
                      std::to_string(f.excess(v)) +
                      " but no positive in-edge");
    }
    const EdgeId e = in[pos];
    Decrease(e, std::min(f.excess(v), f[e]));
    leftmost = pos;
  }
  state_.critical[v] = in[leftmost];
  for (std::size_t p = leftmost; p < in.size(); ++p) Close(in[p]);
}

void SolverCore::BeginBigIteration() {
  in_big_iteration_ = true;
  big_iteration_updates_ = 0;
}

void SolverCore::EndBigIteration() {
  in_big_iteration_ = false;
  ++stats_.big_iterations;
  stats_.big_iteration_updates.push_back(big_iteration_updates_);
  stats_.updates_max_per_big_iteration =
      std::max(stats_.updates_max_per_big_iteration, big_iteration_updates_);
}

GammaGraph SolverCore::BuildGamma() const {
  GammaGraph gamma;
  for (EdgeId e = 0; e < net_->num_edges(); ++e) {
    const GammaRole r = ComputeRole(e);
    if (r != roles_[e]) {
      throw Error(ErrorCode::kPartitionViolation,
                  "cached role of edge " + std::to_string(e) + " is stale");
    }
    if (r == GammaRole::kPlus) {
      if (state_.closed[e]) {
        throw Error(ErrorCode::kPartitionViolation,
                    "active edge " + std::to_string(e) + " is closed");
      }
      gamma.plus.push_back(e);
    } else if (r == GammaRole::kMinus) {
      const VertexId v = net_->head(e);
      if (!net_->is_internal(v) || state_.critical[v] != e) {
        throw Error(ErrorCode::kPartitionViolation,
                    "middle edge " + std::to_string(e) +
                        " is neither active nor critical");
      }
      gamma.minus.push_back(e);
    }
  }
  return gamma;
}

bool SolverCore::CheckInvariants(std::string* why) const {
  auto fail = [&](std::string message) {
    if (why != nullptr) *why = std::move(message);
    return false;
  };
  const Network& net = *net_;
  const FlowAssignment& f = state_.flow;
  if (!f.ExcessCacheConsistent()) return fail("excess cache out of date");
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    if (f[e] < 0 || f[e] > net.capacity(e)) {
      return fail("edge " + std::to_string(e) + " infeasible");
    }
    if (ComputeRole(e) != roles_[e]) {
      return fail("role of edge " + std::to_string(e) + " out of date");
    }
  }
  for (VertexId s : net.sources()) {
    for (EdgeId e : net.out_edges(s)) {
      if (!f.saturated(e) && !state_.closed[e]) {
        return fail("unsaturated source edge " + std::to_string(e) +
                    " is open");
      }
    }
  }
  for (VertexId v = 0; v < net.num_vertices(); ++v) {
    if (!net.is_internal(v)) continue;
    const auto out = net.out_edges(v);
    const EdgeId a = state_.active[v];
    const std::size_t cut = a == kNoEdge ? out.size() : net.out_rank(a);
    if (a != kNoEdge) {
      if (net.tail(a) != v) return fail("active edge not incident");
      if (f.saturated(a) || state_.closed[a]) {
        return fail("active edge of " + std::to_string(v) +
                    " is saturated or closed");
      }
      for (std::size_t r = cut + 1; r < out.size(); ++r) {
        if (!f.free(out[r])) {
          return fail("edge after the active edge of " + std::to_string(v) +
                      " carries flow");
        }
      }
    }
    for (std::size_t r = 0; r < cut; ++r) {
      if (!f.saturated(out[r]) && !state_.closed[out[r]]) {
        return fail("edge before the active position of " +
                    std::to_string(v) + " is open and unsaturated");
      }
    }
    const EdgeId c = state_.critical[v];
    if (c == kNoEdge) continue;
    const auto in = net.in_edges(v);
    if (net.head(c) != v) return fail("critical edge not incident");
    if (a != kNoEdge) {
      return fail("balanced vertex " + std::to_string(v) +
                  " has an active edge");
    }
    if (f.saturated(c) && net.capacity(c) > 0) {
      return fail("critical edge of " + std::to_string(v) + " is saturated");
    }
    for (std::size_t r = net.in_rank(c); r < in.size(); ++r) {
      if (!state_.closed[in[r]]) {
        return fail("edge at or after the critical edge of " +
                    std::to_string(v) + " is open");
      }
      if (r > static_cast<std::size_t>(net.in_rank(c)) && !f.free(in[r])) {
        return fail("edge after the critical edge of " + std::to_string(v) +
                    " carries flow");
      }
    }
  }
  return true;
}

}  // namespace stableflow
