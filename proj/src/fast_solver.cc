#include "stableflow/fast_solver.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "stableflow/error.h"

namespace stableflow {

FastSolver::FastSolver(const Network& net)
    : SolverCore(net),
      queued_(net.num_vertices(), 0),
      forest_(net.num_vertices()),
      stamp_(net.num_vertices(), 0),
      walk_pos_(net.num_vertices(), 0) {}

FastSolver::FastSolver(const Network& net, SolverState state)
    : SolverCore(net, std::move(state)),
      queued_(net.num_vertices(), 0),
      forest_(net.num_vertices()),
      stamp_(net.num_vertices(), 0),
      walk_pos_(net.num_vertices(), 0) {}

void FastSolver::Enqueue(VertexId v) {
  if (queued_[v]) return;
  queued_[v] = 1;
  pending_.push_back(v);
}

void FastSolver::OnExcessGain(VertexId v) { Enqueue(v); }

void FastSolver::RequeueExcessVertices() {
  const Network& net = network();
  std::deque<VertexId> kept;
  for (VertexId v : pending_) {
    if (flow().excess(v) > 0) {
      kept.push_back(v);
    } else {
      queued_[v] = 0;
    }
  }
  pending_ = std::move(kept);
  for (VertexId v = 0; v < net.num_vertices(); ++v) {
    if (net.is_internal(v) && flow().excess(v) > 0) Enqueue(v);
  }
}

void FastSolver::Initialize() {
  SaturateSources();
  RequeueExcessVertices();
}

FastSolver::Successor FastSolver::SuccessorOf(VertexId x) const {
  const Network& net = network();
  const SolverState& s = state();
  if (s.active[x] != kNoEdge) {
    const EdgeId e = s.active[x];
    return {e, true, net.head(e)};
  }
  const EdgeId c = s.critical[x];
  if (c != kNoEdge && !flow().free(c)) return {c, false, net.tail(c)};
  return {};
}

bool FastSolver::Quiet(const Successor& s, Amount amount) const {
  return s.forward ? flow().residual(s.edge) > amount
                   : flow()[s.edge] > amount;
}

void FastSolver::Move(const Successor& s, Amount amount) {
  if (amount <= 0) return;
  if (s.forward) {
    Increase(s.edge, amount);
  } else {
    Decrease(s.edge, amount);
  }
}

void FastSolver::EventStep(VertexId x) {
  if (state().active[x] != kNoEdge) {
    set_phase(UpdatePhase::kPush);
    PushAt(x);
  } else {
    set_phase(UpdatePhase::kBalance);
    BalanceAt(x);
  }
}

void FastSolver::ExpectNoEvent(std::int64_t before) const {
  if (check_constant_gamma_ && event_count() != before) {
    throw std::logic_error("auxiliary graph changed inside a big iteration");
  }
}

Amount FastSolver::CancelCycle(const ProperWalk& cycle) {
  const Network& net = network();
  const SolverState& s = state();
  auto reject = [](const std::string& why) {
    throw Error(ErrorCode::kNotAProperCycle, why);
  };
  if (cycle.steps.empty()) reject("empty cycle");
  std::vector<char> seen(net.num_vertices(), 0);
  VertexId x = cycle.start;
  Amount delta = kMaxCapacity;
  for (const ProperWalk::Step& step : cycle.steps) {
    const EdgeId e = step.edge;
    if (x < 0 || x >= net.num_vertices() || !net.is_internal(x)) {
      reject("cycle leaves the internal vertices");
    }
    if (seen[x]) reject("vertex " + std::to_string(x) + " repeats");
    seen[x] = 1;
    if (e < 0 || e >= net.num_edges()) reject("bad edge id");
    if (step.forward) {
      if (net.tail(e) != x || s.active[x] != e || role(e) != GammaRole::kPlus) {
        reject("edge " + std::to_string(e) + " is not active at its tail");
      }
      delta = std::min(delta, flow().residual(e));
      x = net.head(e);
    } else {
      if (net.head(e) != x || s.critical[x] != e ||
          role(e) != GammaRole::kMinus) {
        reject("edge " + std::to_string(e) + " is not critical at its head");
      }
      delta = std::min(delta, flow()[e]);
      x = net.tail(e);
    }
  }
  if (x != cycle.start) reject("walk does not return to its start");
  if (delta <= 0) {
    throw Error(ErrorCode::kDegenerateCycle, "cycle admits no shift");
  }
  set_phase(UpdatePhase::kCycle);
  for (const ProperWalk::Step& step : cycle.steps) {
    if (step.forward) {
      Increase(step.edge, delta);
    } else {
      Decrease(step.edge, delta);
    }
  }
  ++mutable_stats().cycles_cancelled;
  return delta;
}

DrainOutcome FastSolver::DrainTrees(TreeForest& forest) {
  const Network& net = network();
  std::vector<VertexId> order = forest.members;
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return forest.depth[a] > forest.depth[b];
  });
  set_phase(UpdatePhase::kDrain);
  const std::int64_t before = event_count();
  for (VertexId x : order) {
    const Amount d = flow().excess(x);
    if (d <= 0) continue;
    const EdgeId e = forest.parent[x];
    const bool fwd = forest.forward[x] != 0;
    const Successor s{e, fwd, fwd ? net.head(e) : net.tail(e)};
    if (!Quiet(s, d)) {
      EventStep(x);
      return DrainOutcome::kEventSFM;
    }
    set_phase(UpdatePhase::kDrain);
    Move(s, d);
    ExpectNoEvent(before);
  }
  ++mutable_stats().trees_drained;
  return DrainOutcome::kAllZeroed;
}

BigIterationOutcome FastSolver::AdvanceBigIteration() {
  const Network& net = network();
  RequeueExcessVertices();
  if (pending_.empty()) return BigIterationOutcome::kSolved;

  BeginBigIteration();
  const std::int64_t before = event_count();
  BigIterationOutcome outcome = BigIterationOutcome::kEventSFM;
  std::vector<VertexId> walk;
  std::vector<Successor> steps;
  bool done = false;
  while (!done) {
    VertexId v0 = kNoVertex;
    while (!pending_.empty()) {
      const VertexId v = pending_.front();
      pending_.pop_front();
      queued_[v] = 0;
      if (flow().excess(v) > 0 && !forest_.contains(v)) {
        v0 = v;
        break;
      }
    }
    if (v0 == kNoVertex) {
      outcome = DrainTrees(forest_) == DrainOutcome::kAllZeroed
                    ? BigIterationOutcome::kTreesDrained
                    : BigIterationOutcome::kEventSFM;
      break;
    }

    ++walk_id_;
    walk.assign(1, v0);
    steps.clear();
    stamp_[v0] = walk_id_;
    walk_pos_[v0] = 0;
    VertexId x = v0;
    while (true) {
      const Amount d = flow().excess(x);
      const Successor s = SuccessorOf(x);
      if (s.edge == kNoEdge) {
        RunStats& st = mutable_stats();
        const std::int64_t updates = st.updates_total;
        ++st.fallback_steps;
        EventStep(x);
        st.fallback_updates += st.updates_total - updates;
        done = true;
        break;
      }
      const VertexId y = s.next;
      if (net.is_internal(y) && stamp_[y] == walk_id_) {
        ProperWalk cycle;
        cycle.start = y;
        for (std::size_t i = walk_pos_[y]; i < steps.size(); ++i) {
          cycle.steps.push_back({steps[i].edge, steps[i].forward});
        }
        cycle.steps.push_back({s.edge, s.forward});
        CancelCycle(cycle);
        outcome = BigIterationOutcome::kCycleCancelled;
        done = true;
        break;
      }
      if (!Quiet(s, d)) {
        EventStep(x);
        done = true;
        break;
      }
      set_phase(UpdatePhase::kWalk);
      Move(s, d);
      ExpectNoEvent(before);
      steps.push_back(s);
      const bool terminal = net.is_terminal(y);
      if (terminal || forest_.contains(y)) {
        const int base = terminal ? 0 : forest_.depth[y];
        const int len = static_cast<int>(steps.size());
        for (int i = 0; i < len; ++i) {
          forest_.Add(walk[i], steps[i].edge, steps[i].forward,
                      base + len - i);
        }
        break;
      }
      stamp_[y] = walk_id_;
      walk_pos_[y] = static_cast<int>(walk.size());
      walk.push_back(y);
      x = y;
    }
  }
  forest_.Clear();
  EndBigIteration();
  return outcome;
}

SolveResult FastSolver::Run() {
  Initialize();
  while (AdvanceBigIteration() != BigIterationOutcome::kSolved) {
  }
  return {flow(), stats()};
}

SolveResult RunFast(const Network& net) {
  FastSolver solver(net);
  return solver.Run();
}

}  // namespace stableflow
