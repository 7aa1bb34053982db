#include "stableflow/basic_solver.h"

#include <utility>

namespace stableflow {

BasicSolver::BasicSolver(const Network& net) : SolverCore(net) {}

BasicSolver::BasicSolver(const Network& net, SolverState state)
    : SolverCore(net, std::move(state)) {}

void BasicSolver::OnExcessGain(VertexId v) {
  SolverState& s = mutable_state();
  if (s.in_excess_queue[v] || s.in_new_queue[v]) return;
  s.in_new_queue[v] = 1;
  s.new_queue.push_back(v);
}

void BasicSolver::PushPhase() {
  SolverState& s = mutable_state();
  set_phase(UpdatePhase::kPush);
  while (!s.new_queue.empty()) {
    const VertexId u = s.new_queue.front();
    s.new_queue.pop_front();
    s.in_new_queue[u] = 0;
    PushAt(u);
    if (s.flow.excess(u) > 0 && !s.in_excess_queue[u]) {
      s.in_excess_queue[u] = 1;
      s.excess_queue.push_back(u);
    }
  }
}

void BasicSolver::InitialIteration() {
  SaturateSources();
  BeginBigIteration();
  PushPhase();
  EndBigIteration();
}

void BasicSolver::Balance(VertexId v) {
  BeginBigIteration();
  set_phase(UpdatePhase::kBalance);
  BalanceAt(v);
  PushPhase();
  EndBigIteration();
}

void BasicSolver::RunToCompletion() {
  SolverState& s = mutable_state();
  if (!s.new_queue.empty()) {
    BeginBigIteration();
    PushPhase();
    EndBigIteration();
  }
  while (Step()) {
  }
}

bool BasicSolver::Step() {
  SolverState& s = mutable_state();
  while (!s.excess_queue.empty()) {
    const VertexId v = s.excess_queue.front();
    s.excess_queue.pop_front();
    s.in_excess_queue[v] = 0;
    if (s.flow.excess(v) > 0) {
      Balance(v);
      return true;
    }
  }
  return false;
}

SolveResult BasicSolver::Run() {
  InitialIteration();
  RunToCompletion();
  return {flow(), stats()};
}

SolveResult RunBasic(const Network& net) {
  BasicSolver solver(net);
  return solver.Run();
}

}  // namespace stableflow
