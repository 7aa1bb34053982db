#ifndef STABLEFLOW_BASIC_SOLVER_H_
#define STABLEFLOW_BASIC_SOLVER_H_

#include "stableflow/flow.h"
#include "stableflow/network.h"
#include "stableflow/solver_core.h"

namespace stableflow {

struct SolveResult {
  FlowAssignment flow;
  RunStats stats;
};

// Balancing/pushing solver. Vertices are taken from both queues in FIFO
// order. A big iteration is the initial push phase or one balancing followed
// by its push phase.
class BasicSolver : public SolverCore {
 public:
  explicit BasicSolver(const Network& net);
  // Resumes from a reconstructed state. Queues are taken as given.
  BasicSolver(const Network& net, SolverState state);

  // Saturates the source edges and drains New by pushing. Afterwards every
  // internal vertex with excess has no active edge and is in Excess.
  void InitialIteration();

  // Balances v, then runs a push phase.
  void Balance(VertexId v);

  // Pushes every vertex of New; vertices left with excess move to Excess.
  void PushPhase();

  // Balances vertices of Excess until it is empty.
  // Balances the next excess vertex; false once the queue is exhausted.
  bool Step();
  void RunToCompletion();

  // InitialIteration + RunToCompletion.
  SolveResult Run();

 protected:
  void OnExcessGain(VertexId v) override;
};

SolveResult RunBasic(const Network& net);

}  // namespace stableflow

#endif  // STABLEFLOW_BASIC_SOLVER_H_
