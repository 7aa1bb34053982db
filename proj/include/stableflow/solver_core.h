#ifndef STABLEFLOW_SOLVER_CORE_H_
#define STABLEFLOW_SOLVER_CORE_H_

#include <cstdint>
#include <deque>
#include <string>
#include <string_view>
#include <vector>

#include "stableflow/flow.h"
#include "stableflow/network.h"

namespace stableflow {

// Mutable state shared by both solvers.
//
// active[v]   the pushable out-edge of internal v, or kNoEdge. When set it
//             is unsaturated and open, every later out-edge is free and
//             every earlier one is saturated or closed.
// critical[v] the leftmost in-edge decreased by the last balancing at v, or
//             kNoEdge if v was never balanced. It is unsaturated and every
//             later in-edge is free and closed.
// closed[e]   e may never be increased again. Monotone.
struct SolverState {
  explicit SolverState(const Network& net);

  FlowAssignment flow;
  std::vector<EdgeId> active;
  std::vector<EdgeId> critical;
  std::vector<char> closed;
  std::deque<VertexId> excess_queue;
  std::deque<VertexId> new_queue;
  std::vector<char> in_excess_queue;
  std::vector<char> in_new_queue;
};

enum class UpdatePhase : std::uint8_t {
  kInit,
  kPush,
  kBalance,
  kWalk,
  kCycle,
  kDrain,
};

std::string_view UpdatePhaseName(UpdatePhase phase);

// One elementary flow update: `delta` added to f(edge).
struct TraceEntry {
  EdgeId edge = kNoEdge;
  Amount delta = 0;
  UpdatePhase phase = UpdatePhase::kInit;
};

struct RunStats {
  std::int64_t big_iterations = 0;
  std::int64_t updates_total = 0;
  std::int64_t updates_max_per_big_iteration = 0;
  std::int64_t s_events = 0;
  std::int64_t f_events = 0;
  std::int64_t m_events = 0;
  // Updates made before the first big iteration (source saturation).
  std::int64_t init_updates = 0;
  std::int64_t cycles_cancelled = 0;
  std::int64_t trees_drained = 0;
  // Walks whose start vertex had no edge of the auxiliary graph to follow,
  // so a plain balancing step was executed instead.
  std::int64_t fallback_steps = 0;
  std::int64_t fallback_updates = 0;
  // Per-edge event tallies.
  std::vector<int> saturations;
  std::vector<int> freeings;
  std::vector<int> gamma_additions;
  // Elementary updates made in each big iteration, in order.
  std::vector<std::int64_t> big_iteration_updates;
};

// Membership of an edge in the auxiliary graph: kPlus for the active edge of
// its tail (free or middle), kMinus for any other middle edge.
enum class GammaRole : std::uint8_t { kNone, kPlus, kMinus };

struct GammaGraph {
  std::vector<EdgeId> plus;
  std::vector<EdgeId> minus;
  bool empty() const { return plus.empty() && minus.empty(); }
};

// Elementary operations on a SolverState with event accounting. Every flow
// change goes through Increase/Decrease so that the excess table, the
// per-edge roles and the S/F/M counters stay current.
class SolverCore {
 public:
  // Zero flow, active pointers on the first usable out-edge.
  explicit SolverCore(const Network& net);
  SolverCore(const Network& net, SolverState state);
  virtual ~SolverCore() = default;

  SolverCore(const SolverCore&) = delete;
  SolverCore& operator=(const SolverCore&) = delete;

  const Network& network() const { return *net_; }
  const SolverState& state() const { return state_; }
  const FlowAssignment& flow() const { return state_.flow; }
  const RunStats& stats() const { return stats_; }

  // Collect one TraceEntry per elementary update into `sink` (may be null).
  void set_trace(std::vector<TraceEntry>* sink) { trace_ = sink; }

  GammaRole role(EdgeId e) const { return roles_[e]; }

  // Auxiliary graph of the current state. Throws PartitionViolation when a
  // kMinus edge is not the critical edge of its head or a kPlus edge is
  // closed, which would mean the state is corrupt.
  GammaGraph BuildGamma() const;

  // Checks the solver invariants: unsaturated source edges closed, active
  // and critical pointers as documented on SolverState, balanced vertices
  // without an active edge, cached excesses and roles current. On failure
  // returns false and describes the first violation in `why`.
  bool CheckInvariants(std::string* why = nullptr) const;

 protected:
  // Called whenever the excess of internal vertex v grows.
  virtual void OnExcessGain(VertexId v) = 0;

  SolverState& mutable_state() { return state_; }
  RunStats& mutable_stats() { return stats_; }
  void set_phase(UpdatePhase phase) { phase_ = phase; }
  std::int64_t event_count() const {
    return stats_.s_events + stats_.f_events + stats_.m_events;
  }

  void Increase(EdgeId e, Amount delta);
  void Decrease(EdgeId e, Amount delta);
  void Close(EdgeId e);
  // Moves active[u] right past closed or saturated edges.
  void NormalizeActive(VertexId u);

  // f := c on every source edge.
  void SaturateSources();
  // Raises f along the open out-edges of u from its active edge onward
  // until the excess of u vanishes or no open edge is left.
  void PushAt(VertexId u);
  // Cancels the excess of u by decreasing its least preferred positive
  // in-edges, then closes the new critical edge and everything after it.
  void BalanceAt(VertexId v);

  // Big-iteration bookkeeping.
  void BeginBigIteration();
  void EndBigIteration();

  void CheckGuard() const;

 private:
  void RefreshRole(EdgeId e);
  GammaRole ComputeRole(EdgeId e) const;
  void RecordUpdate(EdgeId e, Amount delta);

  const Network* net_;
  SolverState state_;
  RunStats stats_;
  std::vector<GammaRole> roles_;
  std::vector<TraceEntry>* trace_ = nullptr;
  UpdatePhase phase_ = UpdatePhase::kInit;
  bool in_big_iteration_ = false;
  std::int64_t big_iteration_updates_ = 0;
  std::int64_t update_guard_ = 0;
};

}  // namespace stableflow

#endif  // STABLEFLOW_SOLVER_CORE_H_
