#ifndef STABLEFLOW_FAST_SOLVER_H_
#define STABLEFLOW_FAST_SOLVER_H_

#include <cstdint>
#include <deque>
#include <vector>

#include "stableflow/basic_solver.h"
#include "stableflow/network.h"
#include "stableflow/solver_core.h"

namespace stableflow {

// A walk in the auxiliary graph: active edges traversed forward (tail to
// head), critical edges backward (head to tail).
struct ProperWalk {
  struct Step {
    EdgeId edge = kNoEdge;
    bool forward = true;
  };
  VertexId start = kNoVertex;
  std::vector<Step> steps;
};

// Vertices whose excess can be carried to a terminal along their parent
// edges without changing the auxiliary graph. parent[v] is the edge v hands
// its excess to (forward: v is its tail; backward: v is its head).
struct TreeForest {
  explicit TreeForest(int num_vertices = 0)
      : parent(num_vertices, kNoEdge),
        forward(num_vertices, 1),
        depth(num_vertices, -1) {}

  bool contains(VertexId v) const { return depth[v] >= 0; }
  void Add(VertexId v, EdgeId edge, bool is_forward, int d) {
    parent[v] = edge;
    forward[v] = is_forward ? 1 : 0;
    depth[v] = d;
    members.push_back(v);
  }
  void Clear() {
    for (VertexId v : members) {
      parent[v] = kNoEdge;
      depth[v] = -1;
    }
    members.clear();
  }

  std::vector<EdgeId> parent;
  std::vector<char> forward;
  // Edges to the terminal; terminals themselves are never members.
  std::vector<int> depth;
  std::vector<VertexId> members;
};

enum class BigIterationOutcome {
  kCycleCancelled,
  kTreesDrained,
  kEventSFM,
  kSolved,
};

enum class DrainOutcome { kAllZeroed, kEventSFM };

// Solver organized in big iterations over a fixed auxiliary graph. Excess is
// carried whole along the unique successor of each vertex (its active edge,
// or its critical edge backward when it has none) as long as no edge
// saturates, frees or changes role. A revisited vertex closes a cycle that
// is cancelled in one step; walks that reach a terminal become trees that
// later walks graft onto, and the trees are drained together.
class FastSolver : public SolverCore {
 public:
  explicit FastSolver(const Network& net);
  FastSolver(const Network& net, SolverState state);

  // Saturates the source edges and queues every excess vertex.
  void Initialize();

  BigIterationOutcome AdvanceBigIteration();

  // Shifts the largest amount around `cycle` that keeps it feasible and
  // returns it. Throws NotAProperCycle unless `cycle` is a simple closed
  // walk over kPlus edges forward and kMinus edges backward; throws
  // DegenerateCycle if the amount would be zero.
  Amount CancelCycle(const ProperWalk& cycle);

  // Moves the excess of every forest member to its parent, deepest first.
  // Stops at the first move that would saturate or free an edge and runs a
  // plain push or balancing step at that vertex instead.
  DrainOutcome DrainTrees(TreeForest& forest);

  // Initialize, then big iterations until solved.
  SolveResult Run();

  // When set, every big iteration checks that the auxiliary graph changes
  // only in its final operation; a violation throws std::logic_error.
  void set_check_constant_gamma(bool on) { check_constant_gamma_ = on; }

 protected:
  void OnExcessGain(VertexId v) override;

 private:
  struct Successor {
    EdgeId edge = kNoEdge;
    bool forward = true;
    VertexId next = kNoVertex;
  };
  Successor SuccessorOf(VertexId x) const;
  // True if moving `amount` over the successor edge keeps the graph fixed.
  bool Quiet(const Successor& s, Amount amount) const;
  void Move(const Successor& s, Amount amount);
  // Push or balancing step at x; always changes the auxiliary graph.
  void EventStep(VertexId x);
  void Enqueue(VertexId v);
  void RequeueExcessVertices();
  void ExpectNoEvent(std::int64_t before) const;

  std::deque<VertexId> pending_;
  std::vector<char> queued_;
  TreeForest forest_;
  std::vector<std::int64_t> stamp_;
  std::vector<int> walk_pos_;
  std::int64_t walk_id_ = 0;
  bool check_constant_gamma_ = false;
};

SolveResult RunFast(const Network& net);

}  // namespace stableflow

#endif  // STABLEFLOW_FAST_SOLVER_H_
