#ifndef STABLEFLOW_STABILITY_H_
#define STABLEFLOW_STABILITY_H_

#include <optional>
#include <string_view>
#include <vector>

#include "stableflow/flow.h"
#include "stableflow/network.h"

namespace stableflow {

// Which notion of stability to check.
//   kFlow / kPreflow: a walk is blocked if it is dominated at an internal
//     start vertex (every later out-edge free) or at an internal end vertex
//     (every later in-edge free). kFlow additionally requires a flow.
//   kGammaPreflow: as above, but domination at the start also needs zero
//     excess there.
//   kQuasiflow: domination at the start needs excess <= 0, domination at
//     the end needs excess >= 0.
enum class StabilityKind { kFlow, kPreflow, kGammaPreflow, kQuasiflow };

struct StabilityMode {
  StabilityKind kind = StabilityKind::kFlow;
  // Required for kGammaPreflow (gamma) and kQuasiflow (gamma and beta).
  const ExcessBounds* bounds = nullptr;

  static StabilityMode Flow() { return {StabilityKind::kFlow, nullptr}; }
  static StabilityMode Preflow() { return {StabilityKind::kPreflow, nullptr}; }
  static StabilityMode GammaPreflow(const ExcessBounds& b) {
    return {StabilityKind::kGammaPreflow, &b};
  }
  static StabilityMode Quasiflow(const ExcessBounds& b) {
    return {StabilityKind::kQuasiflow, &b};
  }
};

std::string_view StabilityKindName(StabilityKind kind);

// An unsaturated directed walk that is dominated neither at its first nor
// at its last vertex. start == end is allowed.
struct StabilityWitness {
  VertexId start = kNoVertex;
  VertexId end = kNoVertex;
  std::vector<EdgeId> edges;
};

// Throws ModeMismatch unless `values` is of the kind `mode` expects.
void CheckModePrecondition(const Network& net, std::span<const Amount> values,
                           const StabilityMode& mode);

// Returns a shortest blocking walk, or nullopt when the assignment is stable
// in `mode`. Among shortest walks the one ending in the lowest edge id wins.
std::optional<StabilityWitness> FindWitness(const Network& net,
                                            std::span<const Amount> values,
                                            const StabilityMode& mode);
inline std::optional<StabilityWitness> FindWitness(
    const FlowAssignment& f, const StabilityMode& mode) {
  return FindWitness(f.network(), f.values(), mode);
}

// Same search without the precondition check; the eligibility rules are
// well defined for any feasible assignment.
std::optional<StabilityWitness> SearchWitness(const Network& net,
                                              std::span<const Amount> values,
                                              const StabilityMode& mode);

// Edge-level eligibility used by the search, exposed for witness replay.
bool StartEligible(const Network& net, std::span<const Amount> values,
                   std::span<const Amount> excess, EdgeId e,
                   const StabilityMode& mode);
bool EndEligible(const Network& net, std::span<const Amount> values,
                 std::span<const Amount> excess, EdgeId e,
                 const StabilityMode& mode);

// Every S->T walk and every walk from an excess internal vertex to T
// contains a saturated edge. Throws NotAPreflow for other assignments.
bool IsFullyBlocking(const Network& net, std::span<const Amount> values);
inline bool IsFullyBlocking(const FlowAssignment& f) {
  return IsFullyBlocking(f.network(), f.values());
}

}  // namespace stableflow

#endif  // STABLEFLOW_STABILITY_H_
