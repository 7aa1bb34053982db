#ifndef STABLEFLOW_ORACLE_H_
#define STABLEFLOW_ORACLE_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "stableflow/flow.h"
#include "stableflow/network.h"
#include "stableflow/stability.h"

namespace stableflow {

// Size limits of the brute force.
inline constexpr int kOracleMaxEdges = 10;
inline constexpr Amount kOracleMaxCapacity = 2;

// Stability straight from the definition: every unsaturated walk whose
// interior vertices are distinct is checked for domination at its first
// and last vertex. Walks with repeated interior vertices have the same end
// edges as a shorter such walk, so nothing is lost. No precondition check.
bool StableByDefinition(const Network& net, std::span<const Amount> values,
                        const StabilityMode& mode);

// Whether `values` lies in the assignment class that `mode` is about.
bool InModeClass(const Network& net, std::span<const Amount> values,
                 const StabilityMode& mode);

// All integral assignments in the mode's class that are stable by
// definition, in lexicographic order of the edge values.
struct StableSet {
  std::vector<std::vector<Amount>> members;

  bool contains(std::span<const Amount> values) const;
  std::size_t size() const { return members.size(); }
};

// Throws InstanceTooLarge beyond kOracleMaxEdges edges or a capacity above
// kOracleMaxCapacity.
StableSet EnumerateStable(const Network& net, const StabilityMode& mode);
// Same result; the assignment space is split across OpenMP threads.
StableSet EnumerateStableParallel(const Network& net,
                                  const StabilityMode& mode);

struct CrossCheckReport {
  std::int64_t assignments_checked = 0;
  std::int64_t stable_flows = 0;
  std::int64_t pairs_checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty(); }
};

// Runs both solvers, the verifier and the lattice operations against the
// brute force on one oracle-sized instance and records every disagreement.
CrossCheckReport CrossCheck(const Network& net);

// Seeded tiny instance suitable for the oracle: at most 6 vertices, at most
// 10 edges, capacities at most 2.
Network RandomTinyNetwork(std::uint64_t seed);

}  // namespace stableflow

#endif  // STABLEFLOW_ORACLE_H_
