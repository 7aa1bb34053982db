#ifndef STABLEFLOW_QUASIFLOW_H_
#define STABLEFLOW_QUASIFLOW_H_

#include <cstdint>
#include <span>
#include <vector>

#include "stableflow/flow.h"
#include "stableflow/network.h"
#include "stableflow/solver_core.h"
#include "stableflow/stability.h"

namespace stableflow {

// How a reduced network relates to the original one. Original edge e keeps
// id e and original vertex v keeps id v; for a split vertex v is the copy
// holding the in-edges and out_vertex[v] the copy holding the out-edges.
struct ReductionMapping {
  int original_vertices = 0;
  int original_edges = 0;
  std::vector<VertexId> out_vertex;
  std::vector<EdgeId> split_edge;  // v' -> v'', or kNoEdge
  std::vector<EdgeId> gamma_edge;  // v (or v') -> added sink, or kNoEdge
  std::vector<EdgeId> beta_edge;   // added source -> v'', or kNoEdge
  VertexId added_source = kNoVertex;
  VertexId added_sink = kNoVertex;

  // Values of the original edges.
  std::vector<Amount> PullBack(std::span<const Amount> reduced) const;
};

struct Reduction {
  Network network;
  ReductionMapping mapping;
};

// Adds v -> t* with capacity gamma[v], least preferred at v, for every
// internal v with gamma[v] > 0. t* is a fresh sink created only if needed.
Reduction ReduceGamma(const Network& net, const ExcessBounds& bounds);

// Splits every internal v into v' (in-edges) and v'' (out-edges) joined by
// v'v'' of capacity sum of in-capacities + beta[v], and adds v' -> t*
// (capacity gamma[v]) and s* -> v'' (capacity beta[v]) behind v'v'' in the
// respective orders. Zero-capacity auxiliary edges are omitted.
Reduction ReduceBetaGamma(const Network& net, const ExcessBounds& bounds);

struct QuasiflowResult {
  std::vector<Amount> values;   // on the original edges
  std::vector<Amount> reduced;  // the stable flow of the reduced network
  RunStats stats;
};

// `kind` is kGammaPreflow (beta ignored) or kQuasiflow. The result meets
// the excess bounds and is stable in that mode.
QuasiflowResult SolveQuasiflow(const Network& net, const ExcessBounds& bounds,
                               StabilityKind kind);

// Independent uniform gamma and beta in [0, max_value] at internal vertices.
ExcessBounds RandomBounds(const Network& net, Amount max_value,
                          std::uint64_t seed);

// Throws InvalidArgument unless both tables have one nonnegative entry per
// vertex and are zero on terminals. `need_beta` = false skips beta.
void ValidateBounds(const Network& net, const ExcessBounds& bounds,
                    bool need_beta);

}  // namespace stableflow

#endif  // STABLEFLOW_QUASIFLOW_H_
