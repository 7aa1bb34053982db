#include "stableflow/quasiflow.h"

#include <string>
#include <utility>

#include "stableflow/error.h"
#include "stableflow/fast_solver.h"
#include "stableflow/random.h"

namespace stableflow {
namespace {

void CheckTable(const Network& net, const std::vector<Amount>& table,
                const char* name) {
  if (static_cast<int>(table.size()) != net.num_vertices()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(name) + " table needs one entry per vertex");
  }
  for (VertexId v = 0; v < net.num_vertices(); ++v) {
    if (table[v] < 0 || table[v] > kMaxCapacity) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(name) + " of vertex " + std::to_string(v) +
                      " out of range");
    }
    if (net.is_terminal(v) && table[v] != 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(name) + " given for terminal " +
                      std::to_string(v));
    }
  }
}

ReductionMapping BlankMapping(const Network& net) {
  ReductionMapping map;
  map.original_vertices = net.num_vertices();
  map.original_edges = net.num_edges();
  map.out_vertex.resize(net.num_vertices());
  for (VertexId v = 0; v < net.num_vertices(); ++v) map.out_vertex[v] = v;
  map.split_edge.assign(net.num_vertices(), kNoEdge);
  map.gamma_edge.assign(net.num_vertices(), kNoEdge);
  map.beta_edge.assign(net.num_vertices(), kNoEdge);
  return map;
}

EdgeId AddEdge(NetworkSpec& spec, VertexId tail, VertexId head, Amount cap) {
  spec.edges.push_back({tail, head, cap});
  return static_cast<EdgeId>(spec.edges.size()) - 1;
}

VertexId AddVertex(NetworkSpec& spec) {
  spec.in_pref.emplace_back();
  spec.out_pref.emplace_back();
  return spec.num_vertices++;
}

}  // namespace

void ValidateBounds(const Network& net, const ExcessBounds& bounds,
                    bool need_beta) {
  CheckTable(net, bounds.gamma, "gamma");
  if (need_beta) CheckTable(net, bounds.beta, "beta");
}

std::vector<Amount> ReductionMapping::PullBack(
    std::span<const Amount> reduced) const {
  return {reduced.begin(), reduced.begin() + original_edges};
}

Reduction ReduceGamma(const Network& net, const ExcessBounds& bounds) {
  ValidateBounds(net, bounds, false);
  NetworkSpec spec = net.ToSpec();
  ReductionMapping map = BlankMapping(net);
  for (VertexId v = 0; v < net.num_vertices(); ++v) {
    if (!net.is_internal(v) || bounds.gamma[v] == 0) continue;
    if (map.added_sink == kNoVertex) {
      map.added_sink = AddVertex(spec);
      spec.sinks.push_back(map.added_sink);
    }
    const EdgeId e = AddEdge(spec, v, map.added_sink, bounds.gamma[v]);
    spec.out_pref[v].push_back(e);
    map.gamma_edge[v] = e;
  }
  Network reduced = Network::Build(std::move(spec));
  return {std::move(reduced), std::move(map)};
}

Reduction ReduceBetaGamma(const Network& net, const ExcessBounds& bounds) {
  ValidateBounds(net, bounds, true);
  NetworkSpec spec = net.ToSpec();
  ReductionMapping map = BlankMapping(net);
  for (VertexId v = 0; v < net.num_vertices(); ++v) {
    if (!net.is_internal(v)) continue;
    const VertexId second = AddVertex(spec);
    map.out_vertex[v] = second;
    spec.out_pref[second] = std::move(spec.out_pref[v]);
    spec.out_pref[v].clear();
  }
  for (Edge& edge : spec.edges) edge.tail = map.out_vertex[edge.tail];

  for (VertexId v = 0; v < net.num_vertices(); ++v) {
    if (!net.is_internal(v)) continue;
    Amount inflow = 0;
    for (EdgeId e : net.in_edges(v)) inflow += net.capacity(e);
    const VertexId second = map.out_vertex[v];
    const EdgeId split = AddEdge(spec, v, second, inflow + bounds.beta[v]);
    map.split_edge[v] = split;
    spec.out_pref[v].push_back(split);
    spec.in_pref[second].push_back(split);
    if (bounds.gamma[v] > 0) {
      if (map.added_sink == kNoVertex) {
        map.added_sink = AddVertex(spec);
        spec.sinks.push_back(map.added_sink);
      }
      const EdgeId e = AddEdge(spec, v, map.added_sink, bounds.gamma[v]);
      spec.out_pref[v].push_back(e);
      map.gamma_edge[v] = e;
    }
    if (bounds.beta[v] > 0) {
      if (map.added_source == kNoVertex) {
        map.added_source = AddVertex(spec);
        spec.sources.push_back(map.added_source);
      }
      const EdgeId e = AddEdge(spec, map.added_source, second, bounds.beta[v]);
      spec.in_pref[second].push_back(e);
      map.beta_edge[v] = e;
    }
  }
  Network reduced = Network::Build(std::move(spec));
  return {std::move(reduced), std::move(map)};
}

ExcessBounds RandomBounds(const Network& net, Amount max_value,
                          std::uint64_t seed) {
  Rng rng(seed);
  ExcessBounds b = ExcessBounds::Zero(net);
  for (VertexId v = 0; v < net.num_vertices(); ++v) {
    if (!net.is_internal(v)) continue;
    b.gamma[v] = rng.Between(0, max_value);
    b.beta[v] = rng.Between(0, max_value);
  }
  return b;
}

QuasiflowResult SolveQuasiflow(const Network& net, const ExcessBounds& bounds,
                               StabilityKind kind) {
  if (kind != StabilityKind::kGammaPreflow &&
      kind != StabilityKind::kQuasiflow) {
    throw Error(ErrorCode::kModeMismatch,
                "quasiflow solving needs gamma or quasi mode, got " +
                    std::string(StabilityKindName(kind)));
  }
  const Reduction red = kind == StabilityKind::kGammaPreflow
                            ? ReduceGamma(net, bounds)
                            : ReduceBetaGamma(net, bounds);
  SolveResult solved = RunFast(red.network);
  QuasiflowResult result;
  result.reduced.assign(solved.flow.values().begin(),
                        solved.flow.values().end());
  result.values = red.mapping.PullBack(result.reduced);
  result.stats = std::move(solved.stats);
  return result;
}

}  // namespace stableflow
