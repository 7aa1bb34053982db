#include "stableflow/stability.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "stableflow/error.h"

namespace stableflow {
namespace {

bool UsesStrongStart(StabilityKind kind) {
  return kind == StabilityKind::kGammaPreflow ||
         kind == StabilityKind::kQuasiflow;
}

// Rank of the last positive edge in each internal vertex's lists, or -1.
struct LastPositive {
  std::vector<int> in;
  std::vector<int> out;
};

LastPositive ComputeLastPositive(const Network& net,
                                 std::span<const Amount> values) {
  LastPositive last{std::vector<int>(net.num_vertices(), -1),
                    std::vector<int>(net.num_vertices(), -1)};
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    if (values[e] <= 0) continue;
    const VertexId u = net.tail(e);
    const VertexId v = net.head(e);
    if (net.is_internal(u) && net.out_rank(e) > last.out[u]) {
      last.out[u] = net.out_rank(e);
    }
    if (net.is_internal(v) && net.in_rank(e) > last.in[v]) {
      last.in[v] = net.in_rank(e);
    }
  }
  return last;
}

bool StartEligibleFast(const Network& net, std::span<const Amount> excess,
                       const LastPositive& last, EdgeId e,
                       const StabilityMode& mode) {
  const VertexId u = net.tail(e);
  if (net.is_source(u)) return true;
  if (!net.is_internal(u)) return false;
  if (net.out_rank(e) < last.out[u]) return true;
  return UsesStrongStart(mode.kind) && excess[u] > 0;
}

bool EndEligibleFast(const Network& net, std::span<const Amount> excess,
                     const LastPositive& last, EdgeId e,
                     const StabilityMode& mode) {
  const VertexId v = net.head(e);
  if (net.is_sink(v)) return true;
  if (!net.is_internal(v)) return false;
  if (net.in_rank(e) < last.in[v]) return true;
  return mode.kind == StabilityKind::kQuasiflow && excess[v] < 0;
}

void RequireBounds(const Network& net, const StabilityMode& mode,
                   bool need_beta) {
  const ExcessBounds* b = mode.bounds;
  const auto n = static_cast<std::size_t>(net.num_vertices());
  if (b == nullptr || b->gamma.size() != n ||
      (need_beta && b->beta.size() != n)) {
    throw Error(ErrorCode::kModeMismatch,
                std::string(StabilityKindName(mode.kind)) +
                    " mode needs excess bounds for every vertex");
  }
}

[[noreturn]] void Mismatch(const StabilityMode& mode, const std::string& why) {
  throw Error(ErrorCode::kModeMismatch,
              std::string(StabilityKindName(mode.kind)) + " mode: " + why);
}

}  // namespace

std::string_view StabilityKindName(StabilityKind kind) {
  switch (kind) {
    case StabilityKind::kFlow: return "flow";
    case StabilityKind::kPreflow: return "preflow";
    case StabilityKind::kGammaPreflow: return "gamma";
    case StabilityKind::kQuasiflow: return "quasi";
  }
  return "unknown";
}

void CheckModePrecondition(const Network& net, std::span<const Amount> values,
                           const StabilityMode& mode) {
  if (static_cast<int>(values.size()) != net.num_edges()) {
    Mismatch(mode, "assignment size does not match the edge count");
  }
  const FlowClass cls = Classify(net, values);
  switch (mode.kind) {
    case StabilityKind::kFlow:
      if (cls != FlowClass::kFlow) Mismatch(mode, "assignment is not a flow");
      return;
    case StabilityKind::kPreflow:
      if (cls != FlowClass::kFlow && cls != FlowClass::kPreflow) {
        Mismatch(mode, "assignment is not a preflow");
      }
      return;
    case StabilityKind::kGammaPreflow:
    case StabilityKind::kQuasiflow: {
      const bool quasi = mode.kind == StabilityKind::kQuasiflow;
      RequireBounds(net, mode, quasi);
      if (cls == FlowClass::kInfeasible) Mismatch(mode, "infeasible values");
      const std::vector<Amount> excess = ComputeExcesses(net, values);
      for (VertexId v = 0; v < net.num_vertices(); ++v) {
        if (!net.is_internal(v)) continue;
        const Amount lower = quasi ? -mode.bounds->beta[v] : 0;
        if (excess[v] < lower || excess[v] > mode.bounds->gamma[v]) {
          Mismatch(mode, "excess " + std::to_string(excess[v]) +
                             " at vertex " + std::to_string(v) +
                             " is outside its bounds");
        }
      }
      return;
    }
  }
}

bool StartEligible(const Network& net, std::span<const Amount> values,
                   std::span<const Amount> excess, EdgeId e,
                   const StabilityMode& mode) {
  return StartEligibleFast(net, excess, ComputeLastPositive(net, values), e,
                           mode);
}

bool EndEligible(const Network& net, std::span<const Amount> values,
                 std::span<const Amount> excess, EdgeId e,
                 const StabilityMode& mode) {
  return EndEligibleFast(net, excess, ComputeLastPositive(net, values), e,
                         mode);
}

std::optional<StabilityWitness> SearchWitness(const Network& net,
                                              std::span<const Amount> values,
                                              const StabilityMode& mode) {
  const int n = net.num_vertices();
  const int m = net.num_edges();
  const std::vector<Amount> excess = ComputeExcesses(net, values);
  const LastPositive last = ComputeLastPositive(net, values);
  auto unsaturated = [&](EdgeId e) { return values[e] < net.capacity(e); };

  // dist[v]: fewest edges of an unsaturated walk that starts with a
  // start-eligible edge and ends at v.
  constexpr int kUnreached = std::numeric_limits<int>::max();
  std::vector<int> dist(n, kUnreached);
  std::vector<EdgeId> parent(n, kNoEdge);
  std::vector<char> start_ok(m, 0);
  std::deque<VertexId> queue;
  for (EdgeId e = 0; e < m; ++e) {
    if (!unsaturated(e) || !StartEligibleFast(net, excess, last, e, mode)) {
      continue;
    }
    start_ok[e] = 1;
    const VertexId v = net.head(e);
    if (dist[v] == kUnreached) {
      dist[v] = 1;
      parent[v] = e;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (EdgeId e : net.out_edges(x)) {
      const VertexId y = net.head(e);
      if (!unsaturated(e) || dist[y] != kUnreached) continue;
      dist[y] = dist[x] + 1;
      parent[y] = e;
      queue.push_back(y);
    }
  }

  EdgeId best = kNoEdge;
  int best_len = kUnreached;
  for (EdgeId e = 0; e < m; ++e) {
    if (!unsaturated(e) || !EndEligibleFast(net, excess, last, e, mode)) {
      continue;
    }
    int len = kUnreached;
    if (start_ok[e]) {
      len = 1;
    } else if (dist[net.tail(e)] != kUnreached) {
      len = dist[net.tail(e)] + 1;
    }
    if (len < best_len) {
      best_len = len;
      best = e;
    }
  }
  if (best == kNoEdge) return std::nullopt;

  StabilityWitness witness;
  witness.end = net.head(best);
  witness.edges.push_back(best);
  if (best_len > 1) {
    for (VertexId x = net.tail(best);;) {
      const EdgeId p = parent[x];
      witness.edges.push_back(p);
      if (dist[x] == 1) break;
      x = net.tail(p);
    }
  }
  std::reverse(witness.edges.begin(), witness.edges.end());
  witness.start = net.tail(witness.edges.front());
  return witness;
}

std::optional<StabilityWitness> FindWitness(const Network& net,
                                            std::span<const Amount> values,
                                            const StabilityMode& mode) {
  CheckModePrecondition(net, values, mode);
  return SearchWitness(net, values, mode);
}

bool IsFullyBlocking(const Network& net, std::span<const Amount> values) {
  if (static_cast<int>(values.size()) != net.num_edges()) {
    throw Error(ErrorCode::kNotAPreflow, "assignment size mismatch");
  }
  const FlowClass cls = Classify(net, values);
  if (cls != FlowClass::kPreflow && cls != FlowClass::kFlow) {
    throw Error(ErrorCode::kNotAPreflow,
                "assignment is " + std::string(FlowClassName(cls)));
  }
  const std::vector<Amount> excess = ComputeExcesses(net, values);
  std::vector<char> seen(net.num_vertices(), 0);
  std::deque<VertexId> queue;
  for (VertexId v = 0; v < net.num_vertices(); ++v) {
    if (net.is_source(v) || (net.is_internal(v) && excess[v] > 0)) {
      seen[v] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    if (net.is_sink(x)) return false;
    for (EdgeId e : net.out_edges(x)) {
      const VertexId y = net.head(e);
      if (values[e] < net.capacity(e) && !seen[y]) {
        seen[y] = 1;
        queue.push_back(y);
      }
    }
  }
  return true;
}

}  // namespace stableflow
