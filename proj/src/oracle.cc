#include "stableflow/oracle.h"

#include <algorithm>
#include <string>

#include "stableflow/basic_solver.h"
#include "stableflow/error.h"
#include "stableflow/fast_solver.h"
#include "stableflow/lattice.h"
#include "stableflow/random.h"

namespace stableflow {
namespace {

struct Space {
  std::vector<Amount> radix;
  std::int64_t size = 1;
};

Space AssignmentSpace(const Network& net) {
  if (net.num_edges() > kOracleMaxEdges) {
    throw Error(ErrorCode::kInstanceTooLarge,
                std::to_string(net.num_edges()) + " edges, limit " +
                    std::to_string(kOracleMaxEdges));
  }
  Space space;
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    if (net.capacity(e) > kOracleMaxCapacity) {
      throw Error(ErrorCode::kInstanceTooLarge,
                  "capacity " + std::to_string(net.capacity(e)) +
                      " on edge " + std::to_string(e));
    }
    space.radix.push_back(net.capacity(e) + 1);
    space.size *= net.capacity(e) + 1;
  }
  return space;
}

// Edge 0 is the most significant digit, so increasing indices are in
// lexicographic order.
void Decode(const Space& space, std::int64_t index, std::vector<Amount>& out) {
  out.resize(space.radix.size());
  for (int e = static_cast<int>(space.radix.size()) - 1; e >= 0; --e) {
    out[e] = index % space.radix[e];
    index /= space.radix[e];
  }
}

bool Candidate(const Network& net, const StabilityMode& mode,
               std::span<const Amount> values) {
  return InModeClass(net, values, mode) &&
         StableByDefinition(net, values, mode);
}

}  // namespace

bool InModeClass(const Network& net, std::span<const Amount> values,
                 const StabilityMode& mode) {
  const FlowClass cls = Classify(net, values);
  switch (mode.kind) {
    case StabilityKind::kFlow:
      return cls == FlowClass::kFlow;
    case StabilityKind::kPreflow:
      return cls == FlowClass::kFlow || cls == FlowClass::kPreflow;
    case StabilityKind::kGammaPreflow:
    case StabilityKind::kQuasiflow: {
      if (cls == FlowClass::kInfeasible) return false;
      const bool quasi = mode.kind == StabilityKind::kQuasiflow;
      const std::vector<Amount> excess = ComputeExcesses(net, values);
      for (VertexId v = 0; v < net.num_vertices(); ++v) {
        if (!net.is_internal(v)) continue;
        const Amount lower = quasi ? -mode.bounds->beta[v] : 0;
        if (excess[v] < lower || excess[v] > mode.bounds->gamma[v]) {
          return false;
        }
      }
      return true;
    }
  }
  return false;
}

bool StableByDefinition(const Network& net, std::span<const Amount> values,
                        const StabilityMode& mode) {
  const std::vector<Amount> excess = ComputeExcesses(net, values);
  auto unsaturated = [&](EdgeId e) { return values[e] < net.capacity(e); };
  auto dominated_at_start = [&](EdgeId first) {
    const VertexId v = net.tail(first);
    if (!net.is_internal(v)) return false;
    const auto out = net.out_edges(v);
    for (std::size_t r = net.out_rank(first) + 1; r < out.size(); ++r) {
      if (values[out[r]] != 0) return false;
    }
    if (mode.kind == StabilityKind::kGammaPreflow) return excess[v] == 0;
    if (mode.kind == StabilityKind::kQuasiflow) return excess[v] <= 0;
    return true;
  };
  auto dominated_at_end = [&](EdgeId last) {
    const VertexId v = net.head(last);
    if (!net.is_internal(v)) return false;
    const auto in = net.in_edges(v);
    for (std::size_t r = net.in_rank(last) + 1; r < in.size(); ++r) {
      if (values[in[r]] != 0) return false;
    }
    if (mode.kind == StabilityKind::kQuasiflow) return excess[v] >= 0;
    return true;
  };

  std::vector<char> interior(net.num_vertices(), 0);
  // Depth-first over walks; returns true on a walk dominated at neither end.
  auto extend = [&](auto&& self, VertexId x) -> bool {
    for (EdgeId e : net.out_edges(x)) {
      if (!unsaturated(e)) continue;
      if (!dominated_at_end(e)) return true;
      const VertexId y = net.head(e);
      if (interior[y]) continue;
      interior[y] = 1;
      const bool found = self(self, y);
      interior[y] = 0;
      if (found) return true;
    }
    return false;
  };
  for (EdgeId first = 0; first < net.num_edges(); ++first) {
    if (!unsaturated(first) || dominated_at_start(first)) continue;
    if (!dominated_at_end(first)) return false;
    const VertexId y = net.head(first);
    interior[y] = 1;
    const bool found = extend(extend, y);
    interior[y] = 0;
    if (found) return false;
  }
  return true;
}

bool StableSet::contains(std::span<const Amount> values) const {
  return std::any_of(members.begin(), members.end(), [&](const auto& m) {
    return std::equal(m.begin(), m.end(), values.begin(), values.end());
  });
}

StableSet EnumerateStable(const Network& net, const StabilityMode& mode) {
  const Space space = AssignmentSpace(net);
  StableSet set;
  std::vector<Amount> values;
  for (std::int64_t i = 0; i < space.size; ++i) {
    Decode(space, i, values);
    if (Candidate(net, mode, values)) set.members.push_back(values);
  }
  return set;
}

StableSet EnumerateStableParallel(const Network& net,
                                  const StabilityMode& mode) {
  const Space space = AssignmentSpace(net);
  std::vector<char> hit(space.size, 0);
#pragma omp parallel
  {
    std::vector<Amount> values;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < space.size; ++i) {
      Decode(space, i, values);
      hit[i] = Candidate(net, mode, values) ? 1 : 0;
    }
  }
  StableSet set;
  std::vector<Amount> values;
  for (std::int64_t i = 0; i < space.size; ++i) {
    if (!hit[i]) continue;
    Decode(space, i, values);
    set.members.push_back(values);
  }
  return set;
}

CrossCheckReport CrossCheck(const Network& net) {
  CrossCheckReport report;
  auto fail = [&](const std::string& what) { report.failures.push_back(what); };
  const Space space = AssignmentSpace(net);

  std::vector<Amount> values;
  const StabilityMode modes[] = {StabilityMode::Flow(),
                                 StabilityMode::Preflow()};
  for (std::int64_t i = 0; i < space.size; ++i) {
    Decode(space, i, values);
    for (const StabilityMode& mode : modes) {
      if (!InModeClass(net, values, mode)) continue;
      ++report.assignments_checked;
      const bool bfs = !SearchWitness(net, values, mode).has_value();
      if (bfs != StableByDefinition(net, values, mode)) {
        fail(std::string("verifier disagrees with the definition (") +
             std::string(StabilityKindName(mode.kind)) + ") on assignment " +
             std::to_string(i));
      }
    }
  }

  const StableSet flows = EnumerateStable(net, StabilityMode::Flow());
  report.stable_flows = static_cast<std::int64_t>(flows.size());
  if (flows.size() == 0) fail("no stable flow exists");
  try {
    if (!flows.contains(RunBasic(net).flow.values())) {
      fail("basic solver output is not a stable flow");
    }
    if (!flows.contains(RunFast(net).flow.values())) {
      fail("fast solver output is not a stable flow");
    }
  } catch (const std::exception& ex) {
    fail(std::string("solver threw: ") + ex.what());
  }

  for (std::size_t i = 0; i < flows.size(); ++i) {
    const auto& f = flows.members[i];
    for (std::size_t j = i; j < flows.size(); ++j) {
      const auto& g = flows.members[j];
      ++report.pairs_checked;
      const std::string pair =
          " for pair " + std::to_string(i) + "," + std::to_string(j);
      if (!TerminalAgreement(net, f, g)) {
        fail("terminal edges differ" + pair);
        continue;
      }
      try {
        const JoinMeetResult fg = JoinMeet(net, f, g);
        const JoinMeetResult gf = JoinMeet(net, g, f);
        if (!flows.contains(fg.join)) fail("join is not stable" + pair);
        if (!flows.contains(fg.meet)) fail("meet is not stable" + pair);
        if (fg.join != gf.join || fg.meet != gf.meet) {
          fail("join/meet not commutative" + pair);
        }
        if (JoinMeet(net, f, fg.meet).join != f ||
            JoinMeet(net, f, fg.join).meet != f) {
          fail("absorption fails" + pair);
        }
        if (i == j && (fg.join != f || fg.meet != f)) {
          fail("join/meet not idempotent" + pair);
        }
      } catch (const Error& ex) {
        fail(std::string(ex.what()) + pair);
      }
    }
  }
  return report;
}

Network RandomTinyNetwork(std::uint64_t seed) {
  Rng rng(seed);
  RandomNetworkParams p;
  p.seed = rng.Next();
  p.num_vertices = static_cast<int>(rng.Below(5) == 0 ? rng.Between(2, 3)
                                                     : rng.Between(4, 6));
  const int extra = p.num_vertices >= 5 ? 1 : 0;
  p.num_sources = static_cast<int>(rng.Between(1, 1 + extra));
  p.num_sinks = static_cast<int>(rng.Between(1, 1 + extra));
  const int most = std::min(
      kOracleMaxEdges,
      LegalPairCount(p.num_vertices, p.num_sources, p.num_sinks));
  p.num_edges = static_cast<int>(rng.Between(std::max(1, most - 4), most));
  p.max_capacity = kOracleMaxCapacity;
  return RandomNetwork(p);
}

}  // namespace stableflow
