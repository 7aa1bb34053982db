#include "stableflow/network.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "stableflow/error.h"
#include "stableflow/random.h"

namespace stableflow {
namespace {

[[noreturn]] void Fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

std::string EdgeName(EdgeId e, const Edge& edge) {
  return "edge " + std::to_string(e) + " (" + std::to_string(edge.tail) +
         "->" + std::to_string(edge.head) + ")";
}

// Checks that `pref` is a permutation of `incident` and returns the ranks.
void CheckPermutation(VertexId v, const char* side,
                      const std::vector<EdgeId>& incident,
                      const std::vector<EdgeId>& pref,
                      std::vector<int>& rank) {
  if (pref.size() != incident.size()) {
    Fail(ErrorCode::kBadPreferencePermutation,
         std::string(side) + " preference of vertex " + std::to_string(v) +
             " lists " + std::to_string(pref.size()) + " edges, expected " +
             std::to_string(incident.size()));
  }
  std::vector<EdgeId> sorted_pref = pref;
  std::sort(sorted_pref.begin(), sorted_pref.end());
  if (sorted_pref != incident) {
    Fail(ErrorCode::kBadPreferencePermutation,
         std::string(side) + " preference of vertex " + std::to_string(v) +
             " is not a permutation of its incident edges");
  }
  for (std::size_t i = 0; i < pref.size(); ++i) {
    rank[pref[i]] = static_cast<int>(i);
  }
}

}  // namespace

Network Network::Build(NetworkSpec spec) {
  const int n = spec.num_vertices;
  if (n < 0) Fail(ErrorCode::kInvalidArgument, "negative vertex count");
  const int m = static_cast<int>(spec.edges.size());
  spec.in_pref.resize(n);
  spec.out_pref.resize(n);
  if (static_cast<int>(spec.in_pref.size()) != n ||
      static_cast<int>(spec.out_pref.size()) != n) {
    Fail(ErrorCode::kInvalidArgument, "preference table size mismatch");
  }

  Network net;
  net.num_vertices_ = n;
  net.roles_.assign(n, VertexRole::kInternal);
  auto mark = [&](const std::vector<VertexId>& list, VertexRole role,
                  const char* what) {
    for (VertexId v : list) {
      if (v < 0 || v >= n) {
        Fail(ErrorCode::kInvalidArgument,
             std::string(what) + " " + std::to_string(v) + " out of range");
      }
      if (net.roles_[v] != VertexRole::kInternal) {
        Fail(ErrorCode::kTerminalOverlap,
             "vertex " + std::to_string(v) + " listed twice as a terminal");
      }
      net.roles_[v] = role;
    }
  };
  mark(spec.sources, VertexRole::kSource, "source");
  mark(spec.sinks, VertexRole::kSink, "sink");

  net.in_.assign(n, {});
  net.out_.assign(n, {});
  std::set<std::pair<VertexId, VertexId>> seen;
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& edge = spec.edges[e];
    if (edge.tail < 0 || edge.tail >= n || edge.head < 0 || edge.head >= n) {
      Fail(ErrorCode::kInvalidArgument,
           EdgeName(e, edge) + " has an endpoint out of range");
    }
    if (edge.tail == edge.head) Fail(ErrorCode::kSelfLoop, EdgeName(e, edge));
    if (net.roles_[edge.head] == VertexRole::kSource) {
      Fail(ErrorCode::kEdgeIntoSource, EdgeName(e, edge));
    }
    if (net.roles_[edge.tail] == VertexRole::kSink) {
      Fail(ErrorCode::kEdgeOutOfSink, EdgeName(e, edge));
    }
    if (edge.capacity < 0 || edge.capacity > kMaxCapacity) {
      Fail(ErrorCode::kCapacityOutOfRange, EdgeName(e, edge));
    }
    if (!seen.emplace(edge.tail, edge.head).second) {
      Fail(ErrorCode::kDuplicateEdge, EdgeName(e, edge));
    }
    net.out_[edge.tail].push_back(e);
    net.in_[edge.head].push_back(e);
    net.total_capacity_ += edge.capacity;
  }

  net.in_rank_.assign(m, -1);
  net.out_rank_.assign(m, -1);
  for (VertexId v = 0; v < n; ++v) {
    if (net.roles_[v] != VertexRole::kInternal) {
      if (!spec.in_pref[v].empty() || !spec.out_pref[v].empty()) {
        Fail(ErrorCode::kPreferenceListOnTerminal,
             "terminal " + std::to_string(v) + " carries a preference list");
      }
      for (std::size_t i = 0; i < net.in_[v].size(); ++i) {
        net.in_rank_[net.in_[v][i]] = static_cast<int>(i);
      }
      for (std::size_t i = 0; i < net.out_[v].size(); ++i) {
        net.out_rank_[net.out_[v][i]] = static_cast<int>(i);
      }
      continue;
    }
    CheckPermutation(v, "in", net.in_[v], spec.in_pref[v], net.in_rank_);
    CheckPermutation(v, "out", net.out_[v], spec.out_pref[v], net.out_rank_);
    net.in_[v] = std::move(spec.in_pref[v]);
    net.out_[v] = std::move(spec.out_pref[v]);
  }

  net.edges_ = std::move(spec.edges);
  net.sources_ = std::move(spec.sources);
  net.sinks_ = std::move(spec.sinks);
  std::sort(net.sources_.begin(), net.sources_.end());
  std::sort(net.sinks_.begin(), net.sinks_.end());
  return net;
}

NetworkSpec Network::ToSpec() const {
  NetworkSpec spec;
  spec.num_vertices = num_vertices_;
  spec.edges = edges_;
  spec.sources = sources_;
  spec.sinks = sinks_;
  spec.in_pref.assign(num_vertices_, {});
  spec.out_pref.assign(num_vertices_, {});
  for (VertexId v = 0; v < num_vertices_; ++v) {
    if (!is_internal(v)) continue;
    spec.in_pref[v] = in_[v];
    spec.out_pref[v] = out_[v];
  }
  return spec;
}

bool operator==(const Network& a, const Network& b) {
  if (a.num_vertices_ != b.num_vertices_ || a.roles_ != b.roles_ ||
      a.in_ != b.in_ || a.out_ != b.out_ ||
      a.edges_.size() != b.edges_.size()) {
    return false;
  }
  for (std::size_t e = 0; e < a.edges_.size(); ++e) {
    const Edge& x = a.edges_[e];
    const Edge& y = b.edges_[e];
    if (x.tail != y.tail || x.head != y.head || x.capacity != y.capacity) {
      return false;
    }
  }
  return true;
}

Network FromAllocation(const AllocationInstance& instance) {
  const int left = instance.num_left;
  const int right = instance.num_right;
  const int total = left + right;
  if (left < 0 || right < 0 ||
      static_cast<int>(instance.quota.size()) != total) {
    throw Error(ErrorCode::kInvalidArgument, "quota table size mismatch");
  }
  const int m = static_cast<int>(instance.edges.size());
  const VertexId s = total;
  const VertexId t = total + 1;

  NetworkSpec spec;
  spec.num_vertices = total + 2;
  spec.sources = {s};
  spec.sinks = {t};
  spec.in_pref.assign(spec.num_vertices, {});
  spec.out_pref.assign(spec.num_vertices, {});
  for (EdgeId e = 0; e < m; ++e) {
    const Edge& edge = instance.edges[e];
    if (edge.tail < 0 || edge.tail >= left || edge.head < left ||
        edge.head >= total) {
      throw Error(ErrorCode::kInvalidArgument,
                  "allocation edge " + std::to_string(e) +
                      " must join a left vertex to a right vertex");
    }
    spec.edges.push_back(edge);
  }
  if (static_cast<int>(instance.preference.size()) != total) {
    throw Error(ErrorCode::kInvalidArgument, "preference table size mismatch");
  }
  for (VertexId u = 0; u < left; ++u) {
    const EdgeId id = static_cast<EdgeId>(spec.edges.size());
    spec.edges.push_back({s, u, instance.quota[u]});
    spec.in_pref[u] = {id};
    spec.out_pref[u] = instance.preference[u];
  }
  for (VertexId v = left; v < total; ++v) {
    const EdgeId id = static_cast<EdgeId>(spec.edges.size());
    spec.edges.push_back({v, t, instance.quota[v]});
    spec.in_pref[v] = instance.preference[v];
    spec.out_pref[v] = {id};
  }
  return Network::Build(std::move(spec));
}

Network RandomNetwork(const RandomNetworkParams& params) {
  const int n = params.num_vertices;
  const int num_sources = params.num_sources;
  const int num_sinks = params.num_sinks;
  if (n < 2 || num_sources < 1 || num_sinks < 1 ||
      num_sources + num_sinks > n || params.num_edges < 0 ||
      params.max_capacity < 0 || params.max_capacity > kMaxCapacity) {
    throw Error(ErrorCode::kInfeasibleParameters,
                "need n >= 2, at least one source and one sink, and "
                "sources + sinks <= n");
  }
  auto role = [&](VertexId v) {
    if (v < num_sources) return VertexRole::kSource;
    if (v >= n - num_sinks) return VertexRole::kSink;
    return VertexRole::kInternal;
  };

  std::vector<std::pair<VertexId, VertexId>> pairs;
  for (VertexId u = 0; u < n; ++u) {
    if (role(u) == VertexRole::kSink) continue;
    for (VertexId v = 0; v < n; ++v) {
      if (u == v || role(v) == VertexRole::kSource) continue;
      pairs.emplace_back(u, v);
    }
  }
  if (params.num_edges > static_cast<int>(pairs.size())) {
    throw Error(ErrorCode::kInfeasibleParameters,
                "requested " + std::to_string(params.num_edges) +
                    " edges but only " + std::to_string(pairs.size()) +
                    " legal vertex pairs exist");
  }

  Rng rng(params.seed);
  // Partial Fisher-Yates: the first num_edges pairs form a uniform sample.
  for (int i = 0; i < params.num_edges; ++i) {
    const std::size_t j = i + rng.Below(pairs.size() - i);
    std::swap(pairs[i], pairs[j]);
  }

  NetworkSpec spec;
  spec.num_vertices = n;
  for (VertexId v = 0; v < num_sources; ++v) spec.sources.push_back(v);
  for (VertexId v = n - num_sinks; v < n; ++v) spec.sinks.push_back(v);
  spec.in_pref.assign(n, {});
  spec.out_pref.assign(n, {});
  for (int i = 0; i < params.num_edges; ++i) {
    const auto [u, v] = pairs[i];
    spec.edges.push_back({u, v, rng.Between(0, params.max_capacity)});
    if (role(u) == VertexRole::kInternal) spec.out_pref[u].push_back(i);
    if (role(v) == VertexRole::kInternal) spec.in_pref[v].push_back(i);
  }
  for (VertexId v = 0; v < n; ++v) {
    rng.Shuffle(std::span(spec.in_pref[v]));
    rng.Shuffle(std::span(spec.out_pref[v]));
  }
  return Network::Build(std::move(spec));
}

int LegalPairCount(int num_vertices, int num_sources, int num_sinks) {
  const int internal = num_vertices - num_sources - num_sinks;
  return (num_sources + internal) * (internal + num_sinks) - internal;
}

}  // namespace stableflow
