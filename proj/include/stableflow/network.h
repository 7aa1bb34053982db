#ifndef STABLEFLOW_NETWORK_H_
#define STABLEFLOW_NETWORK_H_

#include <cstdint>
#include <span>
#include <vector>

namespace stableflow {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;
using Amount = std::int64_t;

inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;

// Largest capacity accepted by validation. Keeps every sum of capacities
// (and hence every excess) far away from int64 overflow.
inline constexpr Amount kMaxCapacity = Amount{1} << 31;

struct Edge {
  VertexId tail = kNoVertex;
  VertexId head = kNoVertex;
  Amount capacity = 0;
};

enum class VertexRole : std::uint8_t { kInternal, kSource, kSink };

// Unvalidated description of a network. `in_pref[v]` / `out_pref[v]` list
// edge ids most preferred first; they must be empty for terminals and for
// internal vertices without edges on that side.
struct NetworkSpec {
  int num_vertices = 0;
  std::vector<Edge> edges;
  std::vector<VertexId> sources;
  std::vector<VertexId> sinks;
  std::vector<std::vector<EdgeId>> in_pref;
  std::vector<std::vector<EdgeId>> out_pref;
};

// Immutable, validated network with strict preference orders at every
// internal vertex. For terminals the incidence lists are ordered by edge id.
class Network {
 public:
  // Validates `spec` and throws stableflow::Error on any violation: edges
  // into sources or out of sinks, loops, parallel edges, capacities outside
  // [0, kMaxCapacity], preference lists that are not permutations of the
  // incident edges, or preference lists attached to terminals.
  static Network Build(NetworkSpec spec);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  VertexId tail(EdgeId e) const { return edges_[e].tail; }
  VertexId head(EdgeId e) const { return edges_[e].head; }
  Amount capacity(EdgeId e) const { return edges_[e].capacity; }
  std::span<const Edge> edges() const { return edges_; }

  VertexRole role(VertexId v) const { return roles_[v]; }
  bool is_source(VertexId v) const { return roles_[v] == VertexRole::kSource; }
  bool is_sink(VertexId v) const { return roles_[v] == VertexRole::kSink; }
  bool is_terminal(VertexId v) const {
    return roles_[v] != VertexRole::kInternal;
  }
  bool is_internal(VertexId v) const {
    return roles_[v] == VertexRole::kInternal;
  }
  std::span<const VertexId> sources() const { return sources_; }
  std::span<const VertexId> sinks() const { return sinks_; }

  // Incident edges, most preferred first for internal vertices.
  std::span<const EdgeId> in_edges(VertexId v) const { return in_[v]; }
  std::span<const EdgeId> out_edges(VertexId v) const { return out_[v]; }

  // Position of `e` in in_edges(head(e)) / out_edges(tail(e)).
  int in_rank(EdgeId e) const { return in_rank_[e]; }
  int out_rank(EdgeId e) const { return out_rank_[e]; }

  Amount total_capacity() const { return total_capacity_; }

  // The spec this network was built from, with terminal lists sorted.
  NetworkSpec ToSpec() const;

  friend bool operator==(const Network& a, const Network& b);

 private:
  Network() = default;

  int num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexRole> roles_;
  std::vector<VertexId> sources_;
  std::vector<VertexId> sinks_;
  std::vector<std::vector<EdgeId>> in_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<int> in_rank_;
  std::vector<int> out_rank_;
  Amount total_capacity_ = 0;
};

// Bipartite stable allocation instance. Left vertices are 0..num_left-1,
// right vertices num_left..num_left+num_right-1. `edges[i]` must have its
// tail on the left and head on the right. `preference[v]` orders the edges
// incident to v, most preferred first.
struct AllocationInstance {
  int num_left = 0;
  int num_right = 0;
  std::vector<Edge> edges;
  std::vector<Amount> quota;
  std::vector<std::vector<EdgeId>> preference;
};

// Adds a source s (id num_left+num_right) and a sink t (id s+1); allocation
// edge i keeps id i, the edge s->u gets id m+u and the edge v->t gets id
// m+v for right vertex v.
Network FromAllocation(const AllocationInstance& instance);

struct RandomNetworkParams {
  int num_vertices = 2;
  int num_edges = 1;
  Amount max_capacity = 5;
  int num_sources = 1;
  int num_sinks = 1;
  std::uint64_t seed = 0;
};

// Uniformly samples a legal edge set and capacities in [0, max_capacity];
// preference lists are uniform permutations. Pure function of `params`.
// Sources are vertices [0, num_sources), sinks the last num_sinks ids.
Network RandomNetwork(const RandomNetworkParams& params);

// Number of ordered pairs that may carry an edge when sources are
// [0, num_sources) and sinks the last num_sinks ids.
int LegalPairCount(int num_vertices, int num_sources, int num_sinks);

}  // namespace stableflow

#endif  // STABLEFLOW_NETWORK_H_
