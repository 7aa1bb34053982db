#ifndef STABLEFLOW_FLOW_H_
#define STABLEFLOW_FLOW_H_

#include <span>
#include <string_view>
#include <vector>

#include "stableflow/network.h"

namespace stableflow {

// Edge values of a (pre)flow together with the per-vertex excess
// (inflow minus outflow), kept current on every update.
class FlowAssignment {
 public:
  explicit FlowAssignment(const Network& net);
  FlowAssignment(const Network& net, std::vector<Amount> values);

  const Network& network() const { return *net_; }
  int size() const { return static_cast<int>(values_.size()); }

  Amount operator[](EdgeId e) const { return values_[e]; }
  Amount excess(VertexId v) const { return excess_[v]; }
  std::span<const Amount> values() const { return values_; }
  std::span<const Amount> excesses() const { return excess_; }

  void Set(EdgeId e, Amount value) { Add(e, value - values_[e]); }
  void Add(EdgeId e, Amount delta) {
    values_[e] += delta;
    excess_[net_->head(e)] += delta;
    excess_[net_->tail(e)] -= delta;
  }

  bool saturated(EdgeId e) const { return values_[e] == net_->capacity(e); }
  bool free(EdgeId e) const { return values_[e] == 0; }
  bool middle(EdgeId e) const {
    return values_[e] > 0 && values_[e] < net_->capacity(e);
  }
  Amount residual(EdgeId e) const { return net_->capacity(e) - values_[e]; }

  // True iff the cached excess table equals a from-scratch recomputation.
  bool ExcessCacheConsistent() const;

  friend bool operator==(const FlowAssignment& a, const FlowAssignment& b) {
    return a.values_ == b.values_;
  }

 private:
  const Network* net_;
  std::vector<Amount> values_;
  std::vector<Amount> excess_;
};

enum class FlowClass { kInfeasible, kFeasibleOnly, kPreflow, kFlow };

std::string_view FlowClassName(FlowClass c);

// Inflow minus outflow at every vertex, computed from scratch.
std::vector<Amount> ComputeExcesses(const Network& net,
                                    std::span<const Amount> values);

FlowClass Classify(const Network& net, std::span<const Amount> values);
inline FlowClass Classify(const FlowAssignment& f) {
  return Classify(f.network(), f.values());
}

// Total excess over the sinks.
Amount ValueOf(const Network& net, std::span<const Amount> values);
inline Amount ValueOf(const FlowAssignment& f) {
  return ValueOf(f.network(), f.values());
}

// Per-vertex excess bounds for the generalized problems: excess(v) must lie
// in [-beta[v], gamma[v]] at internal v. Both tables have one entry per
// vertex; terminal entries are zero.
struct ExcessBounds {
  std::vector<Amount> gamma;
  std::vector<Amount> beta;

  static ExcessBounds Zero(const Network& net) {
    return {std::vector<Amount>(net.num_vertices(), 0),
            std::vector<Amount>(net.num_vertices(), 0)};
  }
};

}  // namespace stableflow

#endif  // STABLEFLOW_FLOW_H_
