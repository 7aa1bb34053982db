#include "stableflow/flow.h"

#include <utility>

#include "stableflow/error.h"

namespace stableflow {

FlowAssignment::FlowAssignment(const Network& net)
    : net_(&net),
      values_(net.num_edges(), 0),
      excess_(net.num_vertices(), 0) {}

FlowAssignment::FlowAssignment(const Network& net, std::vector<Amount> values)
    : net_(&net), values_(std::move(values)) {
  if (static_cast<int>(values_.size()) != net.num_edges()) {
    throw Error(ErrorCode::kInvalidArgument,
                "flow has " + std::to_string(values_.size()) +
                    " values for " + std::to_string(net.num_edges()) +
                    " edges");
  }
  excess_ = ComputeExcesses(net, values_);
}

bool FlowAssignment::ExcessCacheConsistent() const {
  return ComputeExcesses(*net_, values_) == excess_;
}

std::string_view FlowClassName(FlowClass c) {
  switch (c) {
    case FlowClass::kInfeasible: return "Infeasible";
    case FlowClass::kFeasibleOnly: return "FeasibleOnly";
    case FlowClass::kPreflow: return "Preflow";
    case FlowClass::kFlow: return "Flow";
  }
  return "Unknown";
}

std::vector<Amount> ComputeExcesses(const Network& net,
                                    std::span<const Amount> values) {
  std::vector<Amount> excess(net.num_vertices(), 0);
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    excess[net.head(e)] += values[e];
    excess[net.tail(e)] -= values[e];
  }
  return excess;
}

FlowClass Classify(const Network& net, std::span<const Amount> values) {
  for (EdgeId e = 0; e < net.num_edges(); ++e) {
    if (values[e] < 0 || values[e] > net.capacity(e)) {
      return FlowClass::kInfeasible;
    }
  }
  const std::vector<Amount> excess = ComputeExcesses(net, values);
  bool balanced = true;
  for (VertexId v = 0; v < net.num_vertices(); ++v) {
    if (net.is_source(v)) continue;
    if (excess[v] < 0) return FlowClass::kFeasibleOnly;
    if (net.is_internal(v) && excess[v] != 0) balanced = false;
  }
  return balanced ? FlowClass::kFlow : FlowClass::kPreflow;
}

Amount ValueOf(const Network& net, std::span<const Amount> values) {
  Amount value = 0;
  for (VertexId t : net.sinks()) {
    for (EdgeId e : net.in_edges(t)) value += values[e];
  }
  return value;
}

}  // namespace stableflow
