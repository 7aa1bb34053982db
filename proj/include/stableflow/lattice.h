#ifndef STABLEFLOW_LATTICE_H_
#define STABLEFLOW_LATTICE_H_

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "stableflow/flow.h"
#include "stableflow/network.h"

namespace stableflow {

// f(e) == g(e) on every edge with a terminal end.
bool TerminalAgreement(const Network& net, std::span<const Amount> f,
                       std::span<const Amount> g);

enum class ComponentType { kA, kB, kL, kR };
std::string_view ComponentTypeName(ComponentType t);

// A cycle of the difference graph: edges of A are traversed forward, edges
// of B backward.
struct DiffCycle {
  struct Step {
    EdgeId edge = kNoEdge;
    bool forward = true;
  };
  VertexId start = kNoVertex;
  std::vector<Step> steps;
  Amount weight = 0;
};

// The difference of two flows f and g. A = {f > g}, B = {g > f}, omega =
// |f - g|. Cycles are disjoint in weight: summing their weights per edge
// gives omega. component[e] is the connected component of e in the
// undirected graph on A and B, or -1 for edges outside both.
struct DiffDecomposition {
  std::vector<char> in_a;
  std::vector<char> in_b;
  std::vector<Amount> omega;
  std::vector<DiffCycle> cycles;
  std::vector<int> component;
  int num_components = 0;
  // Filled by ClassifyComponents.
  std::vector<ComponentType> types;
};

// Throws NotACirculation when f and g differ on a terminal edge or omega is
// not a circulation once B is reversed. Cycles are peeled greedily starting
// from the lowest vertex with weight left.
DiffDecomposition DecomposeDifference(const Network& net,
                                      std::span<const Amount> f,
                                      std::span<const Amount> g);

// Types every component. Rich components are typed from the vertices where
// a cycle passes from an A edge to a B edge; where the cycles give no such
// vertex, from the order of A and B edges at vertices of the component.
// Throws MixedOrientation when both orientations occur in one component.
const std::vector<ComponentType>& ClassifyComponents(const Network& net,
                                                     DiffDecomposition& dec);

struct JoinMeetResult {
  std::vector<Amount> join;  // h
  std::vector<Amount> meet;  // l
};

// h takes f on components of type A and R and g on B and L; l the reverse.
JoinMeetResult JoinMeet(const Network& net, std::span<const Amount> f,
                        std::span<const Amount> g);

// a dominates b on the ordered edge list `order`: a == b there, or some
// pivot has a > b with a >= b before it and a <= b after it.
bool Dominates(std::span<const EdgeId> order, std::span<const Amount> a,
               std::span<const Amount> b);

// Extends a stable preflow to a stable flow that carries at least as much
// into every sink edge. Throws ModeMismatch if f is not a stable preflow and
// StateReconstructionFailed if the rebuilt solver state or the result is
// inconsistent.
std::vector<Amount> CompletePreflow(const Network& net,
                                    std::span<const Amount> f);

}  // namespace stableflow

#endif  // STABLEFLOW_LATTICE_H_
